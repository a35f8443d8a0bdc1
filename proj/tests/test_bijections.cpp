#include <gtest/gtest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "ptab/bijections.hpp"
#include "ptab/statistics.hpp"

using namespace ptab;

namespace {

PermutationTableau sample_tableau() {
  return PermutationTableau::from_rows(4, 8, {"1100", "0010", "1111", "001"});
}

PermutationTableau staircase_tableau() {
  return PermutationTableau::from_rows(3, 6, {"111", "01", "1"});
}

// Naive descent bottoms/tops and weak excedance bottoms/tops of a word.
std::set<int> naive_desbots(const std::vector<int>& w) {
  std::set<int> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] > w[i + 1]) out.insert(w[i + 1]);
  }
  return out;
}

std::set<int> naive_destops(const std::vector<int>& w) {
  std::set<int> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] > w[i + 1]) out.insert(w[i]);
  }
  return out;
}

std::set<int> naive_wexbots(const std::vector<int>& w) {
  std::set<int> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] >= static_cast<int>(i + 1)) out.insert(static_cast<int>(i + 1));
  }
  return out;
}

std::set<int> naive_wextops(const std::vector<int>& w) {
  std::set<int> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] >= static_cast<int>(i + 1)) out.insert(w[i]);
  }
  return out;
}

// Number of descents y x to the right of letter l with x < l < y.
int naive_rembr(const std::vector<int>& w, int letter) {
  const auto at = std::find(w.begin(), w.end(), letter) - w.begin();
  int count = 0;
  for (std::size_t i = at + 1; i + 1 < w.size(); ++i) {
    if (w[i] > letter && w[i + 1] < letter) ++count;
  }
  return count;
}

// C_EE(i) + C_NN(i) for position i, straight from the inequalities.
int naive_crossings_at(const std::vector<int>& w, int i) {
  const int n = static_cast<int>(w.size());
  const int ai = w[i - 1];
  int count = 0;
  for (int j = 1; j <= n; ++j) {
    const int aj = w[j - 1];
    if (j < i && i <= aj && aj < ai) ++count;
    if (ai < aj && aj < i && i < j) ++count;
  }
  return count;
}

}  // namespace

// --------------------------------------------------------------------- Phi

TEST(Phi, WorkedExamples) {
  EXPECT_EQ(phi(sample_tableau()).to_string(), "74836215");
  EXPECT_EQ(phi(staircase_tableau()).to_string(), "514263");
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(phi(PermutationTableau::empty(n)), Permutation::identity(n));
}

TEST(PhiInverse, WorkedExamples) {
  EXPECT_EQ(phi_inverse(Permutation::parse("514263")), staircase_tableau());
  EXPECT_EQ(phi_inverse(Permutation::parse("74836215")), sample_tableau());
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(phi_inverse(Permutation::identity(n)), PermutationTableau::empty(n));
}

TEST(PhiInverse, MatchesExhaustiveSearch) {
  std::map<Permutation, PermutationTableau> preimage;
  for_each_tableau(4, 8, [&](const PermutationTableau& t) { preimage.emplace(phi(t), t); });
  EXPECT_EQ(preimage.at(Permutation::parse("74836215")), sample_tableau());
}

TEST(Phi, BijectionRespectingWeakExcedances) {
  for (int n = 0; n <= 7; ++n) {
    std::set<Permutation> images;
    for (int k = 0; k <= n; ++k) {
      for_each_tableau(k, n, [&](const PermutationTableau& t) {
        const auto p = phi(t);
        EXPECT_EQ(oracle::weak_excedances(p.word()), k);
        images.insert(p);
        EXPECT_EQ(phi_inverse(p), t);
      });
    }
    EXPECT_EQ(images.size(), factorial(n));
  }
}

TEST(Phi, VerticalLabelsAreWexBottomsAndEmptyRowsAreFixedPoints) {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 1; k <= n; ++k) {
      for_each_tableau(k, n, [&](const PermutationTableau& t) {
        const auto p = phi(t);
        const auto path = path_labeling(t);
        const auto vertical = path.vertical_labels();
        EXPECT_EQ(std::set<int>(vertical.begin(), vertical.end()), naive_wexbots(p.word()));
        for (int row = 0; row < k; ++row) {
          bool has_one = false;
          for (int c = 0; c < t.shape().row_length(row); ++c) has_one = has_one || t.at(row, c) == 1;
          EXPECT_EQ(p(path.row_label[row]) == path.row_label[row], !has_one);
        }
      });
    }
  }
}

TEST(ZigZag, ExitSideAndDisjointEdges) {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 1; k <= n; ++k) {
      for_each_tableau(k, n, [&](const PermutationTableau& t) {
        const auto path = path_labeling(t);
        std::set<std::pair<ZigZagTrace::Node, ZigZagTrace::Node>> seen;
        for (const auto& trace : zigzag_traces(t)) {
          if (path.kind[trace.label] == StepKind::vertical) {
            EXPECT_GE(trace.exit_label, trace.label);
          } else {
            EXPECT_LT(trace.exit_label, trace.label);
          }
          for (const auto& edge : trace.directed_edges()) EXPECT_TRUE(seen.insert(edge).second);
        }
      });
    }
  }
}

TEST(ZigZag, TraceOfLabelOneInSample) {
  const auto t = sample_tableau();
  const auto trace = zigzag_trace(t, path_labeling(t), 1);
  EXPECT_EQ(trace.exit_label, 7);
  const auto json = to_json(trace);
  EXPECT_EQ(json["label"], 1);
  EXPECT_EQ(json["exit"], 7);
}

TEST(Phi, BlackVerticesAndTwosMatchCrossingsAndAlignments) {
  for (int n = 1; n <= 7; ++n) {
    for (int k = 1; k <= n; ++k) {
      for_each_tableau(k, n, [&](const PermutationTableau& t) {
        const auto p = phi(t);
        const auto s = tableau_stats(t);
        const auto ac = alignments_crossings(p);
        EXPECT_EQ(s.black, ac.total_c_ee + ac.total_c_nn);
        EXPECT_EQ(s.twos, ac.total_a_ne);
      });
    }
  }
}

// -------------------------------------------------------- relative sequence

TEST(RelativeSequence, SampleTableau) {
  const auto seq = relative_sequence(sample_tableau());
  ASSERT_EQ(seq.size(), 5U);
  EXPECT_EQ(seq[0], Biword::of(Permutation::parse("74836215")));
  EXPECT_EQ(seq[1], Biword({7, 4, 8, 6, 2, 1, 5}, {1, 2, 3, 5, 6, 7, 8}));
  EXPECT_EQ(seq[2], Biword({7, 8, 1, 5}, {1, 3, 7, 8}));
  EXPECT_EQ(seq[3], Biword({7, 8, 5}, {1, 3, 8}));
  EXPECT_TRUE(seq[4].empty());
}

TEST(RelativeSequence, EmptyTableauIsJustTheIdentity) {
  const auto seq = relative_sequence(PermutationTableau::empty(4));
  ASSERT_EQ(seq.size(), 1U);
  EXPECT_EQ(seq[0], Biword::of(Permutation::identity(4)));
}

TEST(RelativeSequence, TruncationsOfSampleTableau) {
  const auto t = sample_tableau();
  EXPECT_EQ(phi(truncate_columns(t, 1)).to_string(), "6375214");
  EXPECT_EQ(phi(truncate_columns(t, 2)).to_string(), "3412");
  EXPECT_EQ(phi(truncate_columns(t, 3)).to_string(), "231");
  EXPECT_TRUE(phi(truncate_columns(t, 4)).empty());
  EXPECT_THROW(truncate_columns(t, 5), std::invalid_argument);
}

TEST(RelativeSequence, AllZeroRowBreaksCongruence) {
  // pi_0 = 321 keeps 2 -> 2 through the deletion of 3 -> 1, while the cut
  // tableau is empty.
  const auto t = PermutationTableau::from_rows(2, 3, {"1", "0"});
  const auto seq = relative_sequence(t);
  ASSERT_EQ(seq.size(), 2U);
  EXPECT_EQ(seq[1], Biword({3, 2}, {1, 2}));
  EXPECT_TRUE(phi(truncate_columns(t, 1)).empty());
}

TEST(RelativeSequence, CongruentToTruncatedTableaux) {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 1; k <= n; ++k) {
      for_each_tableau(k, n, [&](const PermutationTableau& t) {
        // An all-zero row is a fixed point of pi_0 that the cut removes but the
        // sequence keeps until some later deletion disturbs its rank, so the
        // congruence only holds for tableaux without such rows.
        const auto rows = t.rows();
        if (static_cast<int>(rows.size()) != k) return;
        for (const auto& row : rows) {
          if (row.find('1') == std::string::npos) return;
        }
        const auto seq = relative_sequence(t);
        for (int i = 0; i < static_cast<int>(seq.size()); ++i) {
          const auto cut = truncate_columns(t, i);
          EXPECT_TRUE(congruent(seq[i], Biword::of(phi(cut)))) << to_text(t) << " i=" << i;
        }
      });
    }
  }
}

// --------------------------------------------------------------------- Psi

TEST(Psi, WorkedExample) {
  const auto pi = Permutation::parse("215896374");
  EXPECT_EQ(psi(pi).to_string(), "162593847");
  EXPECT_EQ(psi_inverse(Permutation::parse("162593847")), pi);
  const auto data = psi_data(pi);
  EXPECT_EQ(data.rembr[5], 2);
  EXPECT_EQ(data.rembr[6], 1);
  EXPECT_EQ(data.rembr[8], 1);
}

TEST(Psi, IdentityGoesToLongCycle) {
  EXPECT_EQ(psi(Permutation::identity(1)), Permutation::identity(1));
  for (int n = 2; n <= 9; ++n) {
    std::vector<int> cycle{n};
    for (int i = 1; i < n; ++i) cycle.push_back(i);
    EXPECT_EQ(psi(Permutation::identity(n)), Permutation(cycle));
    EXPECT_EQ(psi_inverse(Permutation(cycle)), Permutation::identity(n));
  }
}

TEST(Psi, DefiningPropertiesHoldOnS7) {
  for (const auto& w : oracle::all_words(7)) {
    const auto tau = psi(Permutation(w)).word();
    const int n = static_cast<int>(w.size());
    std::set<int> bottoms{1}, tops{n};
    for (int d : naive_desbots(w)) bottoms.insert(d + 1);
    for (int d : naive_destops(w)) tops.insert(d - 1);
    ASSERT_EQ(naive_wexbots(tau), bottoms);
    ASSERT_EQ(naive_wextops(tau), tops);
    for (int i = 1; i <= n; ++i) ASSERT_EQ(naive_crossings_at(tau, i), naive_rembr(w, i));
    ASSERT_EQ(oracle::descents(w) + 1, oracle::weak_excedances(tau));
  }
}

TEST(PsiInverse, MatchesExhaustiveInversion) {
  for (int n = 1; n <= 7; ++n) {
    std::map<Permutation, Permutation> preimage;
    for (const auto& p : all_permutations(n)) {
      EXPECT_TRUE(preimage.emplace(psi(p), p).second) << "psi not injective at " << p.to_string();
    }
    ASSERT_EQ(preimage.size(), factorial(n));
    for (const auto& [tau, pi] : preimage) {
      ASSERT_EQ(psi_inverse(tau), pi) << tau.to_string();
      ASSERT_EQ(psi(psi_inverse(pi)), pi);
    }
  }
}

TEST(PsiInverse, DataExtraction) {
  const auto tau = Permutation::parse("162593847");
  EXPECT_EQ(psi_inverse_data(tau), psi_data(Permutation::parse("215896374")));
  EXPECT_THROW(permutation_from_psi_data(3, PsiData{{2}, {}, {0, 0, 0, 0}}), std::logic_error);
}

TEST(PatternWorld, ComposesBothMaps) {
  EXPECT_EQ(tableau_to_pattern_world(sample_tableau()), psi_inverse(Permutation::parse("74836215")));
  for (int n = 1; n <= 5; ++n) {
    EXPECT_EQ(tableau_to_pattern_world(PermutationTableau::empty(n)), psi_inverse(Permutation::identity(n)));
  }
}
