#include <gtest/gtest.h>

#include <map>
#include <set>
#include <tuple>

#include "oracles.hpp"
#include "ptab/biword.hpp"
#include "ptab/permutation.hpp"
#include "ptab/statistics.hpp"
#include "ptab/tableau.hpp"

using namespace ptab;

namespace {

PermutationTableau sample_tableau() {
  return PermutationTableau::from_rows(4, 8, {"1100", "0010", "1111", "001"});
}

std::vector<std::uint8_t> bits(const std::string& s) {
  std::vector<std::uint8_t> out;
  for (char c : s) out.push_back(static_cast<std::uint8_t>(c - '0'));
  return out;
}

}  // namespace

// ------------------------------------------------------------ permutations

TEST(Permutation, ParsesDigitsCommasAndSpaces) {
  const std::vector<int> expected{3, 1, 2};
  EXPECT_EQ(Permutation::parse("312").word(), expected);
  EXPECT_EQ(Permutation::parse("3,1,2").word(), expected);
  EXPECT_EQ(Permutation::parse("3 1 2").word(), expected);
  EXPECT_EQ(Permutation::parse("10,1,2,3,4,5,6,7,8,9").size(), 10);
  EXPECT_TRUE(Permutation::parse("").empty());
}

TEST(Permutation, RejectsNonBijections) {
  EXPECT_THROW(Permutation::parse("1123"), MalformedPermutation);
  EXPECT_THROW(Permutation::parse("124"), MalformedPermutation);
  EXPECT_THROW(Permutation::parse("1,x,2"), MalformedPermutation);
  EXPECT_THROW(Permutation(std::vector<int>{0, 1}), MalformedPermutation);
}

TEST(Permutation, InverseAndFormatting) {
  const auto p = Permutation::parse("514263");
  EXPECT_EQ(p.inverse().inverse(), p);
  EXPECT_EQ(p.inverse().to_string(), "246315");
  EXPECT_EQ(Permutation::parse("2,1,3,4,5,6,7,8,9,10").to_string(), "2,1,3,4,5,6,7,8,9,10");
}

TEST(Permutation, GeneratorIsLexicographicAndComplete) {
  for (int n = 0; n <= 6; ++n) {
    const auto all = all_permutations(n);
    EXPECT_EQ(all.size(), factorial(n));
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
    EXPECT_EQ(std::set<Permutation>(all.begin(), all.end()).size(), all.size());
  }
  std::size_t sharded = 0;
  for (int first = 1; first <= 5; ++first) {
    for_each_permutation_starting_with(5, first, [&](const Permutation& p) {
      EXPECT_EQ(p(1), first);
      ++sharded;
    });
  }
  EXPECT_EQ(sharded, 120U);
}

// --------------------------------------------------------------- partitions

TEST(Partition, DropsZerosAndRejectsBadParts) {
  EXPECT_EQ(Partition({3, 2, 0, 0}).parts(), (std::vector<int>{3, 2}));
  EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
  EXPECT_THROW(Partition({2, -1}), std::invalid_argument);
  EXPECT_EQ(Partition::parse("4,4,4,3").size(), 15);
  EXPECT_EQ(Partition::parse("").num_parts(), 0);
  EXPECT_EQ(Partition::parse("4,4,4,3").column_height(3), 3);
}

TEST(Partition, BoxPartitionsMatchOracle) {
  for (int k = 0; k <= 4; ++k) {
    for (int m = 0; m <= 4; ++m) {
      std::set<std::vector<int>> ours;
      for (const auto& shape : partitions_in_box(k, m)) ours.insert(shape.parts());
      const auto naive = oracle::partitions_in_box(k, m);
      EXPECT_EQ(ours, std::set<std::vector<int>>(naive.begin(), naive.end())) << k << "x" << m;
    }
  }
}

// -------------------------------------------------------------- validation

TEST(ValidateTableau, FourByFourSampleIsValid) {
  const auto report = validate_tableau(4, 8, Partition({4, 4, 4, 3}), bits("110000101111001"));
  EXPECT_TRUE(report.valid) << report.diagnostic;
}

TEST(ValidateTableau, EmptyShapeInSquareBoxIsValid) {
  EXPECT_TRUE(validate_tableau(3, 3, Partition(), {}).valid);
}

TEST(ValidateTableau, ColumnWithoutOneIsInvalid) {
  const auto report = validate_tableau(1, 2, Partition({1}), bits("0"));
  EXPECT_FALSE(report.valid);
  ASSERT_TRUE(report.column.has_value());
  EXPECT_EQ(*report.column, 0);
}

TEST(ValidateTableau, ZeroWithOneAboveAndLeftNamesTheCell) {
  const auto report = validate_tableau(2, 4, Partition({2, 2}), bits("1110"));
  EXPECT_FALSE(report.valid);
  ASSERT_TRUE(report.cell.has_value());
  EXPECT_EQ(*report.cell, (Cell{1, 1}));
  EXPECT_FALSE(report.diagnostic.empty());
}

TEST(ValidateTableau, MalformedInputIsADistinctError) {
  EXPECT_THROW(validate_tableau(2, 4, Partition({2, 2}), bits("111")), MalformedTableau);
  EXPECT_THROW(validate_tableau(1, 3, Partition({3}), bits("111")), MalformedTableau);
  EXPECT_THROW(PermutationTableau(1, 2, Partition({1}), bits("0")), InvalidTableau);
}

TEST(ValidateTableau, FirstRowMustSpanTheBox) {
  EXPECT_FALSE(validate_tableau(2, 4, Partition({1, 1}), bits("11")).valid);
}

// ------------------------------------------------------------- enumeration

TEST(EnumerateTableaux, SmallBoxes) {
  const auto one = enumerate_tableaux(1, 2);
  ASSERT_EQ(one.size(), 1U);
  EXPECT_EQ(one[0].shape(), Partition({1}));
  EXPECT_EQ(one[0].filling(), bits("1"));
  for (int n = 0; n <= 5; ++n) {
    const auto square = enumerate_tableaux(n, n);
    ASSERT_EQ(square.size(), 1U);
    EXPECT_EQ(square[0].shape().num_parts(), 0);
  }
}

TEST(EnumerateTableaux, TotalsAreFactorials) {
  for (int n = 0; n <= 8; ++n) {
    unsigned long long total = 0;
    for (int k = 0; k <= n; ++k) {
      for_each_tableau(k, n, [&](const PermutationTableau& t) {
        ++total;
        if (n <= 6) EXPECT_TRUE(validate_tableau(t).valid);
      });
    }
    // k = 0 contributes only for n = 0.
    EXPECT_EQ(total, factorial(n)) << n;
  }
}

TEST(EnumerateTableaux, CellCountsMatchBruteForceFillings) {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 1; k <= n; ++k) {
      std::map<std::tuple<int, int, int>, long> ours;
      for_each_tableau(k, n, [&](const PermutationTableau& t) {
        const auto s = tableau_stats(t);
        ++ours[{s.zeros, s.ones, s.twos}];
      });
      EXPECT_EQ(ours, oracle::tableau_tally(k, n)) << k << "," << n;
    }
  }
}

TEST(EnumerateTableaux, OrderIsShapeThenFilling) {
  const auto all = enumerate_tableaux(2, 4);
  for (std::size_t i = 1; i < all.size(); ++i) {
    const auto& a = all[i - 1];
    const auto& b = all[i];
    EXPECT_TRUE(a.shape() < b.shape() || (a.shape() == b.shape() && a.filling() < b.filling()));
  }
}

// -------------------------------------------------------------- path labels

TEST(PathLabeling, FourByFourSample) {
  const auto path = path_labeling(sample_tableau());
  EXPECT_EQ(path.vertical_labels(), (std::vector<int>{1, 2, 3, 5}));
  EXPECT_EQ(path.horizontal_labels(), (std::vector<int>{4, 6, 7, 8}));
  EXPECT_EQ(path.row_label, (std::vector<int>{1, 2, 3, 5}));
  EXPECT_EQ(path.col_label, (std::vector<int>{8, 7, 6, 4}));
}

TEST(PathLabeling, EmptyShapeIsAllVertical) {
  const auto path = path_labeling(PermutationTableau::empty(3));
  EXPECT_EQ(path.vertical_labels(), (std::vector<int>{1, 2, 3}));
  EXPECT_TRUE(path.horizontal_labels().empty());
}

TEST(PathLabeling, SingleRow) {
  const auto path = path_labeling(1, 3, Partition({2}));
  EXPECT_EQ(path.vertical_labels(), (std::vector<int>{1}));
  EXPECT_EQ(path.horizontal_labels(), (std::vector<int>{2, 3}));
}

// ------------------------------------------------------------------ formats

TEST(TableauFormat, TextAndJsonRoundTrip) {
  const auto t = sample_tableau();
  EXPECT_EQ(to_text(t), "4 8\n1100\n0010\n1111\n001\n");
  EXPECT_EQ(parse_tableau(to_text(t)), t);
  EXPECT_EQ(parse_tableau(to_json(t).dump()), t);
  EXPECT_EQ(to_json(t)["rows"], nlohmann::json({"1100", "0010", "1111", "001"}));
  EXPECT_EQ(parse_tableau("3 3\n"), PermutationTableau::empty(3));
}

TEST(TableauFormat, RejectsGarbage) {
  EXPECT_THROW(parse_tableau("2 4\n12\n"), std::invalid_argument);
  EXPECT_THROW(parse_tableau("2 4\n1\n11\n"), std::invalid_argument);
  EXPECT_THROW(parse_tableau("not a tableau"), std::invalid_argument);
}

// ------------------------------------------------------------------ biwords

TEST(Biword, RelativeFixedPointExample) {
  const Biword b({5, 3, 1, 4}, {6, 2, 1, 3});
  // 2 -> 3 is the second smallest letter in both rows; 1 -> 1 is a fixed point too.
  const auto fixed = relative_fixed_points(b);
  EXPECT_NE(std::find(fixed.begin(), fixed.end(), 1), fixed.end());
  for (int pos : fixed) {
    const int top_rank = static_cast<int>(std::count_if(b.tops().begin(), b.tops().end(),
                                                        [&](int v) { return v <= b.tops()[pos]; }));
    const int bottom_rank = static_cast<int>(std::count_if(b.bottoms().begin(), b.bottoms().end(),
                                                           [&](int v) { return v <= b.bottoms()[pos]; }));
    EXPECT_EQ(top_rank, bottom_rank);
  }
}

TEST(Biword, IdentityIsAllFixed) {
  const auto b = Biword::of(Permutation::identity(5));
  EXPECT_EQ(relative_fixed_points(b).size(), 5U);
  EXPECT_TRUE(drop_relative_fixed_points(b).empty());
}

TEST(Biword, ReductionExample) {
  const Biword b({7, 4, 8, 6, 2, 1, 5}, {1, 2, 3, 5, 6, 7, 8});
  EXPECT_EQ(reduce_biword(b).to_string(), "6375214");
}

TEST(Biword, ReductionIsIdempotent) {
  for (const auto& p : all_permutations(5)) {
    const auto once = reduce_biword(Biword::of(p));
    EXPECT_EQ(once, p);
    EXPECT_EQ(reduce_biword(Biword::of(once)), once);
  }
  const Biword b({9, 4, 7}, {8, 2, 5});
  const auto reduced = reduce_biword(b);
  EXPECT_EQ(relative_fixed_points(Biword::of(reduced)), relative_fixed_points(b));
  EXPECT_TRUE(congruent(b, Biword::of(reduced)));
}

TEST(Biword, RejectsRepeatsAndLengthMismatch) {
  EXPECT_THROW(Biword({1, 1}, {1, 2}), std::invalid_argument);
  EXPECT_THROW(Biword({1, 2}, {1}), std::invalid_argument);
}
