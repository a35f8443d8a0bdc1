#include "ptab/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "ptab/bijections.hpp"
#include "ptab/enumeration.hpp"
#include "ptab/statistics.hpp"
#include "ptab/tableau.hpp"

namespace ptab {

// ---------------------------------------------------------- distributions

DistributionTable::DistributionTable(int n, std::vector<std::string> names, std::string source)
    : n_(n), names_(std::move(names)), source_(std::move(source)) {}

void DistributionTable::add(const StatKey& key, const mpz_class& count) {
  if (count == 0) return;
  auto [it, inserted] = counts_.try_emplace(key, count);
  if (!inserted) it->second += count;
}

void DistributionTable::merge(const DistributionTable& other) {
  for (const auto& [key, count] : other.counts_) add(key, count);
}

mpz_class DistributionTable::count(const StatKey& key) const {
  auto it = counts_.find(key);
  return it == counts_.end() ? mpz_class(0) : it->second;
}

mpz_class DistributionTable::total() const {
  mpz_class sum = 0;
  for (const auto& [key, count] : counts_) sum += count;
  return sum;
}

std::optional<StatKey> DistributionTable::first_difference(const DistributionTable& other) const {
  std::set<StatKey> keys;
  for (const auto& [key, count] : counts_) keys.insert(key);
  for (const auto& [key, count] : other.counts_) keys.insert(key);
  for (const auto& key : keys) {
    if (count(key) != other.count(key)) return key;
  }
  return std::nullopt;
}

void DistributionTable::write_csv(std::ostream& out) const {
  for (const auto& name : names_) out << name << ',';
  out << "count\n";
  for (const auto& [key, count] : counts_) {
    for (long v : key) out << v << ',';
    out << count.get_str() << '\n';
  }
}

nlohmann::json DistributionTable::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [key, count] : counts_) {
    rows.push_back({{"key", key}, {"count", count.get_str()}});
  }
  return nlohmann::json{{"n", n_}, {"statistics", names_}, {"source", source_}, {"rows", rows}};
}

std::string key_to_string(const StatKey& key) {
  std::string out = "(";
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(key[i]);
  }
  return out + ")";
}

namespace {

std::string brief(const PermutationTableau& t) {
  std::string out = "[k=" + std::to_string(t.k()) + " n=" + std::to_string(t.n());
  for (const auto& row : t.rows()) out += " " + row;
  return out + "]";
}

/// Accumulator shared by the checks: a pair of tables and the first failure.
struct Tally {
  DistributionTable left, right;
  std::optional<std::string> failure;
  std::vector<std::uint64_t> ranks;
  long objects = 0;

  void fail(std::string message) {
    if (!failure) failure = std::move(message);
  }
  void absorb(Tally&& other) {
    left.merge(other.left);
    right.merge(other.right);
    if (!failure && other.failure) failure = std::move(other.failure);
    ranks.insert(ranks.end(), other.ranks.begin(), other.ranks.end());
    objects += other.objects;
  }
};

using TallyFactory = std::function<Tally()>;

Tally sweep_permutations(int n, int jobs, const TallyFactory& make,
                         const std::function<void(Tally&, const Permutation&)>& visit) {
  return reduce_permutations<Tally>(n, jobs, make, visit, [](Tally& a, Tally&& b) { a.absorb(std::move(b)); });
}

/// Every tableau of size n, sharded by the number of rows.
Tally sweep_tableaux(int n, int jobs, const TallyFactory& make,
                     const std::function<void(Tally&, const PermutationTableau&)>& visit) {
  std::vector<Tally> shards;
  for (int k = 0; k <= n; ++k) shards.push_back(make());
  const int workers = std::clamp(jobs, 1, n + 1);
  auto run = [&](int worker) {
    for (int k = worker; k <= n; k += workers) {
      for_each_tableau(k, n, [&](const PermutationTableau& t) { visit(shards[k], t); });
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (auto& t : threads) t.join();
  }
  Tally result = make();
  for (auto& shard : shards) result.absorb(std::move(shard));
  return result;
}

std::uint64_t permutation_rank(const Permutation& p) {
  const int n = p.size();
  std::uint64_t rank = 0;
  for (int i = 1; i <= n; ++i) {
    int smaller_after = 0;
    for (int j = i + 1; j <= n; ++j) {
      if (p(j) < p(i)) ++smaller_after;
    }
    rank = rank * (n - i + 1) + smaller_after;
  }
  return rank;
}

/// True when the ranks are exactly 0 .. n!-1.
bool covers_all_ranks(std::vector<std::uint64_t> ranks, int n) {
  std::sort(ranks.begin(), ranks.end());
  if (ranks.size() != factorial(n)) return false;
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    if (ranks[i] != i) return false;
  }
  return true;
}

CheckReport make_report(const std::string& name, int n) {
  CheckReport r;
  r.check = name;
  r.n = n;
  return r;
}

void compare_tables(CheckReport& report, const DistributionTable& a, const DistributionTable& b,
                    const std::string& a_name, const std::string& b_name) {
  report.details.push_back(a_name + ": " + a.total().get_str() + " objects, " + std::to_string(a.counts().size()) +
                           " keys; " + b_name + ": " + b.total().get_str() + " objects, " +
                           std::to_string(b.counts().size()) + " keys");
  if (auto key = a.first_difference(b)) {
    report.status = CheckStatus::fail;
    if (!report.counterexample) {
      report.counterexample = "key " + key_to_string(*key) + ": " + a_name + " " + a.count(*key).get_str() + ", " +
                              b_name + " " + b.count(*key).get_str();
    }
  }
}

void record_failure(CheckReport& report, const std::optional<std::string>& failure) {
  if (!failure) return;
  report.status = CheckStatus::fail;
  if (!report.counterexample) report.counterexample = *failure;
}

std::string describe(const std::string& label, long lhs, long rhs) {
  return label + ": " + std::to_string(lhs) + " vs " + std::to_string(rhs);
}

Polynomial rename_q_to_p(const Polynomial& poly) {
  Polynomial out;
  for (const auto& [e, c] : poly.terms()) {
    Exponents moved = e;
    moved[static_cast<int>(Var::p)] = e[static_cast<int>(Var::q)];
    moved[static_cast<int>(Var::q)] = 0;
    out += Polynomial::monomial(c, moved);
  }
  return out;
}

}  // namespace

DistributionTable statistic_distribution(int n, const std::vector<std::string>& names, bool from_tableaux,
                                         int jobs) {
  const std::string source = from_tableaux ? "tableaux" : "permutations";
  auto make = [&] { return Tally{DistributionTable(n, names, source), {}, {}, {}, 0}; };
  Tally tally;
  if (from_tableaux) {
    tally = sweep_tableaux(n, jobs, make, [&](Tally& acc, const PermutationTableau& t) {
      const auto s = tableau_stats(t);
      StatKey key;
      for (const auto& name : names) key.push_back(scalar_statistic(s, name));
      acc.left.add(key);
    });
  } else {
    tally = sweep_permutations(n, jobs, make, [&](Tally& acc, const Permutation& p) {
      const auto s = stat_bundle(p);
      StatKey key;
      for (const auto& name : names) key.push_back(scalar_statistic(s, name));
      acc.left.add(key);
    });
  }
  return tally.left;
}

// ----------------------------------------------------------------- reports

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass:
      return "PASS";
    case CheckStatus::fail:
      return "FAIL";
    case CheckStatus::confirmed:
      return "CONFIRMED";
    case CheckStatus::refuted:
      return "REFUTED";
  }
  return "?";
}

std::string CheckReport::to_text() const {
  std::ostringstream out;
  out << check << " n=" << n << ": " << ptab::to_string(status) << '\n';
  for (const auto& line : details) out << "  " << line << '\n';
  if (counterexample) out << "  counterexample: " << *counterexample << '\n';
  return out.str();
}

nlohmann::json CheckReport::to_json() const {
  nlohmann::json j{{"check", check}, {"n", n}, {"status", ptab::to_string(status)}, {"details", details}};
  if (counterexample) j["counterexample"] = *counterexample;
  return j;
}

void check_bound(int n, const VerifyOptions& options) {
  const int bound = std::min(options.max_n, kVerifyHardLimit);
  if (n < 0 || n > bound) {
    throw std::out_of_range("n = " + std::to_string(n) + " is outside the verification bound 0.." +
                            std::to_string(bound));
  }
}

// ----------------------------------------------------------------- checks

CheckReport check_equidistribution1(int n, const VerifyOptions& options) {
  check_bound(n, options);
  CheckReport report = make_report("equidistribution1", n);
  const std::vector<std::string> names{"k", "zeros", "ones", "twos"};
  auto make = [&] { return Tally{DistributionTable(n, names, "tableaux"), {}, {}, {}, 0}; };

  Tally tableaux = sweep_tableaux(n, options.jobs, make, [&](Tally& acc, const PermutationTableau& t) {
    const auto s = tableau_stats(t);
    acc.left.add({t.k(), s.zeros, s.ones, s.twos});
    const Permutation p = phi(t);
    const auto w = weak_excedances(p);
    const auto ac = alignments_crossings(p);
    const std::string who = brief(t) + " -> " + p.to_string();
    const long crossings = ac.total_c_ee + ac.total_c_nn;
    if (w.wex != t.k()) acc.fail(who + ", " + describe("wex vs rows", w.wex, t.k()));
    if (s.twos != ac.total_a_ne) acc.fail(who + ", " + describe("#2 vs A_NE", s.twos, ac.total_a_ne));
    if (s.ones != crossings + t.num_columns()) {
      acc.fail(who + ", " + describe("#1 vs C_EE+C_NN+(n-k)", s.ones, crossings + t.num_columns()));
    }
    const long aligned = ac.total_a_ee + ac.total_a_nn + ac.total_a_en;
    if (s.zeros != aligned) acc.fail(who + ", " + describe("#0 vs A_EE+A_NN+A_EN", s.zeros, aligned));
    if (s.black != crossings) acc.fail(who + ", " + describe("black vs C_EE+C_NN", s.black, crossings));
  });

  Tally perms = sweep_permutations(n, options.jobs, make, [&](Tally& acc, const Permutation& p) {
    const auto w = weak_excedances(p);
    const auto ac = alignments_crossings(p);
    acc.left.add({w.wex, ac.total_a_ee + ac.total_a_nn + ac.total_a_en,
                  ac.total_c_ee + ac.total_c_nn + (n - w.wex), ac.total_a_ne});
  });

  record_failure(report, tableaux.failure);
  compare_tables(report, tableaux.left, perms.left, "tableaux", "permutations");
  return report;
}

CheckReport check_equidist_psi(int n, const VerifyOptions& options) {
  check_bound(n, options);
  CheckReport report = make_report("equidist-psi", n);
  auto make = [] { return Tally{}; };
  Tally tally = sweep_permutations(n, options.jobs, make, [&](Tally& acc, const Permutation& p) {
    ++acc.objects;
    if (n == 0) return;
    const Permutation sigma = psi(p);
    const auto d = descents(p);
    const auto pc = pattern_counts(p);
    const auto w = weak_excedances(sigma);
    const auto ac = alignments_crossings(sigma);
    const long pairs = binomial2(d.des);
    const std::string who = "pi=" + p.to_string() + " sigma=" + sigma.to_string() + ", ";
    if (d.des != w.wex - 1) acc.fail(who + describe("des vs wex-1", d.des, w.wex - 1));
    if (pc.p31_2 != ac.total_a_ee + ac.total_a_nn) {
      acc.fail(who + describe("(31-2) vs A_EE+A_NN", pc.p31_2, ac.total_a_ee + ac.total_a_nn));
    }
    if (pc.p21_3 + pc.p3_21 - pairs != ac.total_a_en) {
      acc.fail(who + describe("(21-3)+(3-21)-C(des,2) vs A_EN", pc.p21_3 + pc.p3_21 - pairs, ac.total_a_en));
    }
    if (pc.p2_31 != ac.total_c_ee + ac.total_c_nn) {
      acc.fail(who + describe("(2-31) vs C_EE+C_NN", pc.p2_31, ac.total_c_ee + ac.total_c_nn));
    }
    if (pc.p1_32 + pc.p32_1 - pairs != ac.total_a_ne) {
      acc.fail(who + describe("(1-32)+(32-1)-C(des,2) vs A_NE", pc.p1_32 + pc.p32_1 - pairs, ac.total_a_ne));
    }
  });
  report.details.push_back(std::to_string(tally.objects) + " permutations, five equations each");
  record_failure(report, tally.failure);
  return report;
}

CheckReport check_corollary2(int n, const VerifyOptions& options) {
  check_bound(n, options);
  CheckReport report = make_report("corollary2", n);
  const std::vector<std::string> names{"rows|des+1", "zeros|a", "ones|b", "twos|c"};
  auto make = [&] { return Tally{DistributionTable(n, names, ""), {}, {}, {}, 0}; };

  Tally tableaux = sweep_tableaux(n, options.jobs, make, [&](Tally& acc, const PermutationTableau& t) {
    const auto s = tableau_stats(t);
    const StatKey key{t.k(), s.zeros, s.ones, s.twos};
    acc.left.add(key);
    if (n == 0) return;
    const Permutation p = tableau_to_pattern_world(t);
    const auto abc = abc_statistics(p);
    const StatKey image{descents(p).des + 1, abc.a, abc.b, abc.c};
    if (image != key) {
      acc.fail(brief(t) + " -> " + p.to_string() + ": (rows,#0,#1,#2) " + key_to_string(key) + " vs (des+1,a,b,c) " +
               key_to_string(image));
    }
  });
  Tally perms = sweep_permutations(n, options.jobs, make, [&](Tally& acc, const Permutation& p) {
    if (n == 0) {
      acc.left.add({0, 0, 0, 0});  // the empty tableau has no rows
      return;
    }
    const auto abc = abc_statistics(p);
    acc.left.add({descents(p).des + 1, abc.a, abc.b, abc.c});
  });
  record_failure(report, tableaux.failure);
  compare_tables(report, tableaux.left, perms.left, "tableaux", "permutations");
  return report;
}

CheckReport check_pattern_distribution(int n, const VerifyOptions& options) {
  check_bound(n, options);
  CheckReport report = make_report("pattern-distribution", n);
  if (n == 0) {
    report.details.push_back("nothing to compare for n = 0");
    return report;
  }
  const std::vector<std::string> names{"des", "2-31"};
  DistributionTable from_polys(n, names, "Ehat coefficients");
  for (int k = 1; k <= n; ++k) {
    const Polynomial hat = E_hat(k, n);
    for (const auto& [e, c] : hat.terms()) from_polys.add({k - 1, e[static_cast<int>(Var::q)]}, c);
  }
  const auto pattern = VincularPattern::parse("2-31");
  auto make = [&] { return Tally{DistributionTable(n, names, "permutations"), {}, {}, {}, 0}; };
  Tally perms = sweep_permutations(n, options.jobs, make, [&](Tally& acc, const Permutation& p) {
    acc.left.add({descents(p).des, count_vincular(p, pattern)});
  });
  compare_tables(report, perms.left, from_polys, "permutations", "Ehat coefficients");
  return report;
}

CheckReport check_essential_ones_conjecture(int n, const VerifyOptions& options) {
  check_bound(n, options);
  CheckReport report = make_report("essential-ones", n);
  report.gating = false;

  // left: essential 1's alone; right: (rows, essential 1's)
  auto make_tab = [&] {
    return Tally{DistributionTable(n, {"essential_ones"}, "tableaux"),
                 DistributionTable(n, {"rows", "essential_ones"}, "tableaux"), {}, {}, 0};
  };
  Tally tab = sweep_tableaux(n, options.jobs, make_tab, [&](Tally& acc, const PermutationTableau& t) {
    const auto s = tableau_stats(t);
    acc.left.add({s.essential_ones});
    acc.right.add({t.k(), s.essential_ones});
  });

  struct Side {
    std::string name;
    std::function<StatKey(const Permutation&)> key;
  };
  const std::vector<Side> sides{
      {"n-cycles", [n](const Permutation& p) { return StatKey{n - count_cycles(p)}; }},
      {"n-LRmin", [n](const Permutation& p) { return StatKey{n - count_left_to_right_minima(p)}; }},
      {"(n-1-des, n-LRmin)",
       [n](const Permutation& p) { return StatKey{n - 1 - descents(p).des, n - count_left_to_right_minima(p)}; }},
      {"(des+1, n-LRmin)",
       [n](const Permutation& p) { return StatKey{descents(p).des + 1, n - count_left_to_right_minima(p)}; }},
      {"(n-des, n-LRmin)",
       [n](const Permutation& p) { return StatKey{n - descents(p).des, n - count_left_to_right_minima(p)}; }},
      {"(des+1, LRmin)",
       [](const Permutation& p) { return StatKey{descents(p).des + 1, count_left_to_right_minima(p)}; }},
      {"(wex, cycles)", [](const Permutation& p) { return StatKey{weak_excedances(p).wex, count_cycles(p)}; }},
  };
  std::vector<DistributionTable> tables;
  for (const auto& side : sides) {
    auto make = [&] { return Tally{DistributionTable(n, {side.name}, "permutations"), {}, {}, {}, 0}; };
    tables.push_back(sweep_permutations(n, options.jobs, make, [&](Tally& acc, const Permutation& p) {
                       if (n > 0) acc.left.add(side.key(p));
                     }).left);
  }
  if (n == 0) {
    report.status = CheckStatus::confirmed;
    report.details.push_back("n = 0: only the empty tableau and the empty permutation");
    return report;
  }

  auto verdict = [&](const std::string& label, const DistributionTable& a, const DistributionTable& b) {
    const bool same = a.same_counts(b);
    std::string line = label + ": " + (same ? "CONFIRMED" : "REFUTED");
    if (!same) line += " (first difference at " + key_to_string(*a.first_difference(b)) + ")";
    report.details.push_back(line);
    return same;
  };
  const bool by_cycles = verdict("essential ~ n-cycles", tab.left, tables[0]);
  const bool by_lrmin = verdict("essential ~ n-LRmin", tab.left, tables[1]);
  const bool literal = verdict("(rows, essential) ~ (n-1-des, n-LRmin)", tab.right, tables[2]);
  const bool shifted = verdict("(rows, essential) ~ (des+1, n-LRmin)", tab.right, tables[3]);
  const bool complemented = verdict("(rows, essential) ~ (n-des, n-LRmin)", tab.right, tables[4]);
  const bool wex_cycles = verdict("(des+1, LRmin) ~ (wex, cycles)", tables[5], tables[6]);
  const bool joint = literal || shifted || complemented;
  report.status = by_cycles && by_lrmin && joint && wex_cycles ? CheckStatus::confirmed : CheckStatus::refuted;
  return report;
}

CheckReport check_phi_bijection(int n, const VerifyOptions& options) {
  check_bound(n, options);
  CheckReport report = make_report("phi-bijection", n);
  const std::vector<std::string> names{"k"};
  auto make = [&] { return Tally{DistributionTable(n, names, "tableaux"), {}, {}, {}, 0}; };

  Tally tab = sweep_tableaux(n, options.jobs, make, [&](Tally& acc, const PermutationTableau& t) {
    ++acc.objects;
    acc.left.add({t.k()});
    const Permutation p = phi(t);
    acc.ranks.push_back(permutation_rank(p));
    const std::string who = brief(t) + " -> " + p.to_string() + ": ";
    const auto w = weak_excedances(p);
    const auto path = path_labeling(t);
    if (w.wex != t.k()) acc.fail(who + describe("wex vs rows", w.wex, t.k()));
    if (w.bottoms != path.vertical_labels()) acc.fail(who + "vertical labels differ from the wex bottoms");
    const auto rows = t.rows();
    for (int i = 1; i <= n; ++i) {
      const int row = path.index[i];
      const bool empty_row = path.kind[i] == StepKind::vertical &&
                             (row >= static_cast<int>(rows.size()) || rows[row].find('1') == std::string::npos);
      if ((p(i) == i) != empty_row) acc.fail(who + "fixed point " + std::to_string(i) + " and empty rows disagree");
    }
    std::set<std::pair<ZigZagTrace::Node, ZigZagTrace::Node>> edges;
    for (const auto& trace : zigzag_traces(t)) {
      for (const auto& edge : trace.directed_edges()) {
        if (!edges.insert(edge).second) acc.fail(who + "two routes share a directed edge");
      }
    }
    const PermutationTableau back = phi_inverse(p);
    if (back.k() != t.k() || back.rows() != t.rows()) acc.fail(who + "phi_inverse gives " + brief(back));
  });

  auto make_perm = [] { return Tally{}; };
  Tally perms = sweep_permutations(n, options.jobs, make_perm, [&](Tally& acc, const Permutation& p) {
    const PermutationTableau t = phi_inverse(p);
    const Permutation again = phi(t);
    if (again != p) acc.fail(p.to_string() + " -> " + brief(t) + " -> " + again.to_string());
  });

  report.details.push_back(std::to_string(tab.objects) + " tableaux, " + std::to_string(factorial(n)) +
                           " permutations");
  record_failure(report, tab.failure);
  record_failure(report, perms.failure);
  if (!covers_all_ranks(tab.ranks, n)) {
    report.status = CheckStatus::fail;
    if (!report.counterexample) report.counterexample = "phi images do not cover S_n exactly once";
  }
  const auto expected = eulerian_by_wex(n);
  for (int k = 0; k <= n; ++k) {
    if (tab.left.count({k}) != expected[k]) {
      report.status = CheckStatus::fail;
      if (!report.counterexample) {
        report.counterexample = "k=" + std::to_string(k) + ": " + tab.left.count({k}).get_str() + " tableaux vs " +
                                expected[k].get_str() + " permutations with that many weak excedances";
      }
    }
  }
  return report;
}

CheckReport check_psi_bijection(int n, const VerifyOptions& options) {
  check_bound(n, options);
  CheckReport report = make_report("psi-bijection", n);
  auto make = [] { return Tally{}; };
  Tally tally = sweep_permutations(n, options.jobs, make, [&](Tally& acc, const Permutation& p) {
    ++acc.objects;
    if (n == 0) return;
    const Permutation sigma = psi(p);
    acc.ranks.push_back(permutation_rank(sigma));
    const std::string who = "pi=" + p.to_string() + " sigma=" + sigma.to_string() + ": ";
    const auto d = descents(p);
    const auto w = weak_excedances(sigma);

    std::vector<int> bottoms{1}, tops;
    for (int b : d.bottoms) bottoms.push_back(b + 1);
    for (int t : d.tops) tops.push_back(t - 1);
    tops.push_back(n);
    std::sort(bottoms.begin(), bottoms.end());
    std::sort(tops.begin(), tops.end());
    if (w.bottoms != bottoms) acc.fail(who + "wex bottoms are not the shifted descent bottoms");
    if (w.tops != tops) acc.fail(who + "wex tops are not the shifted descent tops");

    const auto ac = alignments_crossings(sigma);
    const auto rembr = rembr_vector(p);
    for (int i = 1; i <= n; ++i) {
      if (ac.c_ee[i - 1] + ac.c_nn[i - 1] != rembr[i]) {
        acc.fail(who + describe("C_EE+C_NN at " + std::to_string(i) + " vs rembr", ac.c_ee[i - 1] + ac.c_nn[i - 1],
                                rembr[i]));
      }
    }
    if (w.top_sum != d.top_sum + n - d.des) {
      acc.fail(who + describe("wextopsum vs destopsum+n-des", w.top_sum, d.top_sum + n - d.des));
    }
    if (w.bottom_sum != d.bottom_sum + d.des + 1) {
      acc.fail(who + describe("wexbotsum vs desbotsum+des+1", w.bottom_sum, d.bottom_sum + d.des + 1));
    }
    const Permutation back = psi_inverse(sigma);
    if (back != p) acc.fail(who + "psi_inverse(sigma) = " + back.to_string());
    const Permutation forth = psi(psi_inverse(p));
    if (forth != p) acc.fail("tau=" + p.to_string() + ": psi(psi_inverse(tau)) = " + forth.to_string());
  });
  report.details.push_back(std::to_string(tally.objects) + " permutations");
  record_failure(report, tally.failure);
  if (n > 0 && !covers_all_ranks(tally.ranks, n)) {
    report.status = CheckStatus::fail;
    if (!report.counterexample) report.counterexample = "psi images do not cover S_n exactly once";
  }
  return report;
}

CheckReport check_corteel(int n, const VerifyOptions& options) {
  check_bound(n, options);
  CheckReport report = make_report("corteel", n);
  auto make = [] { return Tally{}; };
  Tally tally = sweep_permutations(n, options.jobs, make, [&](Tally& acc, const Permutation& p) {
    ++acc.objects;
    if (n == 0) return;
    const auto w = weak_excedances(p);
    const auto ac = alignments_crossings(p);
    const long k = w.wex;
    const long six = ac.total_a_ee + ac.total_a_nn + ac.total_a_en + ac.total_a_ne + ac.total_c_ee + ac.total_c_nn;
    const std::string who = p.to_string() + ": ";
    if (six != (k - 1) * (n - k)) acc.fail(who + describe("sum of six vs (k-1)(n-k)", six, (k - 1) * (n - k)));
    if (ac.total_a_ne != w.bottom_sum - binomial2(k + 1)) {
      acc.fail(who + describe("A_NE vs wexbotsum-C(wex+1,2)", ac.total_a_ne, w.bottom_sum - binomial2(k + 1)));
    }
    const long en = binomial2(n) - binomial2(n - k) + k - w.top_sum;
    if (ac.total_a_en != en) acc.fail(who + describe("A_EN vs C(n,2)-C(n-wex,2)+wex-wextopsum", ac.total_a_en, en));
  });
  report.details.push_back(std::to_string(tally.objects) + " permutations");
  record_failure(report, tally.failure);
  return report;
}

CheckReport check_patt_const(int n, const VerifyOptions& options) {
  check_bound(n, options);
  CheckReport report = make_report("patt-const", n);
  const bool cross_check_engine = n <= 7;
  auto make = [&] {
    return Tally{DistributionTable(n, {"des", "31-2+21-3+3-21"}, "permutations"),
                 DistributionTable(n, {"des", "1-32+32-1+2-31"}, "permutations"), {}, {}, 0};
  };
  const auto patterns = {VincularPattern::parse("2-31"), VincularPattern::parse("31-2"),
                         VincularPattern::parse("21-3"), VincularPattern::parse("3-21"),
                         VincularPattern::parse("1-32"), VincularPattern::parse("32-1")};
  Tally tally = sweep_permutations(n, options.jobs, make, [&](Tally& acc, const Permutation& p) {
    ++acc.objects;
    if (n == 0) return;
    const auto d = descents(p);
    const auto pc = pattern_counts(p);
    const auto abc = abc_statistics(p);
    const std::string who = p.to_string() + ": ";
    const long want = static_cast<long>(d.des + 1) * (n - d.des - 1);
    if (abc.a + abc.b + abc.c != want) acc.fail(who + describe("a+b+c vs (des+1)(n-des-1)", abc.a + abc.b + abc.c, want));
    if (pc.p1_32 + pc.p32_1 != d.bottom_sum - d.des) {
      acc.fail(who + describe("(1-32)+(32-1) vs desbotsum-des", pc.p1_32 + pc.p32_1, d.bottom_sum - d.des));
    }
    const long top_gaps = static_cast<long>(d.des) * n - d.top_sum;
    if (pc.p21_3 + pc.p3_21 != top_gaps) {
      acc.fail(who + describe("(21-3)+(3-21) vs sum of n-t over descent tops", pc.p21_3 + pc.p3_21, top_gaps));
    }
    const auto rembr = rembr_vector(p);
    long rembr_sum = 0;
    for (int v : rembr) rembr_sum += v;
    if (rembr_sum != pc.p2_31) acc.fail(who + describe("sum of rembr vs (2-31)", rembr_sum, pc.p2_31));
    if (cross_check_engine) {
      const long fast[] = {pc.p2_31, pc.p31_2, pc.p21_3, pc.p3_21, pc.p1_32, pc.p32_1};
      int i = 0;
      for (const auto& pattern : patterns) {
        const long slow = count_vincular(p, pattern);
        if (slow != fast[i]) acc.fail(who + describe(pattern.to_string() + " scan vs generic count", fast[i], slow));
        ++i;
      }
    }
    acc.left.add({d.des, pc.p31_2 + pc.p21_3 + pc.p3_21});
    acc.right.add({d.des, pc.p1_32 + pc.p32_1 + pc.p2_31});
  });
  report.details.push_back(std::to_string(tally.objects) + " permutations" +
                           (cross_check_engine ? ", pattern counts cross-checked against the generic engine" : ""));
  record_failure(report, tally.failure);
  if (n > 0) compare_tables(report, tally.left, tally.right, "(des, 31-2+21-3+3-21)", "(des, 1-32+32-1+2-31)");
  return report;
}

CheckReport check_enumeration(int n, const VerifyOptions& options) {
  check_bound(n, options);
  CheckReport report = make_report("enumeration", n);
  auto fail = [&](const std::string& message) {
    report.status = CheckStatus::fail;
    if (!report.counterexample) report.counterexample = message;
  };
  const auto eulerian = eulerian_by_wex(n);
  for (int k = 0; k <= n; ++k) {
    Polynomial tally;
    for_each_tableau(k, n, [&](const PermutationTableau& t) {
      const auto s = tableau_stats(t);
      tally += Polynomial::monomial(1, {s.zeros, s.ones, s.twos, 0});
    });
    const Polynomial d = D_kn(k, n);
    const std::string at = "(k,n)=(" + std::to_string(k) + "," + std::to_string(n) + ")";
    if (d != tally) fail(at + ": D_kn = " + d.to_string() + " but tableaux give " + tally.to_string());
    const mpz_class total = d.substitute(Var::p, 1).substitute(Var::q, 1).substitute(Var::r, 1).constant_value();
    if (total != eulerian[k]) fail(at + ": D_kn(1,1,1) = " + total.get_str() + " vs " + eulerian[k].get_str());
    if (k >= 1 && k <= 3 && n >= 1) {
      const Polynomial closed = D_k_series(k, n)[n];
      const Polynomial paths = lattice_path_D(k, n)[n];
      if (closed != d) fail(at + ": closed form gives " + closed.to_string() + ", D_kn " + d.to_string());
      if (paths != d) fail(at + ": lattice paths give " + paths.to_string() + ", D_kn " + d.to_string());
    }
  }
  report.details.push_back("D_kn vs tableau tallies and Eulerian totals for k = 0.." + std::to_string(n) +
                           "; closed forms and lattice paths for k <= 3");
  return report;
}

CheckReport check_specializations(int n, const VerifyOptions& options) {
  check_bound(n, options);
  CheckReport report = make_report("specializations", n);
  auto fail = [&](const std::string& message) {
    report.status = CheckStatus::fail;
    if (!report.counterexample) report.counterexample = message;
  };
  if (n == 0) {
    report.details.push_back("nothing to compare for n = 0");
    return report;
  }
  const auto by_des = eulerian_by_des(n);
  mpz_class carlitz_total = 0;
  for (int k = 1; k <= n; ++k) {
    const std::string at = "(k,n)=(" + std::to_string(k) + "," + std::to_string(n) + ")";
    const Polynomial d = D_kn(k, n);
    const Polynomial e = E_kn_closed(k, n);
    const Polynomial d_q = d.substitute(Var::p, 1).substitute(Var::r, 1);
    if (d_q != e) fail(at + ": D_kn(1,q,1) = " + d_q.to_string() + ", closed formula " + e.to_string());

    const Polynomial d_p = d.substitute(Var::q, 1).substitute(Var::r, 1);
    const Polynomial b = carlitz_B(n, k);
    if (d_p != rename_q_to_p(b)) fail(at + ": D_kn(p,1,1) = " + d_p.to_string() + ", B_{n,k} = " + b.to_string());
    if (b != carlitz_definitional(n, k)) fail(at + ": recurrence and definitional Carlitz polynomials differ");
    carlitz_total += b.substitute(Var::q, 1).constant_value();

    const Polynomial hat = E_hat(k, n);
    if (hat != E_hat(n + 1 - k, n)) fail(at + ": Ehat is not symmetric");
    const mpz_class at_one = hat.substitute(Var::q, 1).constant_value();
    const mpz_class at_zero = hat.substitute(Var::q, 0).constant_value();
    const mpz_class at_minus_one = hat.substitute(Var::q, -1).constant_value();
    if (at_one != by_des[k - 1]) fail(at + ": Ehat(1) = " + at_one.get_str() + " vs " + by_des[k - 1].get_str());
    const mpz_class avoiders = count_231_avoiders(n, k);
    if (at_zero != avoiders || at_zero != narayana(n, k)) {
      fail(at + ": Ehat(0) = " + at_zero.get_str() + " vs (2-31)-avoiders " + avoiders.get_str() + " and Narayana " +
           narayana(n, k).get_str());
    }
    const mpz_class pascal = pascal_binomial(n, k);
    if (at_minus_one != pascal) fail(at + ": Ehat(-1) = " + at_minus_one.get_str() + " vs " + pascal.get_str());
  }
  if (carlitz_total != mpz_class(static_cast<unsigned long>(factorial(n)))) fail("sum of B_{n,k}(1) = " + carlitz_total.get_str());
  const auto convention = resolve_carlitz_convention();
  report.details.push_back("Carlitz convention: index shift " + std::to_string(convention.index_shift) +
                           (convention.subtract_binomial ? ", exponent lowered by C(k,2)" : ""));
  return report;
}

CheckReport check_gf_identity(int n, const VerifyOptions& options) {
  check_bound(n, options);
  CheckReport report = make_report("gf-identity", n);
  auto fail = [&](const std::string& message) {
    report.status = CheckStatus::fail;
    if (!report.counterexample) report.counterexample = message;
  };
  const TruncatedSeries sum_form = E_hat_gf_series(n);
  const TruncatedSeries fraction = E_hat_cf_series(n);
  const TruncatedSeries printed = E_gf_series(n);
  const Polynomial y = Polynomial::variable(Var::y);
  for (int m = 0; m <= n; ++m) {
    Polynomial hat_row = m == 0 ? Polynomial(1L) : Polynomial();
    Polynomial e_row = hat_row;
    for (int k = 1; k <= m; ++k) {
      hat_row += E_hat(k, m) * y.pow(k);
      e_row += E_kn_closed(k, m) * y.pow(k);
    }
    const std::string at = "x^" + std::to_string(m);
    if (sum_form[m] != fraction[m]) {
      fail(at + ": series " + sum_form[m].to_string() + " vs continued fraction " + fraction[m].to_string());
    }
    if (sum_form[m] != hat_row) fail(at + ": series " + sum_form[m].to_string() + " vs Ehat " + hat_row.to_string());
    if (printed[m] != e_row) fail(at + ": unnormalized series " + printed[m].to_string() + " vs E " + e_row.to_string());
  }
  report.details.push_back("series, continued fraction and Ehat_{k,m} agree through x^" + std::to_string(n));
  return report;
}

const std::vector<std::pair<std::string, CheckFunction>>& registered_checks() {
  static const std::vector<std::pair<std::string, CheckFunction>> checks{
      {"phi-bijection", check_phi_bijection},
      {"equidistribution1", check_equidistribution1},
      {"corteel", check_corteel},
      {"patt-const", check_patt_const},
      {"psi-bijection", check_psi_bijection},
      {"equidist-psi", check_equidist_psi},
      {"corollary2", check_corollary2},
      {"enumeration", check_enumeration},
      {"specializations", check_specializations},
      {"pattern-distribution", check_pattern_distribution},
      {"gf-identity", check_gf_identity},
      {"essential-ones", check_essential_ones_conjecture},
  };
  return checks;
}

std::vector<CheckReport> run_check(const std::string& name, int n, const VerifyOptions& options) {
  std::vector<CheckReport> reports;
  for (const auto& [check_name, fn] : registered_checks()) {
    if (name == "all" || name == check_name) reports.push_back(fn(n, options));
  }
  if (reports.empty()) throw std::invalid_argument("unknown check '" + name + "'");
  return reports;
}

// ----------------------------------------------------- brute-force oracles

std::vector<mpz_class> eulerian_by_wex(int n) {
  std::vector<mpz_class> out(n + 1, 0);
  for_each_permutation(n, [&](const Permutation& p) {
    int wex = 0;
    for (int i = 1; i <= n; ++i) wex += p(i) >= i ? 1 : 0;
    out[wex] += 1;
  });
  return out;
}

std::vector<mpz_class> eulerian_by_des(int n) {
  std::vector<mpz_class> out(n + 1, 0);
  for_each_permutation(n, [&](const Permutation& p) {
    int des = 0;
    for (int i = 1; i < n; ++i) des += p(i) > p(i + 1) ? 1 : 0;
    out[des] += 1;
  });
  return out;
}

mpz_class count_231_avoiders(int n, int k) {
  const auto pattern = VincularPattern::parse("2-31");
  mpz_class count = 0;
  for_each_permutation(n, [&](const Permutation& p) {
    if (descents(p).des == k - 1 && count_vincular(p, pattern) == 0) count += 1;
  });
  return count;
}

mpz_class narayana(int n, int k) {
  if (n < 1 || k < 1 || k > n) return 0;
  return binomial(n, k) * binomial(n, k - 1) / n;
}

mpz_class pascal_binomial(int n, int k) {
  if (n < 1 || k < 1 || k > n) return 0;
  std::vector<mpz_class> row{1};
  for (int m = 1; m < n; ++m) {
    std::vector<mpz_class> next(m + 1, 1);
    for (int j = 1; j < m; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[k - 1];
}

}  // namespace ptab
