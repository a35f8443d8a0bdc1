#pragma once

#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "ptab/permutation.hpp"

namespace ptab {

// ---------------------------------------------------------- distributions

using StatKey = std::vector<long>;

/// Exact counts of objects by a tuple of statistics.
class DistributionTable {
 public:
  DistributionTable() = default;
  DistributionTable(int n, std::vector<std::string> names, std::string source);

  void add(const StatKey& key, const mpz_class& count = 1);
  void merge(const DistributionTable& other);

  int n() const { return n_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& source() const { return source_; }
  const std::map<StatKey, mpz_class>& counts() const { return counts_; }
  mpz_class count(const StatKey& key) const;
  mpz_class total() const;

  /// Same counts, ignoring names and source.
  bool same_counts(const DistributionTable& other) const { return counts_ == other.counts_; }
  /// The smallest key whose counts differ, if any.
  std::optional<StatKey> first_difference(const DistributionTable& other) const;

  /// Header row of statistic names plus "count", then one row per key.
  void write_csv(std::ostream& out) const;
  nlohmann::json to_json() const;

 private:
  int n_ = 0;
  std::vector<std::string> names_;
  std::string source_;
  std::map<StatKey, mpz_class> counts_;
};

std::string key_to_string(const StatKey& key);

/// Distribution of the named scalar statistics (see scalar_statistic) over
/// S_n, or over all permutation tableaux of size n when from_tableaux is set.
DistributionTable statistic_distribution(int n, const std::vector<std::string>& names, bool from_tableaux,
                                         int jobs = 1);

// ----------------------------------------------------------------- checks

enum class CheckStatus { pass, fail, confirmed, refuted };

std::string to_string(CheckStatus status);

struct CheckReport {
  std::string check;
  int n = 0;
  CheckStatus status = CheckStatus::pass;
  bool gating = true;  // false for conjectures
  std::vector<std::string> details;
  std::optional<std::string> counterexample;

  /// True for a failed theorem check; a refuted conjecture never counts.
  bool failed() const { return gating && status == CheckStatus::fail; }
  std::string to_text() const;
  nlohmann::json to_json() const;
};

struct VerifyOptions {
  int jobs = 1;
  int max_n = 8;
};

inline constexpr int kVerifyHardLimit = 10;

/// Throws std::out_of_range when n is negative or above the bound.
void check_bound(int n, const VerifyOptions& options);

/// Applies visit to every permutation of length n, sharded by first letter
/// across `jobs` threads. Each shard gets its own accumulator from `make`;
/// shards are folded together with `merge` in first-letter order.
template <typename Acc>
Acc reduce_permutations(int n, int jobs, const std::function<Acc()>& make,
                        const std::function<void(Acc&, const Permutation&)>& visit,
                        const std::function<void(Acc&, Acc&&)>& merge);

// Tableaux vs alignment/crossing statistics, tables and per-object transport.
CheckReport check_equidistribution1(int n, const VerifyOptions& options = {});
// The five equations relating pi and Psi(pi).
CheckReport check_equidist_psi(int n, const VerifyOptions& options = {});
// Tableaux vs (des + 1, a, b, c), tables and per-object transport.
CheckReport check_corollary2(int n, const VerifyOptions& options = {});
// (des, 2-31) counts vs the coefficients of Ehat_{k,n}.
CheckReport check_pattern_distribution(int n, const VerifyOptions& options = {});
// Report-only: the essential-1 distributions against the stated pairings.
CheckReport check_essential_ones_conjecture(int n, const VerifyOptions& options = {});
// Phi and its inverse, wex = k, disjoint zig-zag routes.
CheckReport check_phi_bijection(int n, const VerifyOptions& options = {});
// Psi properties, the derived sum identities, and both round trips.
CheckReport check_psi_bijection(int n, const VerifyOptions& options = {});
// Sum of the six alignment/crossing statistics and the wex-sum identities.
CheckReport check_corteel(int n, const VerifyOptions& options = {});
// a + b + c = (des + 1)(n - des - 1), with a reverse-complement cross-check.
CheckReport check_patt_const(int n, const VerifyOptions& options = {});
// D_kn vs tableau tallies, Eulerian totals, closed forms and lattice paths.
CheckReport check_enumeration(int n, const VerifyOptions& options = {});
// Specializations of D_kn and Ehat against brute force.
CheckReport check_specializations(int n, const VerifyOptions& options = {});
// The two generating functions for Ehat against each other and the polynomials.
CheckReport check_gf_identity(int n, const VerifyOptions& options = {});

using CheckFunction = CheckReport (*)(int, const VerifyOptions&);

/// Check names in the order "all" runs them.
const std::vector<std::pair<std::string, CheckFunction>>& registered_checks();

/// Runs one named check, or every check for "all". Throws
/// std::invalid_argument for an unknown name.
std::vector<CheckReport> run_check(const std::string& name, int n, const VerifyOptions& options = {});

// ----------------------------------------------------- brute-force oracles

/// Permutations of length n by number of weak excedances (index k).
std::vector<mpz_class> eulerian_by_wex(int n);
/// Permutations of length n by number of descents (index d).
std::vector<mpz_class> eulerian_by_des(int n);
/// Permutations with k-1 descents avoiding (2-31), counted directly.
mpz_class count_231_avoiders(int n, int k);
/// C(n,k) C(n,k-1) / n.
mpz_class narayana(int n, int k);
/// C(n-1, k-1) built with Pascal's rule.
mpz_class pascal_binomial(int n, int k);

}  // namespace ptab

#include "ptab/verify_impl.hpp"
