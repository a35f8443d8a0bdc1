#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ptab/permutation.hpp"
#include "ptab/tableau.hpp"

namespace ptab {

// ------------------------------------------------------------ excedances

struct WexData {
  int wex = 0;
  std::vector<int> bottoms;  // positions i with p(i) >= i, increasing
  std::vector<int> tops;     // the letters p(i) at those positions, increasing
  long bottom_sum = 0;
  long top_sum = 0;
};

WexData weak_excedances(const Permutation& p);

struct DescentData {
  int des = 0;
  std::vector<int> bottoms;  // letters a_{i+1} with a_i > a_{i+1}, increasing
  std::vector<int> tops;     // letters a_i, increasing
  long bottom_sum = 0;
  long top_sum = 0;
  long maj = 0;              // sum of descent positions i
};

DescentData descents(const Permutation& p);

int count_cycles(const Permutation& p);
int count_left_to_right_minima(const Permutation& p);

// ---------------------------------------------------- alignments/crossings

/// The six pair statistics, per position (index i-1 for position i) and as
/// totals. With a_i = p(i):
///   A_EE(i) = {j : j < i <= a_i < a_j}      A_NN(i) = {j : a_j < a_i < i < j}
///   A_EN(i) = {j : j <= a_j < a_i < i}      A_NE(i) = {j : a_i < i < j <= a_j}
///   C_EE(i) = {j : j < i <= a_j < a_i}      C_NN(i) = {j : a_i < a_j < i < j}
struct AlignmentCrossing {
  std::vector<int> a_ee, a_nn, a_en, a_ne, c_ee, c_nn;
  long total_a_ee = 0, total_a_nn = 0, total_a_en = 0, total_a_ne = 0;
  long total_c_ee = 0, total_c_nn = 0;
};

AlignmentCrossing alignments_crossings(const Permutation& p);

// ------------------------------------------------------- vincular patterns

/// A pattern whose letters not separated by a dash must be adjacent in an
/// occurrence. `adjacent[g]` refers to the gap between letters g and g+1.
class VincularPattern {
 public:
  /// Throws std::invalid_argument on a malformed spec.
  VincularPattern(std::vector<int> letters, std::vector<bool> adjacent);

  /// Parses "2-31", "31-2", "2-3-1", "123".
  static VincularPattern parse(std::string_view text);

  int length() const { return static_cast<int>(letters_.size()); }
  const std::vector<int>& letters() const { return letters_; }
  const std::vector<bool>& adjacent() const { return adjacent_; }
  std::string to_string() const;

 private:
  std::vector<int> letters_;
  std::vector<bool> adjacent_;
};

/// Number of occurrences of `pattern` in `p`.
long count_vincular(const Permutation& p, const VincularPattern& pattern);

/// Counts of the six length-3 one-dash patterns the composite statistics use.
struct PatternCounts {
  long p2_31 = 0;  // (2-31)
  long p31_2 = 0;  // (31-2)
  long p21_3 = 0;  // (21-3)
  long p3_21 = 0;  // (3-21)
  long p1_32 = 0;  // (1-32)
  long p32_1 = 0;  // (32-1)
};

PatternCounts pattern_counts(const Permutation& p);

struct AbcStatistics {
  long a = 0;
  long b = 0;
  long c = 0;
  long mak = 0;  // (1-32) + (32-1) + (2-31) + des
};

AbcStatistics abc_statistics(const Permutation& p);

/// rembr(l), indexed by letter (slot 0 unused): the number of descents y x
/// lying to the right of l with x < l < y.
std::vector<int> rembr_vector(const Permutation& p);

// ------------------------------------------------------------- bundles

struct StatBundle {
  int n = 0;
  WexData wex;
  DescentData des;
  AlignmentCrossing ac;
  PatternCounts patterns;
  AbcStatistics abc;
  std::vector<int> rembr;
  int cycles = 0;
  int lr_minima = 0;
};

StatBundle stat_bundle(const Permutation& p);
nlohmann::json to_json(const StatBundle& s);

/// Named scalar statistic lookup (e.g. "wex", "des", "maj", "A_NE", "b",
/// "2-31", "cycles"). Throws std::invalid_argument for unknown names.
long scalar_statistic(const StatBundle& s, std::string_view name);
std::vector<std::string> scalar_statistic_names();

// ------------------------------------------------------ tableau statistics

struct TableauStats {
  int rows = 0;   // the box height k
  int zeros = 0;
  int ones = 0;
  int twos = 0;   // k(n-k) - |shape|
  int essential_ones = 0;
  int white = 0;  // topmost 1 of each column
  int black = 0;  // every other 1
  int bad_zeros = 0;  // 0's with a 1 somewhere above them in the column
};

TableauStats tableau_stats(const PermutationTableau& t);
nlohmann::json to_json(const TableauStats& s);
long scalar_statistic(const TableauStats& s, std::string_view name);
std::vector<std::string> tableau_statistic_names();

long binomial2(long n);  // C(n, 2), zero for n < 2

}  // namespace ptab
