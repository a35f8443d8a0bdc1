#pragma once

#include <set>
#include <vector>

#include <json.hpp>

#include "ptab/biword.hpp"
#include "ptab/permutation.hpp"
#include "ptab/tableau.hpp"

namespace ptab {

// ------------------------------------------------------------------- Phi

/// The route taken from one border label through the 1-cells of a tableau.
///
/// `cells` lists every 1-cell passed, starting with the straight run (west
/// along a row for a vertical label, north along a column for a horizontal
/// one) and continuing with the south/east zig-zag. `zigzag_start` is the
/// index in `cells` where the zig-zag begins. An empty row gives an empty
/// list and exit_label == label.
struct ZigZagTrace {
  int label = 0;
  std::vector<Cell> cells;
  std::size_t zigzag_start = 0;
  int exit_label = 0;

  /// A vertex of the diagram: a 1-cell, or a border label when label != 0.
  struct Node {
    int row = -1;
    int col = -1;
    int label = 0;
    friend auto operator<=>(const Node&, const Node&) = default;
  };
  /// Every directed edge of the route, including the two border segments.
  std::vector<std::pair<Node, Node>> directed_edges() const;
};

ZigZagTrace zigzag_trace(const PermutationTableau& t, const PathLabeling& path, int label);
std::vector<ZigZagTrace> zigzag_traces(const PermutationTableau& t);
nlohmann::json to_json(const ZigZagTrace& trace);

/// Tableau -> permutation with wex = k. Vertical labels are the weak
/// excedance bottoms of the result.
Permutation phi(const PermutationTableau& t);

/// The inverse of phi, rebuilt column by column from the right using
/// relative fixed points and backward zig-zag traces.
PermutationTableau phi_inverse(const Permutation& p);

/// pi_0 = phi(t), and pi_{i+1} drops r_{i+1} -> pi_0(r_{i+1}) from pi_i followed
/// by every resulting relative fixed point (r_1 < ... < r_m are the non-wex
/// bottoms of pi_0).
std::vector<Biword> relative_sequence(const PermutationTableau& t);

/// Cuts the rightmost `columns` columns and then every row without a 1.
PermutationTableau truncate_columns(const PermutationTableau& t, int columns);

// ------------------------------------------------------------------- Psi

/// The data Psi reads off a permutation.
struct PsiData {
  std::set<int> desbots;
  std::set<int> destops;
  std::vector<int> rembr;  // indexed by letter, slot 0 unused
  friend bool operator==(const PsiData&, const PsiData&) = default;
};

PsiData psi_data(const Permutation& p);

/// The PsiData of Psi^{-1}(tau), read off tau: shifted weak excedance
/// bottoms/tops and the per-position C_EE + C_NN.
PsiData psi_inverse_data(const Permutation& tau);

/// The unique permutation of length n carrying `data`. Throws
/// std::logic_error when no permutation matches.
Permutation permutation_from_psi_data(int n, const PsiData& data);

/// Permutation -> permutation turning descent data and right embracing
/// numbers into weak excedance data and crossings.
Permutation psi(const Permutation& p);
Permutation psi_inverse(const Permutation& tau);

/// Psi^{-1}(Phi(t)): carries (rows, #0, #1, #2) to (des + 1, a, b, c).
Permutation tableau_to_pattern_world(const PermutationTableau& t);

}  // namespace ptab
