#pragma once

#include <string>
#include <vector>

#include "ptab/permutation.hpp"

namespace ptab {

/// A relative permutation: the map bottoms[i] -> tops[i] between two words of
/// distinct integers of equal length.
class Biword {
 public:
  Biword() = default;
  /// Throws std::invalid_argument on repeated letters or unequal lengths.
  Biword(std::vector<int> tops, std::vector<int> bottoms);

  /// The biword (a_1..a_n / 1..n) of a permutation.
  static Biword of(const Permutation& p);

  const std::vector<int>& tops() const { return tops_; }
  const std::vector<int>& bottoms() const { return bottoms_; }
  int size() const { return static_cast<int>(tops_.size()); }
  bool empty() const { return tops_.empty(); }

  /// Removes the column whose bottom letter is `bottom`; no-op if absent.
  void erase_bottom(int bottom);

  std::string to_string() const;

  friend bool operator==(const Biword&, const Biword&) = default;

 private:
  std::vector<int> tops_;
  std::vector<int> bottoms_;
};

/// Rank-replaces both rows and returns the resulting permutation, read with
/// the bottom row sorted.
Permutation reduce_biword(const Biword& b);

/// Column positions (0-based) whose top and bottom letters have equal rank.
std::vector<int> relative_fixed_points(const Biword& b);

/// Deletes all relative fixed points. Deleting one never creates another.
Biword drop_relative_fixed_points(const Biword& b);

bool congruent(const Biword& a, const Biword& b);

}  // namespace ptab
