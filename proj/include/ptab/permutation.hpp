#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ptab {

/// Raised when a word is not a bijection on {1, ..., n}.
class MalformedPermutation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A permutation of {1, ..., n} in one-line notation.
///
/// Positions and letters are both 1-based, so `perm(i)` is the letter in
/// position i. The empty permutation (n = 0) is a valid value.
class Permutation {
 public:
  Permutation() = default;

  /// Throws MalformedPermutation unless `word` uses each of 1..n exactly once.
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);

  /// Accepts "215896374", "2,1,5,8" or "2 1 5 8". Without separators every
  /// character is one letter, which limits that form to n <= 9.
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(word_.size()); }
  bool empty() const { return word_.empty(); }

  int operator()(int position) const { return word_[position - 1]; }
  const std::vector<int>& word() const { return word_; }

  Permutation inverse() const;

  /// Digits concatenated when n <= 9, comma separated otherwise.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.word_ <=> b.word_;
  }

 private:
  std::vector<int> word_;
};

/// Visits every permutation of S_n in lexicographic order.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit);

/// Visits the permutations of S_n whose first letter is `first`, in
/// lexicographic order. Used to shard exhaustive sweeps.
void for_each_permutation_starting_with(int n, int first,
                                        const std::function<void(const Permutation&)>& visit);

std::vector<Permutation> all_permutations(int n);

unsigned long long factorial(int n);

}  // namespace ptab
