#include "ptab/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace ptab {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = size();
  std::vector<bool> seen(n + 1, false);
  for (int letter : word_) {
    if (letter < 1 || letter > n) {
      throw MalformedPermutation("letter " + std::to_string(letter) +
                                 " outside 1.." + std::to_string(n));
    }
    if (seen[letter]) {
      throw MalformedPermutation("letter " + std::to_string(letter) + " repeated");
    }
    seen[letter] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> word(n);
  std::iota(word.begin(), word.end(), 1);
  return Permutation(std::move(word));
}

Permutation Permutation::parse(std::string_view text) {
  auto is_sep = [](char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); };
  const bool separated = std::any_of(text.begin(), text.end(), is_sep);
  std::vector<int> word;
  if (!separated) {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw MalformedPermutation(std::string("unexpected character '") + c + "'");
      }
      word.push_back(c - '0');
    }
    return Permutation(std::move(word));
  }
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    for (char c : token) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw MalformedPermutation("unexpected token '" + token + "'");
      }
    }
    word.push_back(std::stoi(token));
    token.clear();
  };
  for (char c : text) {
    if (is_sep(c)) {
      flush();
    } else {
      token.push_back(c);
    }
  }
  flush();
  return Permutation(std::move(word));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(word_.size());
  for (int i = 0; i < size(); ++i) inv[word_[i] - 1] = i + 1;
  return Permutation(std::move(inv));
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  const bool compact = size() <= 9;
  for (int i = 0; i < size(); ++i) {
    if (!compact && i > 0) out << ',';
    out << word_[i];
  }
  return out.str();
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit) {
  if (n == 0) {
    visit(Permutation());
    return;
  }
  for (int first = 1; first <= n; ++first) for_each_permutation_starting_with(n, first, visit);
}

void for_each_permutation_starting_with(int n, int first,
                                        const std::function<void(const Permutation&)>& visit) {
  std::vector<int> rest;
  for (int v = 1; v <= n; ++v) {
    if (v != first) rest.push_back(v);
  }
  std::vector<int> word(n);
  word[0] = first;
  do {
    std::copy(rest.begin(), rest.end(), word.begin() + 1);
    visit(Permutation(word));
  } while (std::next_permutation(rest.begin(), rest.end()));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

unsigned long long factorial(int n) {
  unsigned long long f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<unsigned long long>(i);
  return f;
}

}  // namespace ptab
