#include "ptab/biword.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <sstream>

namespace ptab {

namespace {

std::vector<int> ranks(const std::vector<int>& word) {
  std::vector<int> order(word.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return word[a] < word[b]; });
  std::vector<int> rank(word.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = static_cast<int>(r) + 1;
  return rank;
}

}  // namespace

Biword::Biword(std::vector<int> tops, std::vector<int> bottoms)
    : tops_(std::move(tops)), bottoms_(std::move(bottoms)) {
  if (tops_.size() != bottoms_.size()) throw std::invalid_argument("biword rows differ in length");
  if (std::set<int>(tops_.begin(), tops_.end()).size() != tops_.size() ||
      std::set<int>(bottoms_.begin(), bottoms_.end()).size() != bottoms_.size()) {
    throw std::invalid_argument("biword rows must consist of distinct letters");
  }
}

Biword Biword::of(const Permutation& p) {
  std::vector<int> bottoms(p.size());
  std::iota(bottoms.begin(), bottoms.end(), 1);
  return Biword(p.word(), std::move(bottoms));
}

void Biword::erase_bottom(int bottom) {
  auto it = std::find(bottoms_.begin(), bottoms_.end(), bottom);
  if (it == bottoms_.end()) return;
  const auto pos = it - bottoms_.begin();
  bottoms_.erase(it);
  tops_.erase(tops_.begin() + pos);
}

std::string Biword::to_string() const {
  std::ostringstream out;
  out << '(';
  for (int i = 0; i < size(); ++i) out << (i ? " " : "") << tops_[i];
  out << " / ";
  for (int i = 0; i < size(); ++i) out << (i ? " " : "") << bottoms_[i];
  out << ')';
  return out.str();
}

Permutation reduce_biword(const Biword& b) {
  const auto top_rank = ranks(b.tops());
  const auto bottom_rank = ranks(b.bottoms());
  std::vector<int> word(b.size());
  for (int i = 0; i < b.size(); ++i) word[bottom_rank[i] - 1] = top_rank[i];
  return Permutation(std::move(word));
}

std::vector<int> relative_fixed_points(const Biword& b) {
  const auto top_rank = ranks(b.tops());
  const auto bottom_rank = ranks(b.bottoms());
  std::vector<int> out;
  for (int i = 0; i < b.size(); ++i) {
    if (top_rank[i] == bottom_rank[i]) out.push_back(i);
  }
  return out;
}

Biword drop_relative_fixed_points(const Biword& b) {
  const auto fixed = relative_fixed_points(b);
  std::vector<int> tops, bottoms;
  std::size_t next = 0;
  for (int i = 0; i < b.size(); ++i) {
    if (next < fixed.size() && fixed[next] == i) {
      ++next;
      continue;
    }
    tops.push_back(b.tops()[i]);
    bottoms.push_back(b.bottoms()[i]);
  }
  return Biword(std::move(tops), std::move(bottoms));
}

bool congruent(const Biword& a, const Biword& b) {
  return a.size() == b.size() && reduce_biword(a) == reduce_biword(b);
}

}  // namespace ptab
