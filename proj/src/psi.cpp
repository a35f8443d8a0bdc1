#include <algorithm>
#include <functional>
#include <stdexcept>

#include "ptab/bijections.hpp"
#include "ptab/statistics.hpp"

namespace ptab {

PsiData psi_data(const Permutation& p) {
  const auto d = descents(p);
  return PsiData{std::set<int>(d.bottoms.begin(), d.bottoms.end()),
                 std::set<int>(d.tops.begin(), d.tops.end()), rembr_vector(p)};
}

Permutation psi(const Permutation& p) {
  const int n = p.size();
  if (n == 0) return p;
  const PsiData data = psi_data(p);

  std::vector<bool> is_wexbottom(n + 1, false), is_wextop(n + 1, false);
  is_wexbottom[1] = true;
  for (int b : data.desbots) is_wexbottom[b + 1] = true;
  is_wextop[n] = true;
  for (int t : data.destops) is_wextop[t - 1] = true;

  std::vector<int> unused_wextops, unused_nonwextops;
  for (int v = 1; v <= n; ++v) (is_wextop[v] ? unused_wextops : unused_nonwextops).push_back(v);

  std::vector<int> word(n, 0);
  // Weak excedance part, largest bottom first: the (e+1)-th smallest unused
  // wextop >= b leaves exactly e unused wextops in [b, t) for the positions
  // to its left, which is C_EE(b).
  for (int b = n; b >= 1; --b) {
    if (!is_wexbottom[b]) continue;
    const int e = data.rembr[b];
    auto it = std::lower_bound(unused_wextops.begin(), unused_wextops.end(), b);
    if (unused_wextops.end() - it <= e) throw std::logic_error("psi: no admissible wextop");
    it += e;
    word[b - 1] = *it;
    unused_wextops.erase(it);
  }
  // Non-weak excedance part, smallest bottom first: the (e+1)-th largest
  // unused non-wextop < b leaves e unused ones in (d, b) for positions to its
  // right, which is C_NN(b).
  for (int b = 1; b <= n; ++b) {
    if (is_wexbottom[b]) continue;
    const int e = data.rembr[b];
    auto it = std::lower_bound(unused_nonwextops.begin(), unused_nonwextops.end(), b);
    if (it - unused_nonwextops.begin() <= e) throw std::logic_error("psi: no admissible non-wextop");
    it -= e + 1;
    word[b - 1] = *it;
    unused_nonwextops.erase(it);
  }
  return Permutation(std::move(word));
}

PsiData psi_inverse_data(const Permutation& tau) {
  const int n = tau.size();
  const auto wex = weak_excedances(tau);
  const auto ac = alignments_crossings(tau);
  PsiData data;
  for (int b : wex.bottoms) {
    if (b != 1) data.desbots.insert(b - 1);
  }
  for (int t : wex.tops) {
    if (t != n) data.destops.insert(t + 1);
  }
  data.rembr.assign(n + 1, 0);
  for (int i = 1; i <= n; ++i) data.rembr[i] = ac.c_ee[i - 1] + ac.c_nn[i - 1];
  return data;
}

Permutation permutation_from_psi_data(int n, const PsiData& data) {
  if (n == 0) return Permutation();
  std::vector<bool> is_top(n + 2, false), is_bottom(n + 2, false);
  for (int t : data.destops) {
    if (t < 1 || t > n) throw std::logic_error("descent top out of range");
    is_top[t] = true;
  }
  for (int b : data.desbots) {
    if (b < 1 || b > n) throw std::logic_error("descent bottom out of range");
    is_bottom[b] = true;
  }

  // Built from the right: when a letter is prepended, every descent that can
  // embrace it is already in place, so its embracing number is final.
  std::vector<int> suffix;  // suffix[0] is the rightmost letter
  std::vector<std::pair<int, int>> descents_right;  // (top, bottom)
  std::vector<bool> used(n + 1, false);

  std::function<bool()> extend = [&]() -> bool {
    if (static_cast<int>(suffix.size()) == n) return !is_bottom[suffix.back()];
    const bool first = suffix.empty();
    const int z = first ? 0 : suffix.back();
    for (int letter = 1; letter <= n; ++letter) {
      if (used[letter]) continue;
      if (first) {
        if (is_top[letter]) continue;
      } else if (is_top[letter]) {
        if (!(z < letter && is_bottom[z])) continue;
      } else {
        if (!(z > letter && !is_bottom[z])) continue;
      }
      int embraced = 0;
      for (const auto& [y, x] : descents_right) {
        if (x < letter && letter < y) ++embraced;
      }
      if (embraced != data.rembr[letter]) continue;

      used[letter] = true;
      suffix.push_back(letter);
      const bool descent = !first && z < letter;
      if (descent) descents_right.emplace_back(letter, z);
      if (extend()) return true;
      if (descent) descents_right.pop_back();
      suffix.pop_back();
      used[letter] = false;
    }
    return false;
  };

  if (!extend()) throw std::logic_error("no permutation carries the given descent data");
  std::vector<int> word(suffix.rbegin(), suffix.rend());
  return Permutation(std::move(word));
}

Permutation psi_inverse(const Permutation& tau) {
  return permutation_from_psi_data(tau.size(), psi_inverse_data(tau));
}

Permutation tableau_to_pattern_world(const PermutationTableau& t) {
  return psi_inverse(phi(t));
}

}  // namespace ptab
