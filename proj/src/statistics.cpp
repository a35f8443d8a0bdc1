#include "ptab/statistics.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace ptab {

long binomial2(long n) { return n < 2 ? 0 : n * (n - 1) / 2; }

WexData weak_excedances(const Permutation& p) {
  WexData w;
  for (int i = 1; i <= p.size(); ++i) {
    if (p(i) >= i) {
      w.bottoms.push_back(i);
      w.tops.push_back(p(i));
      w.bottom_sum += i;
      w.top_sum += p(i);
    }
  }
  w.wex = static_cast<int>(w.bottoms.size());
  std::sort(w.tops.begin(), w.tops.end());
  return w;
}

DescentData descents(const Permutation& p) {
  DescentData d;
  for (int i = 1; i < p.size(); ++i) {
    if (p(i) > p(i + 1)) {
      d.tops.push_back(p(i));
      d.bottoms.push_back(p(i + 1));
      d.top_sum += p(i);
      d.bottom_sum += p(i + 1);
      d.maj += i;
    }
  }
  d.des = static_cast<int>(d.tops.size());
  std::sort(d.tops.begin(), d.tops.end());
  std::sort(d.bottoms.begin(), d.bottoms.end());
  return d;
}

int count_cycles(const Permutation& p) {
  std::vector<bool> seen(p.size() + 1, false);
  int cycles = 0;
  for (int i = 1; i <= p.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (int j = i; !seen[j]; j = p(j)) seen[j] = true;
  }
  return cycles;
}

int count_left_to_right_minima(const Permutation& p) {
  int count = 0;
  int low = p.size() + 1;
  for (int letter : p.word()) {
    if (letter < low) {
      low = letter;
      ++count;
    }
  }
  return count;
}

AlignmentCrossing alignments_crossings(const Permutation& p) {
  const int n = p.size();
  AlignmentCrossing ac;
  for (auto* v : {&ac.a_ee, &ac.a_nn, &ac.a_en, &ac.a_ne, &ac.c_ee, &ac.c_nn}) v->assign(n, 0);
  for (int i = 1; i <= n; ++i) {
    const int ai = p(i);
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      const int aj = p(j);
      if (j < i && i <= ai && ai < aj) ++ac.a_ee[i - 1];
      if (aj < ai && ai < i && i < j) ++ac.a_nn[i - 1];
      if (j <= aj && aj < ai && ai < i) ++ac.a_en[i - 1];
      if (ai < i && i < j && j <= aj) ++ac.a_ne[i - 1];
      if (j < i && i <= aj && aj < ai) ++ac.c_ee[i - 1];
      if (ai < aj && aj < i && i < j) ++ac.c_nn[i - 1];
    }
  }
  for (int i = 0; i < n; ++i) {
    ac.total_a_ee += ac.a_ee[i];
    ac.total_a_nn += ac.a_nn[i];
    ac.total_a_en += ac.a_en[i];
    ac.total_a_ne += ac.a_ne[i];
    ac.total_c_ee += ac.c_ee[i];
    ac.total_c_nn += ac.c_nn[i];
  }
  return ac;
}

// --------------------------------------------------------------- patterns

VincularPattern::VincularPattern(std::vector<int> letters, std::vector<bool> adjacent)
    : letters_(std::move(letters)), adjacent_(std::move(adjacent)) {
  const auto len = letters_.size();
  if (len == 0) throw std::invalid_argument("empty pattern");
  if (adjacent_.size() != len - 1) throw std::invalid_argument("pattern gap count mismatch");
  std::vector<int> sorted = letters_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < len; ++i) {
    if (sorted[i] != static_cast<int>(i) + 1) {
      throw std::invalid_argument("pattern letters must be a permutation of 1..L");
    }
  }
}

VincularPattern VincularPattern::parse(std::string_view text) {
  std::vector<int> letters;
  std::vector<bool> adjacent;
  bool dash_pending = false;
  for (char c : text) {
    if (c == '(' || c == ')' || c == ' ') continue;
    if (c == '-') {
      if (letters.empty() || dash_pending) {
        throw std::invalid_argument("misplaced dash in pattern '" + std::string(text) + "'");
      }
      dash_pending = true;
      continue;
    }
    if (c < '1' || c > '9') {
      throw std::invalid_argument("bad character in pattern '" + std::string(text) + "'");
    }
    if (!letters.empty()) adjacent.push_back(!dash_pending);
    dash_pending = false;
    letters.push_back(c - '0');
  }
  if (dash_pending) throw std::invalid_argument("trailing dash in pattern");
  return VincularPattern(std::move(letters), std::move(adjacent));
}

std::string VincularPattern::to_string() const {
  std::string out;
  for (int i = 0; i < length(); ++i) {
    if (i > 0 && !adjacent_[i - 1]) out.push_back('-');
    out += std::to_string(letters_[i]);
  }
  return out;
}

long count_vincular(const Permutation& p, const VincularPattern& pattern) {
  const int n = p.size();
  const int len = pattern.length();
  if (len > n) return 0;
  const auto& pl = pattern.letters();
  const auto& adj = pattern.adjacent();
  std::vector<int> chosen(len);
  long count = 0;
  std::function<void(int, int)> extend = [&](int g, int from) {
    if (g == len) {
      ++count;
      return;
    }
    const int last = (g > 0 && adj[g - 1]) ? from : n;
    // Leave room for the remaining pattern letters.
    const int limit = std::min(last, n - (len - g));
    for (int pos = from; pos <= limit; ++pos) {
      const int letter = p.word()[pos];
      bool ok = true;
      for (int h = 0; h < g && ok; ++h) {
        ok = (pl[h] < pl[g]) == (p.word()[chosen[h]] < letter);
      }
      if (!ok) continue;
      chosen[g] = pos;
      extend(g + 1, pos + 1);
    }
  };
  extend(0, 0);
  return count;
}

PatternCounts pattern_counts(const Permutation& p) {
  // Each of these has exactly one adjacent pair that forms a descent, so a
  // scan over descents and the remaining letter is enough.
  PatternCounts pc;
  const int n = p.size();
  const auto& w = p.word();
  for (int d = 0; d + 1 < n; ++d) {
    const int y = w[d];
    const int x = w[d + 1];
    if (y < x) continue;
    for (int o = 0; o < n; ++o) {
      if (o == d || o == d + 1) continue;
      const int z = w[o];
      if (o < d) {
        if (x < z && z < y) ++pc.p2_31;
        else if (z < x) ++pc.p1_32;
        else ++pc.p3_21;
      } else {
        if (x < z && z < y) ++pc.p31_2;
        else if (z > y) ++pc.p21_3;
        else ++pc.p32_1;
      }
    }
  }
  return pc;
}

AbcStatistics abc_statistics(const Permutation& p) {
  const auto pc = pattern_counts(p);
  const long des = descents(p).des;
  const long n = p.size();
  AbcStatistics s;
  s.a = pc.p21_3 + pc.p3_21 + pc.p31_2 - binomial2(des);
  s.b = pc.p2_31 + n - 1 - des;
  s.c = pc.p1_32 + pc.p32_1 - binomial2(des);
  s.mak = pc.p1_32 + pc.p32_1 + pc.p2_31 + des;
  return s;
}

std::vector<int> rembr_vector(const Permutation& p) {
  const int n = p.size();
  std::vector<int> out(n + 1, 0);
  const auto& w = p.word();
  for (int pos = 0; pos < n; ++pos) {
    const int letter = w[pos];
    for (int d = pos + 1; d + 1 < n; ++d) {
      if (w[d + 1] < letter && letter < w[d]) ++out[letter];
    }
  }
  return out;
}

// ---------------------------------------------------------------- bundles

StatBundle stat_bundle(const Permutation& p) {
  StatBundle s;
  s.n = p.size();
  s.wex = weak_excedances(p);
  s.des = descents(p);
  s.ac = alignments_crossings(p);
  s.patterns = pattern_counts(p);
  s.abc = abc_statistics(p);
  s.rembr = rembr_vector(p);
  s.cycles = count_cycles(p);
  s.lr_minima = count_left_to_right_minima(p);
  return s;
}

std::vector<std::string> scalar_statistic_names() {
  return {"n",     "wex",   "des",   "maj",   "mak",   "wexbotsum", "wextopsum", "desbotsum",
          "destopsum", "A_EE", "A_NN", "A_EN", "A_NE", "C_EE", "C_NN", "a", "b", "c",
          "2-31",  "31-2",  "21-3",  "3-21",  "1-32",  "32-1",  "cycles", "lrmin"};
}

long scalar_statistic(const StatBundle& s, std::string_view name) {
  if (name == "n") return s.n;
  if (name == "wex") return s.wex.wex;
  if (name == "des") return s.des.des;
  if (name == "maj") return s.des.maj;
  if (name == "mak") return s.abc.mak;
  if (name == "wexbotsum") return s.wex.bottom_sum;
  if (name == "wextopsum") return s.wex.top_sum;
  if (name == "desbotsum") return s.des.bottom_sum;
  if (name == "destopsum") return s.des.top_sum;
  if (name == "A_EE") return s.ac.total_a_ee;
  if (name == "A_NN") return s.ac.total_a_nn;
  if (name == "A_EN") return s.ac.total_a_en;
  if (name == "A_NE") return s.ac.total_a_ne;
  if (name == "C_EE") return s.ac.total_c_ee;
  if (name == "C_NN") return s.ac.total_c_nn;
  if (name == "a") return s.abc.a;
  if (name == "b") return s.abc.b;
  if (name == "c") return s.abc.c;
  if (name == "2-31") return s.patterns.p2_31;
  if (name == "31-2") return s.patterns.p31_2;
  if (name == "21-3") return s.patterns.p21_3;
  if (name == "3-21") return s.patterns.p3_21;
  if (name == "1-32") return s.patterns.p1_32;
  if (name == "32-1") return s.patterns.p32_1;
  if (name == "cycles") return s.cycles;
  if (name == "lrmin") return s.lr_minima;
  throw std::invalid_argument("unknown permutation statistic '" + std::string(name) + "'");
}

nlohmann::json to_json(const StatBundle& s) {
  nlohmann::json j;
  j["n"] = s.n;
  j["wex"] = s.wex.wex;
  j["wexbots"] = s.wex.bottoms;
  j["wextops"] = s.wex.tops;
  j["wexbotsum"] = s.wex.bottom_sum;
  j["wextopsum"] = s.wex.top_sum;
  j["des"] = s.des.des;
  j["desbots"] = s.des.bottoms;
  j["destops"] = s.des.tops;
  j["desbotsum"] = s.des.bottom_sum;
  j["destopsum"] = s.des.top_sum;
  j["maj"] = s.des.maj;
  j["mak"] = s.abc.mak;
  j["A_EE"] = s.ac.total_a_ee;
  j["A_NN"] = s.ac.total_a_nn;
  j["A_EN"] = s.ac.total_a_en;
  j["A_NE"] = s.ac.total_a_ne;
  j["C_EE"] = s.ac.total_c_ee;
  j["C_NN"] = s.ac.total_c_nn;
  j["per_position"] = {{"A_EE", s.ac.a_ee}, {"A_NN", s.ac.a_nn}, {"A_EN", s.ac.a_en},
                       {"A_NE", s.ac.a_ne}, {"C_EE", s.ac.c_ee}, {"C_NN", s.ac.c_nn}};
  j["a"] = s.abc.a;
  j["b"] = s.abc.b;
  j["c"] = s.abc.c;
  j["patterns"] = {{"2-31", s.patterns.p2_31}, {"31-2", s.patterns.p31_2},
                   {"21-3", s.patterns.p21_3}, {"3-21", s.patterns.p3_21},
                   {"1-32", s.patterns.p1_32}, {"32-1", s.patterns.p32_1}};
  j["rembr"] = std::vector<int>(s.rembr.begin() + (s.rembr.empty() ? 0 : 1), s.rembr.end());
  j["cycles"] = s.cycles;
  j["lrmin"] = s.lr_minima;
  return j;
}

// ------------------------------------------------------ tableau statistics

TableauStats tableau_stats(const PermutationTableau& t) {
  TableauStats s;
  const int k = t.k();
  const int m = t.num_columns();
  const auto& shape = t.shape();
  s.rows = k;
  s.twos = k * m - shape.size();

  std::vector<int> top_one(m, -1);
  for (int c = 0; c < m; ++c) {
    for (int r = 0; r < shape.column_height(c); ++r) {
      if (t.at(r, c) == 1) {
        top_one[c] = r;
        break;
      }
    }
  }
  for (int r = 0; r < shape.num_parts(); ++r) {
    int leftmost = -1;
    for (int c = 0; c < shape.parts()[r]; ++c) {
      if (t.at(r, c) == 1) {
        ++s.ones;
        if (leftmost < 0) leftmost = c;
        if (top_one[c] == r || leftmost == c) ++s.essential_ones;
      } else {
        ++s.zeros;
        if (top_one[c] >= 0 && top_one[c] < r) ++s.bad_zeros;
      }
    }
  }
  for (int c = 0; c < m; ++c) {
    if (top_one[c] >= 0) ++s.white;
  }
  s.black = s.ones - s.white;
  return s;
}

nlohmann::json to_json(const TableauStats& s) {
  return nlohmann::json{{"rows", s.rows},   {"zeros", s.zeros},
                        {"ones", s.ones},   {"twos", s.twos},
                        {"essential_ones", s.essential_ones},
                        {"white", s.white}, {"black", s.black},
                        {"bad_zeros", s.bad_zeros}};
}

std::vector<std::string> tableau_statistic_names() {
  return {"rows", "zeros", "ones", "twos", "essential_ones", "white", "black", "bad_zeros"};
}

long scalar_statistic(const TableauStats& s, std::string_view name) {
  if (name == "rows" || name == "k") return s.rows;
  if (name == "zeros") return s.zeros;
  if (name == "ones") return s.ones;
  if (name == "twos") return s.twos;
  if (name == "essential_ones") return s.essential_ones;
  if (name == "white") return s.white;
  if (name == "black") return s.black;
  if (name == "bad_zeros") return s.bad_zeros;
  throw std::invalid_argument("unknown tableau statistic '" + std::string(name) + "'");
}

}  // namespace ptab
