#include "ptab/enumeration.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>

#include "ptab/permutation.hpp"
#include "ptab/statistics.hpp"

namespace ptab {

namespace {

const Polynomial kP = Polynomial::variable(Var::p);
const Polynomial kQ = Polynomial::variable(Var::q);
const Polynomial kR = Polynomial::variable(Var::r);
const Polynomial kY = Polynomial::variable(Var::y);

class FillingCache {
 public:
  std::optional<Polynomial> find(const std::vector<int>& parts) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(parts);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }
  void insert(const std::vector<int>& parts, const Polynomial& value) {
    std::unique_lock lock(mutex_);
    table_.emplace(parts, value);
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::vector<int>, Polynomial> table_;
};

FillingCache& filling_cache() {
  static FillingCache cache;
  return cache;
}

std::vector<int> without_zeros(std::vector<int> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return parts;
}

Polynomial fillings(const std::vector<int>& parts) {
  const int k = static_cast<int>(parts.size());
  if (k == 0) return Polynomial(1L);
  if (k == 1) return Polynomial::variable(Var::q, parts[0]);
  if (auto hit = filling_cache().find(parts)) return *hit;

  const int last = parts.back();
  std::vector<int> minus_column(parts);
  for (int& part : minus_column) --part;
  std::vector<int> minus_corner(parts);
  --minus_corner.back();
  std::vector<int> minus_row(parts.begin(), parts.end() - 1);

  // The bottom row's last cell is the lone 1 of its column, a 1 with another
  // 1 above it, or the end of an all-zero bottom row.
  Polynomial value = Polynomial::monomial(1, {k - 1, 1, 0, 0}) * fillings(without_zeros(minus_column)) +
                     kQ * fillings(without_zeros(minus_corner)) +
                     Polynomial::variable(Var::p, last) * fillings(minus_row);
  filling_cache().insert(parts, value);
  return value;
}

}  // namespace

Polynomial F_lambda(const Partition& shape) { return fillings(shape.parts()); }

Polynomial F_lambda(const Partition& shape, int rows) {
  if (rows != shape.num_parts()) {
    throw std::invalid_argument("shape " + shape.to_string() + " does not have " + std::to_string(rows) +
                                " rows");
  }
  return F_lambda(shape);
}

Polynomial D_kn(int k, int n, ShapeRange range) {
  if (k < 0 || n < k) throw std::invalid_argument("D_kn needs 0 <= k <= n");
  const int m = n - k;
  const auto shapes = range == ShapeRange::full_first_row ? tableau_shapes(k, n) : partitions_in_box(k, m);
  Polynomial total;
  for (const Partition& shape : shapes) {
    total += F_lambda(shape) * Polynomial::variable(Var::r, k * m - shape.size());
  }
  return total;
}

// ------------------------------------------------------ q-Eulerian forms

Polynomial E_kn_closed(int k, int n) {
  if (k < 1 || n < k) throw std::invalid_argument("E_kn needs 1 <= k <= n");
  Polynomial sum;
  for (int i = 0; i < k; ++i) {
    Polynomial term = q_analog(k - i).pow(static_cast<unsigned>(n)).shifted(Var::q, k * i - k);
    term *= Polynomial::monomial(binomial(n, i), {0, k - i, 0, 0}) + Polynomial(binomial(n, i - 1));
    if (i % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return assert_polynomial(sum.shifted(Var::q, n - k * k));
}

Polynomial E_hat(int k, int n) { return assert_polynomial(E_kn_closed(k, n).shifted(Var::q, k - n)); }

Polynomial carlitz_recurrence(int n, int k) {
  if (n < 0 || k < 0) return Polynomial();
  std::vector<Polynomial> row(1, Polynomial(1L));  // B_{0,.}
  for (int m = 1; m <= n; ++m) {
    std::vector<Polynomial> next(m + 1);
    for (int j = 0; j <= m; ++j) {
      Polynomial value;
      if (j < static_cast<int>(row.size())) value += q_analog(j + 1) * row[j];
      if (j >= 1 && j - 1 < static_cast<int>(row.size())) {
        value += q_analog(m - j).shifted(Var::q, j) * row[j - 1];
      }
      next[j] = std::move(value);
    }
    row = std::move(next);
  }
  return k < static_cast<int>(row.size()) ? row[k] : Polynomial();
}

Polynomial carlitz_definitional(int n, int k) {
  Polynomial out;
  if (k < 1) return out;
  const long offset = binomial2(k);
  for_each_permutation(n, [&](const Permutation& p) {
    const auto d = descents(p);
    if (d.des == k - 1) out += Polynomial::variable(Var::q, static_cast<int>(d.maj - offset));
  });
  return out;
}

namespace {

Polynomial carlitz_under(const CarlitzConvention& c, int n, int k) {
  Polynomial value = carlitz_recurrence(n, k - c.index_shift);
  if (c.subtract_binomial) value = value.shifted(Var::q, -static_cast<int>(binomial2(k)));
  return value;
}

}  // namespace

CarlitzConvention resolve_carlitz_convention() {
  static const CarlitzConvention resolved = [] {
    for (int shift : {0, 1, -1}) {
      for (bool subtract : {false, true}) {
        const CarlitzConvention candidate{shift, subtract};
        bool matches = true;
        for (int n : {3, 4}) {
          for (int k = 0; k <= n + 1 && matches; ++k) {
            matches = carlitz_under(candidate, n, k) == carlitz_definitional(n, k);
          }
        }
        if (matches) return candidate;
      }
    }
    throw std::logic_error("no index convention reconciles the Carlitz recurrence with its definition");
  }();
  return resolved;
}

Polynomial carlitz_B(int n, int k) { return carlitz_under(resolve_carlitz_convention(), n, k); }

// ------------------------------------------------------ generating series

namespace {

TruncatedSeries one_minus_x_times(int order, const Polynomial& c) {
  TruncatedSeries s(order);
  s[0] = Polynomial(1L);
  if (order >= 1) s[1] = -c;
  return s;
}

Polynomial drop_y_above(const Polynomial& poly, int max_power) {
  Polynomial out;
  for (const auto& [e, c] : poly.terms()) {
    if (e[static_cast<int>(Var::y)] <= max_power) out += Polynomial::monomial(c, e);
  }
  return out;
}

}  // namespace

TruncatedSeries D_k_series(int k, int order) {
  const Polynomial two = pq_analog(2);
  const Polynomial three = pq_analog(3);
  std::vector<Polynomial> denominators;
  TruncatedSeries numerator(order);
  switch (k) {
    case 1:
      denominators = {kQ};
      numerator = TruncatedSeries::monomial(order, 1L, 1);
      break;
    case 2:
      denominators = {kP * kQ, kQ * kR, kQ * two};
      numerator = TruncatedSeries::monomial(order, 1L, 2);
      break;
    case 3: {
      denominators = {kP * kP * kQ, kP * kQ * kR, kQ * kR * kR, kP * kQ * two, kQ * kR * two, kQ * three};
      numerator = TruncatedSeries::monomial(order, 1L, 3) +
                  TruncatedSeries::monomial(order, Polynomial::monomial(1, {1, 2, 0, 0}), 4) -
                  TruncatedSeries::monomial(order,
                                            Polynomial::monomial(1, {3, 2, 1, 0}) +
                                                Polynomial::monomial(2, {2, 3, 1, 0}) +
                                                Polynomial::monomial(1, {1, 4, 1, 0}),
                                            5);
      break;
    }
    default:
      throw std::invalid_argument("closed forms exist only for k = 1, 2, 3");
  }
  TruncatedSeries result = numerator;
  for (const auto& c : denominators) result = result * series_reciprocal(one_minus_x_times(order, c));
  return result;
}

TruncatedSeries E_gf_series(int order) {
  TruncatedSeries total(order);
  for (int i = 0; i <= order; ++i) {
    const Polynomial bracket = q_analog(i);
    const Polynomial numerator = kY.pow(i) * (Polynomial::variable(Var::q, 2 * i + 1) - kY);
    TruncatedSeries denominator(order);
    denominator[0] = Polynomial::variable(Var::q, i * i + 2 * i + 1);
    if (order >= 1) {
      denominator[1] = (bracket * (kY - Polynomial::variable(Var::q, i + 1))).shifted(Var::q, i * i + i + 1);
    }
    const TruncatedSeries term =
        (numerator * series_reciprocal(denominator)).map([&](const Polynomial& c) { return drop_y_above(c, order); });
    total += term;
  }
  return total.map([&](const Polynomial& c) { return drop_y_above(c, order); });
}

TruncatedSeries E_hat_gf_series(int order) {
  const TruncatedSeries raw = E_gf_series(order);
  TruncatedSeries out(order);
  for (int n = 0; n <= order; ++n) {
    for (const auto& [e, c] : raw[n].terms()) {
      Exponents moved = e;
      moved[static_cast<int>(Var::q)] += e[static_cast<int>(Var::y)] - n;
      out[n] += Polynomial::monomial(c, moved);
    }
  }
  return out;
}

TruncatedSeries E_hat_cf_series(int order) {
  TruncatedSeries out(order);
  const int max_height = order / 2 + 1;
  std::vector<Polynomial> flat(max_height + 1), down(max_height + 1);
  for (int h = 0; h <= max_height; ++h) {
    flat[h] = kY * q_analog(h + 1) + q_analog(h);
    down[h] = kY * q_analog(h).pow(2);
  }
  // paths[h] = weight of all Motzkin prefixes of the current length ending at height h
  std::vector<Polynomial> paths(max_height + 1);
  paths[0] = Polynomial(1L);
  out[0] = paths[0];
  for (int n = 1; n <= order; ++n) {
    std::vector<Polynomial> next(max_height + 1);
    for (int h = 0; h <= max_height; ++h) {
      if (paths[h].is_zero()) continue;
      if (h + 1 <= max_height) next[h + 1] += paths[h];
      next[h] += flat[h] * paths[h];
      if (h >= 1) next[h - 1] += down[h] * paths[h];
    }
    paths = std::move(next);
    out[n] = paths[0];
  }
  return out;
}

// ---------------------------------------------------------- lattice paths

std::vector<WeightedLatticeStep> lattice_steps(int k, int rows_seen, int height) {
  std::vector<WeightedLatticeStep> steps;
  if (rows_seen < k) steps.push_back({WeightedLatticeStep::Kind::northeast, 0, Polynomial(1L)});
  if (height < 1) return steps;

  const int dead = rows_seen - height;
  std::vector<Polynomial> by_drop(height);
  // The column's topmost 1 sits in the t-th live row; of the live rows below
  // it, `drop` become new bad zeros and the rest hold 1's.
  for (int t = 1; t <= height; ++t) {
    for (int drop = 0; drop <= height - t; ++drop) {
      by_drop[drop] += Polynomial::monomial(binomial(height - t, drop),
                                            {dead + (t - 1) + drop, height - t - drop + 1, k - rows_seen, 0});
    }
  }
  for (int drop = 0; drop < height; ++drop) {
    if (by_drop[drop].is_zero()) continue;
    steps.push_back({drop == 0 ? WeightedLatticeStep::Kind::east : WeightedLatticeStep::Kind::southeast, drop,
                     std::move(by_drop[drop])});
  }
  return steps;
}

TruncatedSeries lattice_path_D(int k, int order) {
  if (k < 1) throw std::invalid_argument("lattice_path_D needs k >= 1");
  using State = std::pair<int, int>;  // (rows seen, height)
  std::map<State, Polynomial> states{{{0, 0}, Polynomial(1L)}};
  TruncatedSeries out(order);
  for (int n = 1; n <= order; ++n) {
    std::map<State, Polynomial> next;
    for (const auto& [state, weight] : states) {
      const auto [rows_seen, height] = state;
      for (const auto& step : lattice_steps(k, rows_seen, height)) {
        if (step.kind == WeightedLatticeStep::Kind::northeast) {
          next[{rows_seen + 1, height + 1}] += weight;
        } else {
          next[{rows_seen, height - step.drop}] += weight * step.weight;
        }
      }
    }
    states = std::move(next);
    for (const auto& [state, weight] : states) {
      if (state.first == k) out[n] += weight;
    }
  }
  return out;
}

}  // namespace ptab
