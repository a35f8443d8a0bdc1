#pragma once

#include <vector>

#include <json.hpp>

#include "ptab/polynomial.hpp"

namespace ptab {

/// Power series in x with polynomial coefficients, exact through x^order.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order);
  TruncatedSeries(int order, const std::vector<Polynomial>& coeffs);

  /// c * x^power, truncated.
  static TruncatedSeries monomial(int order, const Polynomial& c, int power);
  static TruncatedSeries constant(int order, const Polynomial& c) { return monomial(order, c, 0); }

  int order() const { return order_; }
  const Polynomial& operator[](int power) const { return coeffs_.at(power); }
  Polynomial& operator[](int power) { return coeffs_.at(power); }
  const std::vector<Polynomial>& coefficients() const { return coeffs_; }

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const Polynomial& c, const TruncatedSeries& s);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) = default;

  /// Applies f to every coefficient (e.g. dropping high powers of y).
  template <typename F>
  TruncatedSeries map(F f) const {
    TruncatedSeries out(order_);
    for (int i = 0; i <= order_; ++i) out.coeffs_[i] = f(coeffs_[i]);
    return out;
  }

  /// {"order": N, "coefficients": [terms of x^0, terms of x^1, ...]}.
  nlohmann::json to_json() const;

 private:
  void check_order(const TruncatedSeries& other) const;
  int order_;
  std::vector<Polynomial> coeffs_;
};

/// 1/s through x^order. The constant term must be a unit of the coefficient
/// ring, i.e. ±q^e; anything else throws std::domain_error.
TruncatedSeries series_reciprocal(const TruncatedSeries& s);

}  // namespace ptab
