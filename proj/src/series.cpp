#include "ptab/series.hpp"

#include <stdexcept>

namespace ptab {

TruncatedSeries::TruncatedSeries(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("series order must be nonnegative");
  coeffs_.resize(order + 1);
}

TruncatedSeries::TruncatedSeries(int order, const std::vector<Polynomial>& coeffs)
    : TruncatedSeries(order) {
  for (std::size_t i = 0; i < coeffs.size() && static_cast<int>(i) <= order; ++i) coeffs_[i] = coeffs[i];
}

TruncatedSeries TruncatedSeries::monomial(int order, const Polynomial& c, int power) {
  TruncatedSeries out(order);
  if (power <= order) out.coeffs_[power] = c;
  return out;
}

void TruncatedSeries::check_order(const TruncatedSeries& other) const {
  if (order_ != other.order_) throw std::invalid_argument("series truncation orders differ");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  check_order(other);
  for (int i = 0; i <= order_; ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  check_order(other);
  for (int i = 0; i <= order_; ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.check_order(b);
  TruncatedSeries out(a.order_);
  for (int i = 0; i <= a.order_; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (int j = 0; i + j <= a.order_; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

TruncatedSeries operator*(const Polynomial& c, const TruncatedSeries& s) {
  TruncatedSeries out(s.order_);
  for (int i = 0; i <= s.order_; ++i) out.coeffs_[i] = c * s.coeffs_[i];
  return out;
}

nlohmann::json TruncatedSeries::to_json() const {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : coeffs_) coeffs.push_back(c.to_json());
  return nlohmann::json{{"order", order_}, {"coefficients", coeffs}};
}

TruncatedSeries series_reciprocal(const TruncatedSeries& s) {
  const Polynomial& lead = s[0];
  if (lead.num_terms() != 1) throw std::domain_error("series constant term is not a unit: " + lead.to_string());
  const auto& [exps, coeff] = *lead.terms().begin();
  const int q_index = static_cast<int>(Var::q);
  for (int v = 0; v < kNumVars; ++v) {
    if (v != q_index && exps[v] != 0) {
      throw std::domain_error("series constant term is not a unit: " + lead.to_string());
    }
  }
  if (coeff != 1 && coeff != -1) {
    throw std::domain_error("series constant term is not a unit: " + lead.to_string());
  }
  const Polynomial lead_inverse = Polynomial::monomial(coeff, {0, -exps[q_index], 0, 0});

  TruncatedSeries out(s.order());
  out[0] = lead_inverse;
  for (int n = 1; n <= s.order(); ++n) {
    Polynomial acc;
    for (int i = 1; i <= n; ++i) {
      if (!s[i].is_zero() && !out[n - i].is_zero()) acc += s[i] * out[n - i];
    }
    out[n] = -(lead_inverse * acc);
  }
  return out;
}

}  // namespace ptab
