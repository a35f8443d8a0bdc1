#include "ptab/polynomial.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <sstream>

namespace ptab {

namespace {

constexpr const char* kVarNames[kNumVars] = {"p", "q", "r", "y"};

int total_degree(const Exponents& e) { return e[0] + e[1] + e[2] + e[3]; }

void check_exponents(const Exponents& e) {
  for (int v = 0; v < kNumVars; ++v) {
    if (v != static_cast<int>(Var::q) && e[v] < 0) {
      throw std::domain_error(std::string("negative exponent of ") + kVarNames[v]);
    }
  }
}

mpz_class integer_power(const mpz_class& base, int exponent) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exponent));
  return out;
}

}  // namespace

bool TermOrder::operator()(const Exponents& a, const Exponents& b) const {
  const int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

LaurentResidue::LaurentResidue(int most_negative_exponent)
    : std::domain_error("Laurent residue: term with q^" + std::to_string(most_negative_exponent)),
      exponent_(most_negative_exponent) {}

Polynomial::Polynomial(long constant) : Polynomial(mpz_class(constant)) {}

Polynomial::Polynomial(const mpz_class& constant) {
  if (constant != 0) terms_.emplace(Exponents{0, 0, 0, 0}, constant);
}

Polynomial Polynomial::variable(Var v, int power) {
  Exponents e{0, 0, 0, 0};
  e[static_cast<int>(v)] = power;
  return monomial(1, e);
}

Polynomial Polynomial::monomial(const mpz_class& coeff, const Exponents& exps) {
  check_exponents(exps);
  Polynomial out;
  if (coeff != 0) out.terms_.emplace(exps, coeff);
  return out;
}

void Polynomial::add_term(const Exponents& exps, const mpz_class& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

mpz_class Polynomial::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

Polynomial Polynomial::coefficient_of(Var v, int power) const {
  const int idx = static_cast<int>(v);
  Polynomial out;
  for (const auto& [e, c] : terms_) {
    if (e[idx] != power) continue;
    Exponents dropped = e;
    dropped[idx] = 0;
    out.add_term(dropped, c);
  }
  return out;
}

Polynomial Polynomial::substitute(Var v, const mpz_class& value) const {
  const int idx = static_cast<int>(v);
  Polynomial out;
  for (const auto& [e, c] : terms_) {
    Exponents dropped = e;
    dropped[idx] = 0;
    const int power = e[idx];
    mpz_class factor;
    if (power >= 0) {
      factor = integer_power(value, power);
    } else if (value == 1) {
      factor = 1;
    } else if (value == -1) {
      factor = (power % 2 == 0) ? 1 : -1;
    } else {
      throw std::domain_error("cannot substitute " + value.get_str() + " into a negative power");
    }
    out.add_term(dropped, c * factor);
  }
  return out;
}

mpz_class Polynomial::constant_value() const {
  if (terms_.empty()) return 0;
  if (terms_.size() != 1 || terms_.begin()->first != Exponents{0, 0, 0, 0}) {
    throw std::domain_error("polynomial is not a constant: " + to_string());
  }
  return terms_.begin()->second;
}

int Polynomial::min_exponent(Var v) const {
  const int idx = static_cast<int>(v);
  int best = std::numeric_limits<int>::max();
  for (const auto& [e, c] : terms_) best = std::min(best, e[idx]);
  return terms_.empty() ? 0 : best;
}

int Polynomial::max_exponent(Var v) const {
  const int idx = static_cast<int>(v);
  int best = std::numeric_limits<int>::min();
  for (const auto& [e, c] : terms_) best = std::max(best, e[idx]);
  return terms_.empty() ? 0 : best;
}

Polynomial Polynomial::shifted(Var v, int power) const {
  const int idx = static_cast<int>(v);
  Polynomial out;
  for (const auto& [e, c] : terms_) {
    Exponents moved = e;
    moved[idx] += power;
    check_exponents(moved);
    out.terms_.emplace(moved, c);
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e;
      for (int v = 0; v < kNumVars; ++v) e[v] = ea[v] + eb[v];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result(1L), base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    mpz_class magnitude = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;

    std::string vars;
    for (int v = 0; v < kNumVars; ++v) {
      if (e[v] == 0) continue;
      if (!vars.empty()) vars += '*';
      vars += kVarNames[v];
      if (e[v] != 1) vars += '^' + std::to_string(e[v]);
    }
    if (vars.empty()) {
      out << magnitude.get_str();
    } else if (magnitude == 1) {
      out << vars;
    } else {
      out << magnitude.get_str() << '*' << vars;
    }
  }
  return out.str();
}

nlohmann::json Polynomial::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [e, c] : terms_) {
    nlohmann::json term;
    if (c.fits_slong_p()) {
      term["coeff"] = c.get_si();
    } else {
      term["coeff"] = c.get_str();
    }
    for (int v = 0; v < kNumVars; ++v) term[kVarNames[v]] = e[v];
    out.push_back(std::move(term));
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& poly) { return os << poly.to_string(); }

Polynomial q_analog(int n) {
  Polynomial out;
  for (int i = 0; i < n; ++i) out += Polynomial::variable(Var::q, i);
  return out;
}

Polynomial pq_analog(int n) {
  Polynomial out;
  for (int i = 0; i < n; ++i) out += Polynomial::monomial(1, {n - 1 - i, i, 0, 0});
  return out;
}

const Polynomial& assert_polynomial(const Polynomial& poly) {
  const int lowest = poly.min_exponent(Var::q);
  if (lowest < 0) throw LaurentResidue(lowest);
  return poly;
}

mpz_class binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace ptab
