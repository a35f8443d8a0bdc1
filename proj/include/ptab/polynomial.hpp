#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>

#include <gmpxx.h>
#include <json.hpp>

namespace ptab {

enum class Var : int { p = 0, q = 1, r = 2, y = 3 };

inline constexpr int kNumVars = 4;
using Exponents = std::array<int, kNumVars>;

/// Graded lex, descending: higher total degree first, ties broken by the
/// exponent of p, then q, r, y.
struct TermOrder {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Raised when a Laurent polynomial is expected to be a polynomial in q.
class LaurentResidue : public std::domain_error {
 public:
  explicit LaurentResidue(int most_negative_exponent);
  int most_negative_exponent() const { return exponent_; }

 private:
  int exponent_;
};

/// Sparse polynomial in p, q, r, y with exact integer coefficients.
/// Exponents of q may be negative; all others are nonnegative.
class Polynomial {
 public:
  using Terms = std::map<Exponents, mpz_class, TermOrder>;

  Polynomial() = default;
  Polynomial(long constant);  // NOLINT(google-explicit-constructor)
  Polynomial(const mpz_class& constant);  // NOLINT(google-explicit-constructor)

  static Polynomial variable(Var v, int power = 1);
  static Polynomial monomial(const mpz_class& coeff, const Exponents& exps);

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }

  mpz_class coefficient(const Exponents& exps) const;
  /// Collects the terms with v^power and drops v from them.
  Polynomial coefficient_of(Var v, int power) const;

  /// Replaces v by an integer. Negative powers of q only allow ±1.
  Polynomial substitute(Var v, const mpz_class& value) const;
  /// The value of a polynomial with no variables left.
  mpz_class constant_value() const;

  int min_exponent(Var v) const;
  int max_exponent(Var v) const;

  /// Multiplies by v^power.
  Polynomial shifted(Var v, int power) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  Polynomial pow(unsigned exponent) const;

  /// "q^2*r + p*q", "3*p - q^-1", "0".
  std::string to_string() const;
  /// [{"coeff": c, "p": e, "q": e, "r": e, "y": e}, ...] in term order.
  /// Coefficients beyond the signed 64-bit range are written as strings.
  nlohmann::json to_json() const;

 private:
  void add_term(const Exponents& exps, const mpz_class& coeff);
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& poly);

/// [n]_q = 1 + q + ... + q^{n-1}; [0]_q = 0.
Polynomial q_analog(int n);
/// [n]_{p,q} = p^{n-1} + p^{n-2} q + ... + q^{n-1}; [0]_{p,q} = 0.
Polynomial pq_analog(int n);

/// Returns `poly` unchanged if no q exponent is negative, otherwise throws
/// LaurentResidue carrying the most negative exponent.
const Polynomial& assert_polynomial(const Polynomial& poly);

mpz_class binomial(long n, long k);  // zero outside 0 <= k <= n

}  // namespace ptab
