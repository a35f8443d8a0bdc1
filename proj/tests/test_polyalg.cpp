#include <gtest/gtest.h>

#include <random>

#include "ptab/polynomial.hpp"
#include "ptab/series.hpp"

using namespace ptab;

namespace {

const Polynomial p = Polynomial::variable(Var::p);
const Polynomial q = Polynomial::variable(Var::q);
const Polynomial r = Polynomial::variable(Var::r);
const Polynomial y = Polynomial::variable(Var::y);

Polynomial random_polynomial(std::mt19937& rng, bool with_y = true) {
  std::uniform_int_distribution<int> terms(0, 5);
  std::uniform_int_distribution<int> exponent(0, 3);
  std::uniform_int_distribution<int> q_exponent(-2, 3);
  std::uniform_int_distribution<long> coeff(-1000000, 1000000);
  Polynomial out;
  const int count = terms(rng);
  for (int i = 0; i < count; ++i) {
    out += Polynomial::monomial(mpz_class(coeff(rng)) * mpz_class(coeff(rng)),
                                {exponent(rng), q_exponent(rng), exponent(rng), with_y ? exponent(rng) : 0});
  }
  return out;
}

}  // namespace

// --------------------------------------------------------------- polynomial

TEST(Polynomial, QAnalogs) {
  EXPECT_EQ(q_analog(0), Polynomial(0));
  EXPECT_EQ(q_analog(1), Polynomial(1));
  EXPECT_EQ(q_analog(3), 1 + q + q * q);
  EXPECT_EQ(pq_analog(2), p + q);
  EXPECT_EQ(pq_analog(3), p * p + p * q + q * q);
  for (int n = 0; n <= 10; ++n) {
    EXPECT_EQ(q_analog(n).substitute(Var::q, 1).constant_value(), n);
    EXPECT_EQ(pq_analog(n).substitute(Var::p, 1), q_analog(n));
  }
}

TEST(Polynomial, CanonicalText) {
  EXPECT_EQ((q * q * r + p * q).to_string(), "q^2*r + p*q");
  EXPECT_EQ((3 * p - q.pow(1).shifted(Var::q, -2)).to_string(), "3*p - q^-1");
  EXPECT_EQ(Polynomial().to_string(), "0");
  EXPECT_EQ(Polynomial(-7).to_string(), "-7");
  EXPECT_EQ((2 * p * q + q * q + q * r).to_string(), "2*p*q + q^2 + q*r");
  std::ostringstream os;
  os << (y - 1);
  EXPECT_EQ(os.str(), "y - 1");
}

TEST(Polynomial, JsonTerms) {
  const auto json = (2 * p * q - 1).to_json();
  ASSERT_EQ(json.size(), 2U);
  EXPECT_EQ(json[0]["coeff"], 2);
  EXPECT_EQ(json[0]["p"], 1);
  EXPECT_EQ(json[0]["q"], 1);
  EXPECT_EQ(json[1]["coeff"], -1);
  const Polynomial big = Polynomial(mpz_class("123456789012345678901234567890"));
  EXPECT_EQ(big.to_json()[0]["coeff"], "123456789012345678901234567890");
}

TEST(Polynomial, NoZeroTermsAreStored) {
  const Polynomial zero = (p + q) - (q + p);
  EXPECT_TRUE(zero.is_zero());
  EXPECT_EQ(zero.num_terms(), 0U);
  EXPECT_EQ((p * 0).num_terms(), 0U);
}

TEST(Polynomial, OnlyQMayGoNegative) {
  EXPECT_NO_THROW(Polynomial::monomial(1, {0, -3, 0, 0}));
  EXPECT_THROW(Polynomial::monomial(1, {-1, 0, 0, 0}), std::domain_error);
  EXPECT_THROW(Polynomial::monomial(1, {0, 0, 0, -1}), std::domain_error);
  EXPECT_THROW(p.shifted(Var::r, -1), std::domain_error);
}

TEST(Polynomial, SubstituteAndCoefficients) {
  const Polynomial f = 3 * p * p * q + q.shifted(Var::q, -2) + r;
  EXPECT_EQ(f.coefficient({2, 1, 0, 0}), 3);
  EXPECT_EQ(f.coefficient_of(Var::p, 2), 3 * q);
  EXPECT_EQ(f.min_exponent(Var::q), -1);
  EXPECT_EQ(f.max_exponent(Var::p), 2);
  EXPECT_EQ(f.substitute(Var::q, -1), -3 * p * p - 1 + r);
  EXPECT_THROW(f.substitute(Var::q, 2), std::domain_error);
  EXPECT_EQ(f.substitute(Var::q, 1).substitute(Var::p, 2).substitute(Var::r, 5).constant_value(), 12 + 1 + 5);
  EXPECT_THROW((void)p.constant_value(), std::domain_error);
}

TEST(Polynomial, AssertPolynomial) {
  const Polynomial qinv = Polynomial::monomial(1, {0, -1, 0, 0});
  EXPECT_EQ(assert_polynomial(qinv * q * q), q);
  try {
    assert_polynomial(qinv.pow(3) + 1);
    FAIL() << "expected LaurentResidue";
  } catch (const LaurentResidue& e) {
    EXPECT_EQ(e.most_negative_exponent(), -3);
  }
  EXPECT_THROW(assert_polynomial(qinv), LaurentResidue);
}

TEST(Polynomial, RingAxiomsOnRandomPolynomials) {
  std::mt19937 rng(20240521);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_polynomial(rng);
    const auto b = random_polynomial(rng);
    const auto c = random_polynomial(rng);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a - a, Polynomial());
    ASSERT_EQ(a * 1, a);
    ASSERT_EQ(a + (-a), Polynomial());
    ASSERT_EQ(a.pow(2), a * a);
  }
}

TEST(Polynomial, Binomial) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(5, -1), 0);
  EXPECT_EQ(binomial(5, 6), 0);
  EXPECT_EQ(binomial(60, 30), mpz_class("118264581564861424"));
}

// ------------------------------------------------------------------- series

TEST(Series, GeometricReciprocal) {
  const int order = 8;
  const auto one_minus_qx = TruncatedSeries::constant(order, 1) - TruncatedSeries::monomial(order, q, 1);
  const auto inv = series_reciprocal(one_minus_qx);
  for (int n = 0; n <= order; ++n) EXPECT_EQ(inv[n], q.pow(n));
  EXPECT_EQ(inv * one_minus_qx, TruncatedSeries::constant(order, 1));
}

TEST(Series, OneMinusXTimesReciprocalIsOne) {
  const auto s = TruncatedSeries::constant(6, 1) - TruncatedSeries::monomial(6, 1, 1);
  EXPECT_EQ(series_reciprocal(s) * s, TruncatedSeries::constant(6, 1));
}

TEST(Series, FirstRowGeneratingFunction) {
  const int order = 7;
  const auto denom = TruncatedSeries::constant(order, 1) - TruncatedSeries::monomial(order, q, 1);
  const auto f = TruncatedSeries::monomial(order, 1, 1) * series_reciprocal(denom);
  EXPECT_TRUE(f[0].is_zero());
  for (int n = 1; n <= order; ++n) EXPECT_EQ(f[n], q.pow(n - 1));
}

TEST(Series, UnitConstantTermsOnly) {
  EXPECT_THROW(series_reciprocal(TruncatedSeries::constant(3, 2)), std::domain_error);
  EXPECT_THROW(series_reciprocal(TruncatedSeries::constant(3, 1 + q)), std::domain_error);
  EXPECT_THROW(series_reciprocal(TruncatedSeries::monomial(3, 1, 1)), std::domain_error);
  const auto inv = series_reciprocal(TruncatedSeries::constant(3, -q * q));
  EXPECT_EQ(inv[0], -Polynomial::monomial(1, {0, -2, 0, 0}));
}

TEST(Series, AgreesWithPolynomialArithmetic) {
  std::mt19937 rng(7);
  const int order = 12;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Polynomial> a(4), b(4);
    for (auto& c : a) c = random_polynomial(rng, false);
    for (auto& c : b) c = random_polynomial(rng, false);
    // Treat x as y to compare with plain polynomial products.
    Polynomial pa, pb;
    for (int i = 0; i < 4; ++i) {
      pa += a[i] * Polynomial::variable(Var::y, i);
      pb += b[i] * Polynomial::variable(Var::y, i);
    }
    const auto product = TruncatedSeries(order, a) * TruncatedSeries(order, b);
    const auto expected = pa * pb;
    for (int i = 0; i <= order; ++i) ASSERT_EQ(product[i], expected.coefficient_of(Var::y, i));
  }
}

TEST(Series, OrdersMustMatchAndJsonShape) {
  EXPECT_THROW(TruncatedSeries(2) + TruncatedSeries(3), std::invalid_argument);
  const auto json = TruncatedSeries::monomial(2, q, 1).to_json();
  EXPECT_EQ(json["order"], 2);
  EXPECT_EQ(json["coefficients"].size(), 3U);
  EXPECT_TRUE(json["coefficients"][0].empty());
  EXPECT_EQ(TruncatedSeries::monomial(2, q, 5), TruncatedSeries(2));
}
