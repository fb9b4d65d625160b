#include <bpotts/qf_scalar.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace bpotts;

namespace {

QfScalar q(long a, long b, std::uint64_t f) { return QfScalar(Rational(a), Rational(b), f); }

QfScalar random_scalar(std::mt19937_64& rng, std::uint64_t f) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 7);
  return QfScalar(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), f);
}

}  // namespace

TEST(QfScalar, AdditionCancelsRadical) {
  EXPECT_EQ(q(1, 2, 2) + q(3, -2, 2), q(4, 0, 2));
  EXPECT_TRUE((q(1, 2, 2) + q(3, -2, 2)).is_rational());
  EXPECT_EQ(q(5, 7, 3) + QfScalar::zero(3), q(5, 7, 3));
}

TEST(QfScalar, PerfectSquareFoldsRadical) {
  const auto x = QfScalar::sqrt_f(4) + QfScalar::zero(4);
  EXPECT_EQ(x, QfScalar::rational(Rational(2), 4));
  EXPECT_EQ(x.radical_part(), 0);
  EXPECT_EQ(QfScalar::sqrt_f(9).rational_part(), 3);
  EXPECT_EQ(QfScalar::sqrt_f(1), QfScalar::one(1));
}

TEST(QfScalar, Multiplication) {
  const auto r2 = QfScalar::sqrt_f(2);
  EXPECT_EQ(r2 * r2, q(2, 0, 2));
  EXPECT_EQ(q(1, 1, 2) * q(1, -1, 2), q(-1, 0, 2));
  EXPECT_EQ(q(3, -4, 5) * QfScalar::one(5), q(3, -4, 5));
}

TEST(QfScalar, Inverse) {
  EXPECT_EQ(QfScalar::sqrt_f(2).inverse(), QfScalar(Rational(0), Rational(1, 2), 2));
  EXPECT_EQ(q(2, 0, 2).inverse(), QfScalar::rational(Rational(1, 2), 2));
  EXPECT_EQ(q(1, 1, 2).inverse(), q(-1, 1, 2));
  EXPECT_THROW(QfScalar::zero(2).inverse(), DivisionByZero);
  // 2 - sqrt(4) is zero after canonicalization, never a zero-norm nonzero value.
  EXPECT_THROW(q(2, -1, 4).inverse(), DivisionByZero);
}

TEST(QfScalar, ToDouble) {
  EXPECT_DOUBLE_EQ(QfScalar::rational(Rational(3, 2), 2).to_double(), 1.5);
  EXPECT_NEAR(QfScalar::sqrt_f(2).to_double(), 1.4142135623730951, 1e-15);
  EXPECT_EQ(QfScalar::zero(7).to_double(), 0.0);
}

TEST(QfScalar, RingMismatchThrows) {
  EXPECT_THROW(q(1, 1, 2) + q(1, 1, 3), RingMismatch);
  EXPECT_THROW(q(1, 1, 2) * q(1, 1, 3), RingMismatch);
  EXPECT_FALSE(q(1, 0, 2) == q(1, 0, 3));
}

TEST(QfScalar, ZeroFIsRejected) { EXPECT_THROW(QfScalar::one(0), ParameterError); }

TEST(QfScalar, Rendering) {
  EXPECT_EQ(QfScalar::rational(Rational(4, 3), 2).to_string(), "4/3");
  EXPECT_EQ(QfScalar::zero(2).to_string(), "0");
  EXPECT_EQ(QfScalar(Rational(0), Rational(-1, 4), 2).to_string(), "-1/4*sqrt(2)");
  EXPECT_EQ(QfScalar(Rational(1, 2), Rational(3), 5).to_string(), "1/2 + 3*sqrt(5)");
  EXPECT_EQ(QfScalar(Rational(-1), Rational(-2, 3), 3).to_string(), "-1 - 2/3*sqrt(3)");
}

TEST(QfScalar, ParseRational) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("-1/2"), Rational(-1, 2));
  EXPECT_EQ(parse_rational(" 6/4 "), Rational(3, 2));
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("0.5"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
}

TEST(QfScalar, IntegerPowers) {
  const auto r2 = QfScalar::sqrt_f(2);
  EXPECT_EQ(pow(r2, 0), QfScalar::one(2));
  EXPECT_EQ(pow(r2, 3), q(0, 2, 2));
  EXPECT_EQ(pow(r2, -2), QfScalar::rational(Rational(1, 2), 2));
}

TEST(QfScalarProperty, RingAxioms) {
  std::mt19937_64 rng(7);
  for (std::uint64_t f : {2u, 3u, 4u, 5u, 12u}) {
    for (int k = 0; k < 200; ++k) {
      const auto x = random_scalar(rng, f);
      const auto y = random_scalar(rng, f);
      const auto z = random_scalar(rng, f);
      ASSERT_EQ((x + y) + z, x + (y + z));
      ASSERT_EQ((x * y) * z, x * (y * z));
      ASSERT_EQ(x * (y + z), x * y + x * z);
      ASSERT_EQ(x + y, y + x);
      ASSERT_EQ(x * y, y * x);
      ASSERT_EQ(x - x, QfScalar::zero(f));
    }
  }
}

TEST(QfScalarProperty, InverseIsTwoSided) {
  std::mt19937_64 rng(11);
  for (std::uint64_t f : {2u, 3u, 4u, 7u}) {
    for (int k = 0; k < 200; ++k) {
      const auto x = random_scalar(rng, f);
      if (x.is_zero()) continue;
      ASSERT_EQ(x * x.inverse(), QfScalar::one(f)) << x;
    }
  }
}

TEST(QfScalarProperty, CanonicalFormAndRoundTrip) {
  std::mt19937_64 rng(13);
  for (std::uint64_t f : {2u, 4u, 6u, 9u}) {
    for (int k = 0; k < 200; ++k) {
      const auto x = random_scalar(rng, f);
      // Same value built from a different (a, b) split must compare equal.
      const auto y = x + QfScalar::sqrt_f(f) - QfScalar::sqrt_f(f);
      ASSERT_EQ(x, y);
      ASSERT_EQ(x.to_string(), y.to_string());
      ASSERT_EQ(parse_qf(x.to_string(), f), x) << x;
    }
  }
}
