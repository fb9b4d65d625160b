#include <bpotts/model.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

using namespace bpotts;

TEST(PhysicalToModel, LimitsAndDirectValues) {
  const auto hot = physical_to_model({1e12, 3.0});
  EXPECT_NEAR(hot.B, 0.0, 1e-11);
  EXPECT_DOUBLE_EQ(physical_to_model({2.0, 0.0}).C, 1.0);

  const auto w = physical_to_model({1.0, 1.0});
  EXPECT_NEAR(w.B, -0.63212, 1e-5);
  EXPECT_NEAR(w.C, 0.36788, 1e-5);
  EXPECT_DOUBLE_EQ(w.B, std::exp(-1.0) - 1.0);
}

TEST(PhysicalToModel, RejectsNonPositiveTemperature) {
  EXPECT_THROW(physical_to_model({0.0, 1.0}), ParameterError);
  EXPECT_THROW(physical_to_model({-1.0, 1.0}), ParameterError);
  EXPECT_THROW(physical_to_model({std::numeric_limits<double>::quiet_NaN(), 1.0}), ParameterError);
}

TEST(PhysicalToModel, PhysicalRange) {
  for (double kT : {0.1, 0.5, 1.0, 4.0}) {
    const auto w = physical_to_model({kT, 0.7});
    EXPECT_GT(w.B, -1.0);
    EXPECT_LT(w.B, 0.0);
    EXPECT_GT(w.C, 0.0);
  }
}

TEST(MakeModel, DerivedFieldsAtF2) {
  const auto m = make_model(2, Rational(-1, 2), Rational(1, 3), 1);
  const auto sqrt2 = QfScalar::sqrt_f(2);
  EXPECT_EQ(m.d(), sqrt2);
  EXPECT_EQ(m.c(), sqrt2);
  EXPECT_EQ(m.c_prime(), QfScalar::one(2));
  EXPECT_EQ(m.beta(), QfScalar(Rational(0), Rational(-1, 4), 2));
  EXPECT_EQ(m.beta0(), sqrt2);
  EXPECT_EQ(m.alpha(), QfScalar::one(2));
  EXPECT_EQ(m.alpha0(), QfScalar::one(2));
  EXPECT_EQ(m.D(), QfScalar::rational(Rational(2, 3), 2));
}

TEST(MakeModel, PerfectSquareDIsRational) {
  for (const Rational B : {Rational(-1, 2), Rational(3), Rational(0)}) {
    const auto m = make_model(4, B, Rational(2, 5));
    EXPECT_EQ(m.d(), QfScalar::rational(Rational(2), 4));
    EXPECT_TRUE(m.d().is_rational());
  }
}

TEST(MakeModel, RejectsBadParameters) {
  EXPECT_THROW(make_model(2, Rational(-1, 2), Rational(0)), ParameterError);
  EXPECT_THROW(make_model(2, Rational(-1, 2), Rational(1, 3), 0), ParameterError);
  EXPECT_THROW(make_model(0, Rational(-1, 2), Rational(1, 3)), ParameterError);
}

TEST(MakeModelProperty, Invariants) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<long> den(1, 5);
  for (int k = 0; k < 100; ++k) {
    const std::uint64_t f = 1 + k % 5;
    const Rational B(num(rng), den(rng));
    Rational C(num(rng), den(rng));
    Rational gauge(num(rng), den(rng));
    if (C == 0) C = 1;
    if (gauge == 0) gauge = Rational(1, 2);
    const auto m = make_model(f, B, C, gauge);
    ASSERT_EQ(m.C() + m.D(), QfScalar::one(f));
    ASSERT_EQ(m.c() * m.d().inverse(), m.c_prime());
    ASSERT_EQ(m.d() * m.d(), QfScalar::rational(Rational(f), f));
    ASSERT_EQ(m.beta() * m.d(), m.B());
    ASSERT_EQ(m.beta0() * m.C() * m.c(), m.D());
    ASSERT_TRUE(m.B().is_rational());
    ASSERT_TRUE(m.C().is_rational());
  }
}
