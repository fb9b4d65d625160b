#pragma once

#include <bpotts/errors.hpp>
#include <bpotts/qf_scalar.hpp>

#include <cmath>
#include <cstdint>

namespace bpotts {

// Temperature (as the product k*T) and boundary coupling kappa.
struct PhysicalParams {
  double kT = 1.0;
  double kappa = 0.0;
};

// Floating-point bond weights B = exp(-1/kT) - 1 and C = exp(-kappa/kT).
struct FloatWeights {
  double B = 0.0;
  double C = 1.0;
};

inline FloatWeights physical_to_model(const PhysicalParams& p) {
  if (!(p.kT > 0.0)) throw ParameterError("kT must be positive");
  return {std::expm1(-1.0 / p.kT), std::exp(-p.kappa / p.kT)};
}

// The exact parameter set shared by all three evaluation methods.
//
// B and C are the bond weights of the Hamiltonian, D = 1 - C. The remaining
// fields are the bracket specialization: d = sqrt f, c = c' d with c' the
// free gauge, alpha = alpha0 = 1, beta = B/d, beta0 = D/(C c).
class ModelParams {
 public:
  static ModelParams make(std::uint64_t f, const Rational& B, const Rational& C,
                          const Rational& c_gauge = Rational(1)) {
    if (f == 0) throw ParameterError("f must be a positive integer");
    if (C == 0) throw ParameterError("C must be nonzero (beta0 = D/(C c) is undefined)");
    if (c_gauge == 0) throw ParameterError("c gauge must be nonzero");
    return ModelParams(f, B, C, c_gauge);
  }

  std::uint64_t f() const { return f_; }
  const QfScalar& B() const { return B_; }
  const QfScalar& C() const { return C_; }
  const QfScalar& D() const { return D_; }
  const QfScalar& d() const { return d_; }
  const QfScalar& c() const { return c_; }
  const QfScalar& c_prime() const { return c_prime_; }
  const QfScalar& alpha() const { return alpha_; }
  const QfScalar& beta() const { return beta_; }
  const QfScalar& alpha0() const { return alpha0_; }
  const QfScalar& beta0() const { return beta0_; }

  const Rational& B_rational() const { return B_.rational_part(); }
  const Rational& C_rational() const { return C_.rational_part(); }
  const Rational& c_gauge() const { return c_prime_.rational_part(); }

  // Copy with beta replaced; only used to build negative controls.
  ModelParams with_beta(const QfScalar& beta) const {
    ModelParams copy = *this;
    copy.beta_ = beta;
    return copy;
  }

 private:
  ModelParams(std::uint64_t f, const Rational& B, const Rational& C, const Rational& c_gauge)
      : f_(f),
        B_(QfScalar::rational(B, f)),
        C_(QfScalar::rational(C, f)),
        D_(QfScalar::rational(Rational(1) - C, f)),
        d_(QfScalar::sqrt_f(f)),
        c_(QfScalar::rational(c_gauge, f) * d_),
        c_prime_(QfScalar::rational(c_gauge, f)),
        alpha_(QfScalar::one(f)),
        beta_(B_ * d_.inverse()),
        alpha0_(QfScalar::one(f)),
        beta0_(D_ * C_.inverse() * c_.inverse()) {}

  std::uint64_t f_;
  QfScalar B_, C_, D_;
  QfScalar d_, c_, c_prime_;
  QfScalar alpha_, beta_, alpha0_, beta0_;
};

inline ModelParams make_model(std::uint64_t f, const Rational& B, const Rational& C,
                              const Rational& c_gauge = Rational(1)) {
  return ModelParams::make(f, B, C, c_gauge);
}

}  // namespace bpotts
