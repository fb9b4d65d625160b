#pragma once

// Exact arithmetic in Q(sqrt f).
//
// A scalar is a + b*sqrt(f) with a, b arbitrary-precision rationals. Every
// value carries its f; combining values with different f throws RingMismatch.
// When f is a perfect square r*r the radical part is folded into the rational
// part on construction, so equality is always a comparison of (a, b, f).

#include <bpotts/errors.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <ostream>
#include <regex>
#include <string>
#include <string_view>
#include <utility>

namespace bpotts {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

namespace detail {

inline std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

inline std::string trim(std::string_view s) {
  auto begin = s.find_first_not_of(" \t\n\r");
  if (begin == std::string_view::npos) return {};
  auto end = s.find_last_not_of(" \t\n\r");
  return std::string(s.substr(begin, end - begin + 1));
}

}  // namespace detail

// Parses "p" or "p/q" (optional sign, surrounding whitespace allowed).
inline Rational parse_rational(std::string_view text) {
  static const std::regex pattern(R"(([+-]?\d+)(?:\s*/\s*([+-]?\d+))?)");
  const std::string s = detail::trim(text);
  std::smatch m;
  if (!std::regex_match(s, m, pattern)) {
    throw ParseError("not a rational number: '" + std::string(text) + "'");
  }
  Integer num(m[1].str());
  Integer den(1);
  if (m[2].matched) den = Integer(m[2].str());
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

template <class R>
class BasicQfScalar {
 public:
  using rational_type = R;

  BasicQfScalar(R a, R b, std::uint64_t f) : a_(std::move(a)), b_(std::move(b)), f_(f) {
    if (f_ == 0) throw ParameterError("Q(sqrt f) requires f >= 1");
    canonicalize();
  }

  static BasicQfScalar rational(R a, std::uint64_t f) { return {std::move(a), R(0), f}; }
  static BasicQfScalar zero(std::uint64_t f) { return {R(0), R(0), f}; }
  static BasicQfScalar one(std::uint64_t f) { return {R(1), R(0), f}; }
  static BasicQfScalar sqrt_f(std::uint64_t f) { return {R(0), R(1), f}; }

  const R& rational_part() const { return a_; }
  const R& radical_part() const { return b_; }
  std::uint64_t f() const { return f_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }

  // a^2 - b^2 f; nonzero for every nonzero canonical value.
  R norm() const { return a_ * a_ - b_ * b_ * R(f_); }

  BasicQfScalar inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in Q(sqrt " + std::to_string(f_) + ")");
    R n = norm();
    if (n == 0) throw DivisionByZero("zero-norm element has no inverse");
    return {a_ / n, -b_ / n, f_};
  }

  double to_double() const {
    return a_.template convert_to<double>() +
           b_.template convert_to<double>() * std::sqrt(static_cast<double>(f_));
  }

  // "a", "b*sqrt(f)", "a + b*sqrt(f)" or "a - |b|*sqrt(f)".
  std::string to_string() const {
    const std::string root = "*sqrt(" + std::to_string(f_) + ")";
    if (b_ == 0) return bpotts::to_string(a_);
    if (a_ == 0) return bpotts::to_string(b_) + root;
    if (b_ < 0) return bpotts::to_string(a_) + " - " + bpotts::to_string(R(-b_)) + root;
    return bpotts::to_string(a_) + " + " + bpotts::to_string(b_) + root;
  }

  BasicQfScalar operator-() const { return {-a_, -b_, f_}; }

  friend BasicQfScalar operator+(const BasicQfScalar& x, const BasicQfScalar& y) {
    check_same_ring(x, y);
    return {x.a_ + y.a_, x.b_ + y.b_, x.f_};
  }
  friend BasicQfScalar operator-(const BasicQfScalar& x, const BasicQfScalar& y) {
    check_same_ring(x, y);
    return {x.a_ - y.a_, x.b_ - y.b_, x.f_};
  }
  friend BasicQfScalar operator*(const BasicQfScalar& x, const BasicQfScalar& y) {
    check_same_ring(x, y);
    return {x.a_ * y.a_ + x.b_ * y.b_ * R(x.f_), x.a_ * y.b_ + x.b_ * y.a_, x.f_};
  }
  friend BasicQfScalar operator/(const BasicQfScalar& x, const BasicQfScalar& y) {
    return x * y.inverse();
  }

  BasicQfScalar& operator+=(const BasicQfScalar& y) { return *this = *this + y; }
  BasicQfScalar& operator-=(const BasicQfScalar& y) { return *this = *this - y; }
  BasicQfScalar& operator*=(const BasicQfScalar& y) { return *this = *this * y; }
  BasicQfScalar& operator/=(const BasicQfScalar& y) { return *this = *this / y; }

  friend bool operator==(const BasicQfScalar& x, const BasicQfScalar& y) {
    return x.f_ == y.f_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

  friend std::ostream& operator<<(std::ostream& os, const BasicQfScalar& x) {
    return os << x.to_string();
  }

 private:
  static void check_same_ring(const BasicQfScalar& x, const BasicQfScalar& y) {
    if (x.f_ != y.f_) {
      throw RingMismatch("cannot combine elements of Q(sqrt " + std::to_string(x.f_) +
                         ") and Q(sqrt " + std::to_string(y.f_) + ")");
    }
  }

  void canonicalize() {
    if (b_ == 0) return;
    const std::uint64_t r = detail::isqrt(f_);
    if (r * r == f_) {
      a_ += b_ * R(r);
      b_ = 0;
    }
  }

  R a_;
  R b_;
  std::uint64_t f_;
};

using QfScalar = BasicQfScalar<Rational>;

// x^k for any integer k (negative powers invert).
template <class R>
BasicQfScalar<R> pow(const BasicQfScalar<R>& x, long k) {
  if (k < 0) return pow(x.inverse(), -k);
  auto result = BasicQfScalar<R>::one(x.f());
  auto base = x;
  while (k > 0) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

// Inverse of QfScalar::to_string. Also accepts bare rationals.
inline QfScalar parse_qf(std::string_view text, std::uint64_t f) {
  static const std::regex full(
      R"(([+-]?\d+(?:/\d+)?)\s*([+-])\s*(\d+(?:/\d+)?)\*sqrt\((\d+)\))");
  static const std::regex radical(R"(([+-]?\d+(?:/\d+)?)\*sqrt\((\d+)\))");
  const std::string s = detail::trim(text);
  std::smatch m;
  auto check_f = [&](const std::string& digits) {
    if (std::stoull(digits) != f) {
      throw RingMismatch("'" + s + "' is not in Q(sqrt " + std::to_string(f) + ")");
    }
  };
  if (std::regex_match(s, m, full)) {
    check_f(m[4].str());
    Rational b = parse_rational(m[3].str());
    if (m[2].str() == "-") b = -b;
    return QfScalar(parse_rational(m[1].str()), b, f);
  }
  if (std::regex_match(s, m, radical)) {
    check_f(m[2].str());
    return QfScalar(Rational(0), parse_rational(m[1].str()), f);
  }
  return QfScalar::rational(parse_rational(s), f);
}

}  // namespace bpotts
