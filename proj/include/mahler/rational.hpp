#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <ostream>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "mahler/error.hpp"

namespace mahler {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr long double pi_ld = std::numbers::pi_v<long double>;

inline BigInt numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return denominator_of(q) == 1; }

inline BigInt factorial(int n) {
  if (n < 0) throw error(errc::domain_error, "factorial of negative integer");
  BigInt out = 1;
  for (int k = 2; k <= n; ++k) out *= k;
  return out;
}

/// C(n, k) with the usual convention of zero outside 0 <= k <= n.
inline BigInt binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt out = 1;
  for (int j = 1; j <= k; ++j) {
    out *= n - k + j;
    out /= j;
  }
  return out;
}

inline Rational rational_pow(const Rational& base, int exponent) {
  if (exponent < 0) {
    if (base == 0) throw error(errc::division_by_zero, "zero to a negative power");
    return rational_pow(1 / base, -exponent);
  }
  Rational out = 1;
  Rational b = base;
  for (unsigned e = static_cast<unsigned>(exponent); e != 0; e >>= 1) {
    if (e & 1u) out *= b;
    if (e > 1) b *= b;
  }
  return out;
}

/// Exact value of a finite double.
inline Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw error(errc::domain_error, "non-finite value has no rational form");
  if (x == 0.0) return 0;
  int exp2 = 0;
  const double mant = std::frexp(x, &exp2);
  // 53 significant bits
  const auto scaled = static_cast<std::int64_t>(std::ldexp(mant, 53));
  exp2 -= 53;
  Rational out{BigInt(scaled)};
  if (exp2 > 0) {
    out *= Rational(BigInt(1) << exp2);
  } else if (exp2 < 0) {
    out /= Rational(BigInt(1) << -exp2);
  }
  return out;
}

/// Correctly scaled (not necessarily correctly rounded) conversion that never
/// overflows intermediate values for large numerators and denominators.
inline long double to_long_double(const Rational& q) {
  if (q == 0) return 0.0L;
  BigInt num = numerator_of(q);
  const BigInt den = denominator_of(q);
  const bool negative = num < 0;
  if (negative) num = -num;
  const auto num_bits = static_cast<long>(boost::multiprecision::msb(num));
  const auto den_bits = static_cast<long>(boost::multiprecision::msb(den));
  // keep ~96 bits of quotient
  const long shift = 96 - (num_bits - den_bits);
  BigInt quotient = shift >= 0 ? BigInt((num << shift) / den) : BigInt(num / (den << -shift));
  long double out = std::ldexp(quotient.convert_to<long double>(), static_cast<int>(-shift));
  return negative ? -out : out;
}

inline double to_double(const Rational& q) { return static_cast<double>(to_long_double(q)); }

/// An exact value q * pi^k.
class PiScaled {
 public:
  PiScaled() = default;
  PiScaled(Rational coeff, int pi_power) : coeff_(std::move(coeff)), pi_power_(pi_power) {
    if (coeff_ == 0) pi_power_ = 0;
  }
  explicit PiScaled(Rational coeff) : PiScaled(std::move(coeff), 0) {}

  const Rational& coeff() const { return coeff_; }
  int pi_power() const { return pi_power_; }
  bool is_zero() const { return coeff_ == 0; }

  long double value(long double pi_value = pi_ld) const {
    return to_long_double(coeff_) * std::pow(pi_value, static_cast<long double>(pi_power_));
  }

  friend PiScaled operator*(const PiScaled& a, const PiScaled& b) {
    return {a.coeff_ * b.coeff_, a.pi_power_ + b.pi_power_};
  }
  friend PiScaled operator/(const PiScaled& a, const PiScaled& b) {
    if (b.is_zero()) throw error(errc::division_by_zero, "PiScaled division by zero");
    return {a.coeff_ / b.coeff_, a.pi_power_ - b.pi_power_};
  }
  friend PiScaled operator+(const PiScaled& a, const PiScaled& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.pi_power_ != b.pi_power_) {
      throw error(errc::grade_mismatch, "adding pi^" + std::to_string(a.pi_power_) + " and pi^" +
                                            std::to_string(b.pi_power_));
    }
    return {a.coeff_ + b.coeff_, a.pi_power_};
  }
  friend PiScaled operator-(const PiScaled& a) { return {-a.coeff_, a.pi_power_}; }
  friend PiScaled operator-(const PiScaled& a, const PiScaled& b) { return a + (-b); }
  friend bool operator==(const PiScaled& a, const PiScaled& b) {
    return a.coeff_ == b.coeff_ && a.pi_power_ == b.pi_power_;
  }

 private:
  Rational coeff_{0};
  int pi_power_ = 0;
};

/// Gaussian rational re + i*im, used where complex identities must hold exactly.
struct ComplexQ {
  Rational re{0};
  Rational im{0};

  ComplexQ() = default;
  ComplexQ(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  ComplexQ(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  ComplexQ(int r) : re(r) {}  // NOLINT(google-explicit-constructor)

  bool is_zero() const { return re == 0 && im == 0; }
  Rational norm() const { return re * re + im * im; }

  ComplexQ inverse() const {
    if (is_zero()) throw error(errc::division_by_zero, "inverse of zero");
    const Rational n = norm();
    return {re / n, -im / n};
  }

  ComplexQ& operator+=(const ComplexQ& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  ComplexQ& operator-=(const ComplexQ& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  ComplexQ& operator*=(const ComplexQ& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  ComplexQ& operator/=(const ComplexQ& o) { return *this *= o.inverse(); }

  friend ComplexQ operator+(ComplexQ a, const ComplexQ& b) { return a += b; }
  friend ComplexQ operator-(ComplexQ a, const ComplexQ& b) { return a -= b; }
  friend ComplexQ operator*(ComplexQ a, const ComplexQ& b) { return a *= b; }
  friend ComplexQ operator/(ComplexQ a, const ComplexQ& b) { return a /= b; }
  friend ComplexQ operator-(const ComplexQ& a) { return {-a.re, -a.im}; }
  friend bool operator==(const ComplexQ& a, const ComplexQ& b) { return a.re == b.re && a.im == b.im; }
};

inline std::ostream& operator<<(std::ostream& os, const ComplexQ& z) {
  return os << '(' << z.re << ", " << z.im << ')';
}

}  // namespace mahler
