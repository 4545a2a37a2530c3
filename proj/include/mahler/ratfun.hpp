#pragma once

// Univariate polynomials and rational functions in s over exact rationals,
// with a uniform pi-grade carried alongside.

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mahler/error.hpp"
#include "mahler/rational.hpp"
#include "mahler/roots.hpp"

namespace mahler {

/// Ascending coefficients; the highest stored coefficient is nonzero.
class PolyQ {
 public:
  PolyQ() = default;
  explicit PolyQ(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  PolyQ(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

  static PolyQ constant(Rational value) { return PolyQ{std::vector<Rational>{std::move(value)}}; }
  static PolyQ monomial(Rational coeff, int degree) {
    std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
    c.back() = std::move(coeff);
    return PolyQ{std::move(c)};
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int k) const {
    return k >= 0 && k < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(k)] : Rational(0);
  }
  const Rational& lead() const { return c_.back(); }

  Rational operator()(const Rational& s) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * s + *it;
    return acc;
  }

  PolyQ derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<int>(k);
    return PolyQ{std::move(d)};
  }

  /// p(-s)
  PolyQ reflected() const {
    std::vector<Rational> c = c_;
    for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
    return PolyQ{std::move(c)};
  }

  PolyQ monic() const {
    if (is_zero()) return {};
    return *this * (1 / lead());
  }

  friend PolyQ operator+(const PolyQ& a, const PolyQ& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
    return PolyQ{std::move(c)};
  }
  friend PolyQ operator-(const PolyQ& a) { return a * Rational(-1); }
  friend PolyQ operator-(const PolyQ& a, const PolyQ& b) { return a + (-b); }
  friend PolyQ operator*(const PolyQ& a, const Rational& k) {
    if (k == 0) return {};
    std::vector<Rational> c = a.c_;
    for (Rational& x : c) x *= k;
    return PolyQ{std::move(c)};
  }
  friend PolyQ operator*(const PolyQ& a, const PolyQ& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return PolyQ{std::move(c)};
  }
  friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.c_ == b.c_; }

  /// Quotient and remainder of a / b.
  friend std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b) {
    if (b.is_zero()) throw error(errc::division_by_zero, "polynomial division by zero");
    if (a.degree() < b.degree()) return {PolyQ{}, a};
    std::vector<Rational> rem = a.c_;
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    const Rational inv_lead = 1 / b.lead();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
      const auto top = static_cast<std::size_t>(k + b.degree());
      if (rem[top] == 0) continue;
      const Rational q = rem[top] * inv_lead;
      quot[static_cast<std::size_t>(k)] = q;
      for (std::size_t j = 0; j < b.c_.size(); ++j) rem[static_cast<std::size_t>(k) + j] -= q * b.c_[j];
    }
    return {PolyQ{std::move(quot)}, PolyQ{std::move(rem)}};
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Rational> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
inline PolyQ gcd(PolyQ a, PolyQ b) {
  while (!b.is_zero()) {
    PolyQ r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

/// num/den, reduced, with monic den. Zero is 0/1.
class RatFunQ {
 public:
  RatFunQ() : den_(PolyQ::constant(1)) {}
  RatFunQ(PolyQ num, PolyQ den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }
  explicit RatFunQ(PolyQ num) : RatFunQ(std::move(num), PolyQ::constant(1)) {}

  const PolyQ& num() const { return num_; }
  const PolyQ& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunQ reflected() const { return {num_.reflected(), den_.reflected()}; }

  friend RatFunQ operator+(const RatFunQ& a, const RatFunQ& b) {
    if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RatFunQ operator-(const RatFunQ& a) {
    RatFunQ out = a;
    out.num_ = -out.num_;
    return out;
  }
  friend RatFunQ operator-(const RatFunQ& a, const RatFunQ& b) { return a + (-b); }
  friend RatFunQ operator*(const RatFunQ& a, const RatFunQ& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend RatFunQ operator/(const RatFunQ& a, const RatFunQ& b) {
    if (b.is_zero()) throw error(errc::division_by_zero, "rational function division by zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  friend bool operator==(const RatFunQ& a, const RatFunQ& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  void normalize() {
    if (den_.is_zero()) throw error(errc::division_by_zero, "zero denominator");
    if (num_.is_zero()) {
      den_ = PolyQ::constant(1);
      return;
    }
    PolyQ g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
    const Rational lead = den_.lead();
    if (lead != 1) {
      num_ = num_ * (1 / lead);
      den_ = den_ * (1 / lead);
    }
  }

  PolyQ num_;
  PolyQ den_;
};

/// pi^k * f(s). All quantities handled here are homogeneous in pi, so sums
/// across different grades are rejected.
class RatFunPi {
 public:
  RatFunPi() = default;
  RatFunPi(int pi_power, RatFunQ fun) : pi_power_(pi_power), fun_(std::move(fun)) {
    if (fun_.is_zero()) pi_power_ = 0;
  }
  RatFunPi(int pi_power, PolyQ num, PolyQ den) : RatFunPi(pi_power, RatFunQ(std::move(num), std::move(den))) {}

  static RatFunPi constant(const PiScaled& c) {
    return {c.pi_power(), RatFunQ(PolyQ::constant(c.coeff()))};
  }
  /// pi^k * coeff / (s - pole)
  static RatFunPi simple_pole(const PiScaled& coeff, const Rational& pole) {
    return {coeff.pi_power(), PolyQ::constant(coeff.coeff()), PolyQ{-pole, Rational(1)}};
  }

  int pi_power() const { return pi_power_; }
  const RatFunQ& fun() const { return fun_; }
  bool is_zero() const { return fun_.is_zero(); }

  RatFunPi reflected() const { return {pi_power_, fun_.reflected()}; }

  friend RatFunPi operator+(const RatFunPi& a, const RatFunPi& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.pi_power_ != b.pi_power_) {
      throw error(errc::grade_mismatch, "adding pi^" + std::to_string(a.pi_power_) + " and pi^" +
                                            std::to_string(b.pi_power_) + " rational functions");
    }
    return {a.pi_power_, a.fun_ + b.fun_};
  }
  friend RatFunPi operator-(const RatFunPi& a) { return {a.pi_power_, -a.fun_}; }
  friend RatFunPi operator-(const RatFunPi& a, const RatFunPi& b) { return a + (-b); }
  friend RatFunPi operator*(const RatFunPi& a, const RatFunPi& b) {
    return {a.pi_power_ + b.pi_power_, a.fun_ * b.fun_};
  }
  friend RatFunPi operator/(const RatFunPi& a, const RatFunPi& b) {
    if (b.is_zero()) throw error(errc::division_by_zero, "rational function division by zero");
    return {a.pi_power_ - b.pi_power_, a.fun_ / b.fun_};
  }
  friend bool operator==(const RatFunPi& a, const RatFunPi& b) {
    return a.pi_power_ == b.pi_power_ && a.fun_ == b.fun_;
  }

 private:
  int pi_power_ = 0;
  RatFunQ fun_;
};

enum class arith_op { add, sub, mul, div };

inline RatFunPi ratfun_arith(const RatFunPi& a, const RatFunPi& b, arith_op op) {
  switch (op) {
    case arith_op::add: return a + b;
    case arith_op::sub: return a - b;
    case arith_op::mul: return a * b;
    case arith_op::div: return a / b;
  }
  return {};
}

/// f(s0) as an exact pi-scaled value.
inline PiScaled ratfun_eval_exact(const RatFunPi& f, const Rational& s0) {
  const Rational den = f.fun().den()(s0);
  if (den == 0) throw error(errc::pole_evaluation, "evaluation at a pole");
  return {f.fun().num()(s0) / den, f.pi_power()};
}

inline long double ratfun_eval(const RatFunPi& f, const Rational& s0, long double pi_value = pi_ld) {
  return ratfun_eval_exact(f, s0).value(pi_value);
}

/// Residues of f at its poles, keyed by the (integer) pole. The denominator
/// must split into distinct linear factors s - n with integer n.
inline std::map<long, PiScaled> partial_fractions(const RatFunPi& f) {
  const PolyQ& num = f.fun().num();
  const PolyQ& den = f.fun().den();
  std::map<long, PiScaled> out;
  if (num.is_zero()) return out;
  if (num.degree() >= den.degree()) throw error(errc::improper_fraction, "deg(num) >= deg(den)");

  for (const Rational& c : den.coeffs()) {
    // a monic product of (s - n) over integers n has integer coefficients
    if (!is_integer(c)) throw error(errc::non_integer_pole, "denominator has non-integer coefficients");
  }
  const PolyQ dden = den.derivative();
  if (gcd(den, dden).degree() > 0) throw error(errc::repeated_pole, "denominator has a repeated root");

  // Locate candidates numerically; every candidate is then checked exactly.
  std::vector<cplx> dc;
  dc.reserve(den.coeffs().size());
  for (const Rational& c : den.coeffs()) dc.emplace_back(to_double(c), 0.0);
  std::set<long> poles;
  try {
    for (const cplx& z : find_roots(CoeffVec{dc}, 1e-6).roots) poles.insert(std::lround(z.real()));
  } catch (const error&) {
    throw error(errc::non_integer_pole, "could not isolate denominator roots");
  }
  if (static_cast<int>(poles.size()) != den.degree()) {
    throw error(errc::non_integer_pole, "denominator roots are not distinct integers");
  }
  for (long n : poles) {
    const Rational s0{BigInt(n)};
    if (den(s0) != 0) throw error(errc::non_integer_pole, "denominator has a non-integer root");
    out.emplace(n, PiScaled(num(s0) / dden(s0), f.pi_power()));
  }
  return out;
}

}  // namespace mahler
