#pragma once

#include <map>
#include <string>
#include <utility>

#include "mahler/error.hpp"
#include "mahler/ratfun.hpp"
#include "mahler/rational.hpp"

namespace mahler {

/// pi^k * sum_e c_e x^e with even exponents e, viewed as a function on
/// [1, inf) that vanishes on [0, 1).
class LaurentPi {
 public:
  LaurentPi() = default;
  explicit LaurentPi(int pi_power) : pi_power_(pi_power) {}

  /// Adds c * x^exponent. The coefficient's grade must match the existing terms.
  LaurentPi& add_term(int exponent, const PiScaled& c) {
    if (exponent % 2 != 0) throw error(errc::odd_exponent, "exponent " + std::to_string(exponent));
    if (c.is_zero()) return *this;
    if (terms_.empty()) {
      pi_power_ = c.pi_power();
    } else if (c.pi_power() != pi_power_) {
      throw error(errc::grade_mismatch, "Laurent terms must share one pi-grade");
    }
    Rational& slot = terms_[exponent];
    slot += c.coeff();
    if (slot == 0) terms_.erase(exponent);
    if (terms_.empty()) pi_power_ = 0;
    return *this;
  }

  int pi_power() const { return terms_.empty() ? 0 : pi_power_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<int, Rational>& terms() const { return terms_; }

  PiScaled coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? PiScaled{} : PiScaled(it->second, pi_power_);
  }

  /// Exact value at a rational point x != 0.
  PiScaled eval_exact(const Rational& x) const {
    if (x == 0) throw error(errc::zero_argument, "Laurent polynomial evaluated at 0");
    Rational acc = 0;
    for (const auto& [e, c] : terms_) acc += c * rational_pow(x, e);
    return {acc, pi_power()};
  }

  long double eval(long double x, long double pi_value = pi_ld) const {
    long double acc = 0;
    for (const auto& [e, c] : terms_) acc += to_long_double(c) * std::pow(x, static_cast<long double>(e));
    return acc * std::pow(pi_value, static_cast<long double>(pi_power()));
  }

  friend LaurentPi operator+(const LaurentPi& a, const LaurentPi& b) {
    LaurentPi out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, PiScaled(c, b.pi_power_));
    return out;
  }
  friend LaurentPi operator*(const PiScaled& k, const LaurentPi& g) {
    LaurentPi out;
    for (const auto& [e, c] : g.terms_) out.add_term(e, k * PiScaled(c, g.pi_power_));
    return out;
  }
  friend bool operator==(const LaurentPi& a, const LaurentPi& b) {
    return a.terms_ == b.terms_ && a.pi_power() == b.pi_power();
  }

 private:
  int pi_power_ = 0;
  std::map<int, Rational> terms_;
};

/// Mellin transform g^(s) = int_1^inf x^(-2s) g(x) dx/x, continued to the
/// rational function it equals: the term c x^(2n) maps to (c/2)/(s - n).
inline RatFunPi laurent_mellin(const LaurentPi& g) {
  RatFunPi out;
  for (const auto& [e, c] : g.terms()) {
    out = out + RatFunPi::simple_pole(PiScaled(c / 2, g.pi_power()), Rational(e / 2));
  }
  return out;
}

}  // namespace mahler
