#pragma once

// Coefficient-space model of reciprocal Laurent polynomials.
//
//   p_v(x) = v_0 + sum_{n=1}^N v_n (x^n + x^-n)              (RecipLaurent)
//   q_b(x) = (x^N + x^-N) + b_0 + sum_{n=1}^{N-1} b_n (x^n + x^-n)   (MonicRecip)
//
// An even-degree reciprocal polynomial is x^N p_v(x). Coefficients are
// double-precision complex; exact arithmetic lives in rational.hpp/ratfun.hpp.

#include <complex>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "mahler/error.hpp"

namespace mahler {

using cplx = std::complex<double>;

/// f(x) = sum entries[m] x^m.
struct CoeffVec {
  std::vector<cplx> entries;

  CoeffVec() = default;
  explicit CoeffVec(std::vector<cplx> e) : entries(std::move(e)) {}

  std::size_t size() const { return entries.size(); }
  cplx operator[](std::size_t i) const { return entries[i]; }

  /// Index of the highest nonzero entry, or -1 for the zero polynomial.
  int degree() const {
    for (std::size_t i = entries.size(); i-- > 0;) {
      if (entries[i] != cplx{}) return static_cast<int>(i);
    }
    return -1;
  }

  cplx operator()(cplx x) const {
    cplx acc{};
    for (std::size_t i = entries.size(); i-- > 0;) acc = acc * x + entries[i];
    return acc;
  }
};

inline CoeffVec multiply(const CoeffVec& f, const CoeffVec& g) {
  if (f.size() == 0 || g.size() == 0) return CoeffVec{};
  std::vector<cplx> out(f.size() + g.size() - 1);
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) out[i + j] += f[i] * g[j];
  }
  return CoeffVec{std::move(out)};
}

/// p_v with v = (v_0, ..., v_N).
struct RecipLaurent {
  std::vector<cplx> v;

  RecipLaurent() = default;
  explicit RecipLaurent(std::vector<cplx> coeffs) : v(std::move(coeffs)) {
    if (v.size() < 2) throw error(errc::domain_error, "RecipLaurent needs order N >= 1");
  }
  int order() const { return static_cast<int>(v.size()) - 1; }
};

/// The monic form with b = (b_0, ..., b_{N-1}); its top coefficient is fixed at 1.
struct MonicRecip {
  std::vector<cplx> b;

  MonicRecip() = default;
  explicit MonicRecip(std::vector<cplx> coeffs) : b(std::move(coeffs)) {
    if (b.empty()) throw error(errc::domain_error, "MonicRecip needs order N >= 1");
  }
  int order() const { return static_cast<int>(b.size()); }

  RecipLaurent extended() const {
    std::vector<cplx> v = b;
    v.push_back(1.0);
    return RecipLaurent{std::move(v)};
  }
};

struct RootVec {
  std::vector<cplx> alpha;

  RootVec() = default;
  explicit RootVec(std::vector<cplx> a) : alpha(std::move(a)) {
    for (const cplx& z : alpha) {
      if (z == cplx{}) throw error(errc::zero_root, "root vectors live in (C^x)^N");
    }
  }
  int order() const { return static_cast<int>(alpha.size()); }
};

namespace detail {

inline cplx eval_symmetric(std::span<const cplx> v, cplx x) {
  if (x == cplx{}) throw error(errc::zero_argument, "Laurent polynomial evaluated at 0");
  const cplx inv = 1.0 / x;
  cplx acc = v[0];
  cplx up = 1.0;
  cplx down = 1.0;
  for (std::size_t n = 1; n < v.size(); ++n) {
    up *= x;
    down *= inv;
    acc += v[n] * (up + down);
  }
  return acc;
}

}  // namespace detail

inline cplx eval_recip(const RecipLaurent& p, cplx x) { return detail::eval_symmetric(p.v, x); }

inline cplx eval_recip(const MonicRecip& p, cplx x) {
  return detail::eval_symmetric(p.extended().v, x);
}

/// Ascending coefficients of x^N p_v(x): (v_N, ..., v_1, v_0, v_1, ..., v_N).
inline CoeffVec lambda_embed(const RecipLaurent& p) {
  const std::size_t order = p.v.size() - 1;
  std::vector<cplx> out(2 * order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    out[order + n] = p.v[n];
    out[order - n] = p.v[n];
  }
  return CoeffVec{std::move(out)};
}

/// Degree-2N palindrome x^N q_b(x) with unit leading entry.
inline CoeffVec monic_to_poly(const MonicRecip& p) { return lambda_embed(p.extended()); }

/// Coefficients (b_0, ..., b_{N-1}) of prod (x + beta_n) = x^N + sum b_n x^n.
inline std::vector<cplx> e_map(std::span<const cplx> beta) {
  std::vector<cplx> poly{1.0};  // ascending, monic
  for (const cplx& root : beta) {
    poly.push_back(0.0);
    for (std::size_t k = poly.size() - 1; k > 0; --k) poly[k] = poly[k - 1] + root * poly[k];
    poly[0] *= root;
  }
  poly.pop_back();
  return poly;
}

/// The map alpha -> b with x^N q_b(x) = prod (x + alpha_n)(x + 1/alpha_n).
inline MonicRecip from_roots(const RootVec& roots) {
  const std::size_t order = roots.alpha.size();
  if (order == 0) throw error(errc::domain_error, "from_roots needs N >= 1");
  std::vector<cplx> poly{1.0};
  for (const cplx& a : roots.alpha) {
    if (a == cplx{}) throw error(errc::zero_root, "alpha entries must be nonzero");
    const cplx mid = a + 1.0 / a;
    // convolve with the palindrome x^2 + mid x + 1
    std::vector<cplx> next(poly.size() + 2);
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k] += poly[k];
      next[k + 1] += mid * poly[k];
      next[k + 2] += poly[k];
    }
    poly = std::move(next);
  }
  return MonicRecip{std::vector<cplx>(poly.begin() + static_cast<std::ptrdiff_t>(order),
                                      poly.end() - 1)};
}

}  // namespace mahler
