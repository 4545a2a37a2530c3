#pragma once

// Elementary symmetric functions, the reciprocal-pair expansion, Vandermonde
// products, and the Jacobian of the roots-to-coefficients map
// alpha -> b, x^N q_b(x) = prod (x + alpha_n)(x + 1/alpha_n).
//
// Writing beta_n = alpha_n + 1/alpha_n, the n-th elementary symmetric function
// of the 2N values (alpha, 1/alpha) is
//
//   eps_n = sum_{M >= 0} C(N - n + 2M, M) e_{n-2M}(beta).
//
// A degree-(n-2M) monomial of the beta's arises once for every choice of M
// pairs (alpha_m, 1/alpha_m) among the N - (n - 2M) unused indices, which
// gives the binomial above. Note the sign inside the binomial: C(N - n - 2M, M)
// is wrong already at N = 2, n = 2, where eps_2 = e_2 + 2.

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "mahler/error.hpp"
#include "mahler/poly.hpp"
#include "mahler/rational.hpp"

namespace mahler {

namespace detail {

template <class T>
T from_integer(const BigInt& k) {
  if constexpr (std::is_same_v<T, cplx>) {
    return cplx(k.convert_to<double>(), 0.0);
  } else {
    return T(Rational(k));
  }
}

}  // namespace detail

/// (e_0, ..., e_N) of the inputs, read off from prod (x + value).
template <class T>
std::vector<T> elem_sym_all(std::span<const T> values) {
  std::vector<T> e{T(1)};
  for (const T& v : values) {
    e.push_back(T(0));
    for (std::size_t k = e.size() - 1; k > 0; --k) e[k] = e[k] + v * e[k - 1];
  }
  return e;
}

template <class T>
T elem_sym(std::span<const T> values, int n) {
  if (n < 0 || n > static_cast<int>(values.size())) {
    throw error(errc::index_out_of_range, "e_n needs 0 <= n <= number of values");
  }
  return elem_sym_all(values)[static_cast<std::size_t>(n)];
}

/// eps_n of (alpha, 1/alpha) from e_k(beta); valid for 0 <= n <= 2N.
template <class T>
T epsilon_via_e(int order, int n, std::span<const T> beta) {
  if (static_cast<int>(beta.size()) != order) throw error(errc::domain_error, "beta must have N entries");
  if (n < 0 || n > 2 * order) throw error(errc::index_out_of_range, "eps_n needs 0 <= n <= 2N");
  const std::vector<T> e = elem_sym_all(beta);
  T out(0);
  for (int m = 0; n - 2 * m >= 0; ++m) {
    const int k = n - 2 * m;
    if (k > order) continue;
    out = out + detail::from_integer<T>(binomial(order - n + 2 * m, m)) * e[static_cast<std::size_t>(k)];
  }
  return out;
}

/// prod_{m < n} (beta_n - beta_m)
template <class T>
T vandermonde(std::span<const T> beta) {
  T out(1);
  for (std::size_t n = 0; n < beta.size(); ++n) {
    for (std::size_t m = 0; m < n; ++m) out = out * (beta[n] - beta[m]);
  }
  return out;
}

inline std::vector<cplx> beta_of(const RootVec& roots) {
  std::vector<cplx> beta;
  beta.reserve(roots.alpha.size());
  for (const cplx& a : roots.alpha) {
    if (a == cplx{}) throw error(errc::zero_root, "alpha entries must be nonzero");
    beta.push_back(a + 1.0 / a);
  }
  return beta;
}

/// V(beta) prod (alpha_n^2 - 1)/alpha_n^2: the holomorphic Jacobian determinant.
inline cplx jacobian_complex_det(const RootVec& roots) {
  const std::vector<cplx> beta = beta_of(roots);
  cplx out = vandermonde<cplx>(beta);
  for (const cplx& a : roots.alpha) out *= (a * a - 1.0) / (a * a);
  return out;
}

/// Real 2N x 2N Jacobian determinant of alpha -> b, i.e. |complex det|^2.
inline double jacobian_real_factor(const RootVec& roots) { return std::norm(jacobian_complex_det(roots)); }

using ComplexMap = std::function<std::vector<cplx>(std::span<const cplx>)>;

/// The map alpha -> (b_0, ..., b_{N-1}).
inline ComplexMap roots_to_coefficients_map() {
  return [](std::span<const cplx> alpha) {
    return from_roots(RootVec{std::vector<cplx>(alpha.begin(), alpha.end())}).b;
  };
}

/// Central-difference real Jacobian in interleaved (re, im) coordinates.
inline Eigen::MatrixXd numeric_jacobian(const ComplexMap& map, const RootVec& point, double h) {
  const std::size_t n = point.alpha.size();
  double min_mod = HUGE_VAL;
  for (const cplx& a : point.alpha) min_mod = std::min(min_mod, std::abs(a));
  if (!(h > 0.0) || h > 1e-2 * min_mod) {
    throw error(errc::step_too_large, "step must satisfy 0 < h <= 1e-2 min|alpha|");
  }

  Eigen::MatrixXd jac(2 * n, 2 * n);
  std::vector<cplx> plus = point.alpha;
  std::vector<cplx> minus = point.alpha;
  for (std::size_t col = 0; col < 2 * n; ++col) {
    const std::size_t k = col / 2;
    const cplx dir = col % 2 == 0 ? cplx(h, 0.0) : cplx(0.0, h);
    plus[k] = point.alpha[k] + dir;
    minus[k] = point.alpha[k] - dir;
    const std::vector<cplx> fp = map(plus);
    const std::vector<cplx> fm = map(minus);
    if (fp.size() != n || fm.size() != n) throw error(errc::domain_error, "map must send C^N to C^N");
    for (std::size_t r = 0; r < n; ++r) {
      const cplx d = (fp[r] - fm[r]) / (2.0 * h);
      jac(static_cast<Eigen::Index>(2 * r), static_cast<Eigen::Index>(col)) = d.real();
      jac(static_cast<Eigen::Index>(2 * r + 1), static_cast<Eigen::Index>(col)) = d.imag();
    }
    plus[k] = point.alpha[k];
    minus[k] = point.alpha[k];
  }
  return jac;
}

/// Step h = 1e-5 min|alpha| used by the finite-difference checks.
inline double default_jacobian_step(const RootVec& point) {
  double min_mod = HUGE_VAL;
  for (const cplx& a : point.alpha) min_mod = std::min(min_mod, std::abs(a));
  return 1e-5 * min_mod;
}

}  // namespace mahler
