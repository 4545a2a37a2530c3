#pragma once

// Numeric Mahler measure. The root-based Jensen product is the primary
// method; the quadrature of log|f| over the unit circle is a cross-check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "mahler/error.hpp"
#include "mahler/poly.hpp"
#include "mahler/roots.hpp"

namespace mahler {

/// |w_M| prod max{1, |beta_m|}.
inline double mahler_from_roots(const CoeffVec& f, double tol = default_root_tol) {
  const int deg = f.degree();
  if (deg < 0) throw error(errc::zero_polynomial, "Mahler measure of the zero polynomial");
  CoeffVec trimmed{std::vector<cplx>(f.entries.begin(), f.entries.begin() + deg + 1)};
  double out = std::abs(trimmed.entries.back());
  if (deg == 0) return out;
  for (const cplx& root : find_roots(trimmed, tol).roots) out *= std::max(1.0, std::abs(root));
  return out;
}

/// exp of the mean of log|f| at t_j = (j + 1/2)/nodes.
inline double mahler_quadrature(const CoeffVec& f, int nodes) {
  const int deg = f.degree();
  if (deg < 0) throw error(errc::zero_polynomial, "Mahler measure of the zero polynomial");
  if (nodes < 16) throw error(errc::domain_error, "quadrature needs at least 16 nodes");
  // |x| = 1 on the circle, so factors of x drop out
  std::size_t low = 0;
  while (f.entries[low] == cplx{}) ++low;
  if (static_cast<int>(low) == deg) return std::abs(f.entries[low]);
  const CoeffVec g{std::vector<cplx>(f.entries.begin() + static_cast<std::ptrdiff_t>(low),
                                     f.entries.begin() + deg + 1)};

  double sum = 0.0;
  for (int j = 0; j < nodes; ++j) {
    const double t = (j + 0.5) / nodes;
    const double mod = std::abs(g(std::polar(1.0, 2.0 * std::numbers::pi * t)));
    if (mod == 0.0) throw error(errc::node_on_zero, "f vanishes at a quadrature node");
    sum += std::log(mod);
  }
  return std::exp(sum / nodes);
}

/// Mahler measure of p_v, via x^L p_v(x) where v_L is the last nonzero entry.
inline double mu_rec(const RecipLaurent& p, double tol = default_root_tol) {
  std::size_t last = p.v.size();
  while (last > 0 && p.v[last - 1] == cplx{}) --last;
  if (last == 0) return 0.0;
  if (last == 1) return std::abs(p.v[0]);
  RecipLaurent trimmed;
  trimmed.v.assign(p.v.begin(), p.v.begin() + static_cast<std::ptrdiff_t>(last));
  return mahler_from_roots(lambda_embed(trimmed), tol);
}

/// Mahler measure of the monic form; always >= 1.
inline double nu_rec(const MonicRecip& p, double tol = default_root_tol) {
  return mu_rec(p.extended(), tol);
}

}  // namespace mahler
