#pragma once

// Simultaneous polynomial root finding (Aberth-Ehrlich) with Newton polish.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "mahler/error.hpp"
#include "mahler/poly.hpp"

namespace mahler {

struct RootSet {
  std::vector<cplx> roots;
  /// max over roots z of |f(z)| / sum_k |a_k| |z|^k (a backward error).
  double residual = 0.0;
};

inline constexpr double default_root_tol = 1e-10;

namespace detail {

struct HornerValue {
  cplx value;
  cplx derivative;
  double scale;  // sum |a_k| |z|^k
};

inline HornerValue horner(const std::vector<cplx>& a, cplx z) {
  cplx p = a.back();
  cplx dp{};
  double scale = std::abs(a.back());
  const double mod = std::abs(z);
  for (std::size_t k = a.size() - 1; k-- > 0;) {
    dp = dp * z + p;
    p = p * z + a[k];
    scale = scale * mod + std::abs(a[k]);
  }
  return {p, dp, scale};
}

inline double backward_error(const std::vector<cplx>& a, cplx z) {
  const HornerValue h = horner(a, z);
  return h.scale > 0 ? std::abs(h.value) / h.scale : 0.0;
}

}  // namespace detail

/// All deg(f) roots of f, with multiplicity. Deterministic: the starting
/// points lie on a circle of radius |a_0/a_n|^(1/n) (the geometric mean of
/// the root moduli) with a fixed angular offset.
inline RootSet find_roots(const CoeffVec& f, double tol = default_root_tol) {
  if (f.degree() < 0) throw error(errc::zero_polynomial, "cannot find roots of the zero polynomial");
  if (f.entries.back() == cplx{}) {
    throw error(errc::degenerate_leading_coefficient, "leading coefficient is zero");
  }

  RootSet out;
  std::size_t low = 0;
  while (f.entries[low] == cplx{}) ++low;
  out.roots.assign(low, cplx{});
  std::vector<cplx> a(f.entries.begin() + static_cast<std::ptrdiff_t>(low), f.entries.end());
  const std::size_t n = a.size() - 1;
  if (n == 0) return out;
  if (n == 1) {
    out.roots.push_back(-a[0] / a[1]);
    out.residual = detail::backward_error(a, out.roots.back());
    if (!(out.residual <= tol)) throw error(errc::no_convergence, "linear root residual above tolerance");
    return out;
  }

  const double radius = std::pow(std::abs(a[0]) / std::abs(a[n]), 1.0 / static_cast<double>(n));
  std::vector<cplx> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.7;
    z[k] = std::polar(radius, angle);
  }

  constexpr int max_sweeps = 500;
  constexpr double noise = 8.0 * std::numeric_limits<double>::epsilon();
  std::vector<bool> done(n, false);
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    bool all_done = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      const detail::HornerValue h = detail::horner(a, z[i]);
      if (std::abs(h.value) <= noise * h.scale) {
        done[i] = true;
        continue;
      }
      all_done = false;
      cplx repulsion{};
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i && z[i] != z[j]) repulsion += 1.0 / (z[i] - z[j]);
      }
      cplx step;
      if (h.derivative == cplx{}) {
        step = cplx{radius * 1e-3 + 1e-300, 0.0};
      } else {
        const cplx ratio = h.value / h.derivative;
        const cplx denom = 1.0 - ratio * repulsion;
        step = denom == cplx{} ? ratio : ratio / denom;
      }
      z[i] -= step;
    }
    if (all_done) break;
  }

  for (cplx& root : z) {
    for (int it = 0; it < 2; ++it) {
      const detail::HornerValue h = detail::horner(a, root);
      if (h.derivative == cplx{}) break;
      const cplx candidate = root - h.value / h.derivative;
      if (detail::backward_error(a, candidate) < std::abs(h.value) / h.scale) {
        root = candidate;
      } else {
        break;
      }
    }
  }

  double residual = 0.0;
  for (const cplx& root : z) residual = std::max(residual, detail::backward_error(a, root));
  out.roots.insert(out.roots.end(), z.begin(), z.end());
  out.residual = residual;
  if (!(residual <= tol)) {
    throw error(errc::no_convergence, "root residual " + std::to_string(residual) + " above tolerance");
  }
  return out;
}

}  // namespace mahler
