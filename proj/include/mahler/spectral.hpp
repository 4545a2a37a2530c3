#pragma once

// Exact Mellin-side description of the distribution of the monic reciprocal
// Mahler measure.
//
// In root coordinates the transform H_N(s) = int nu_rec(b)^(-2s) db becomes
// the determinant of the N x N matrix I(J, K; s), each entry the Mellin
// transform of a one-dimensional angular integral h(J, K; r). Each entry is
// pi * sum_n c_n(J) c_n(K) 2s/(s^2 - n^2), so I = C^T D C with C unit upper
// triangular and D = diag(2 pi s/(s^2 - n^2)), and
//
//   H_N(s) = prod_{n=1}^N 2 pi s/(s^2 - n^2).
//
// The distribution function h_N(xi) = vol{b : nu_rec(b) <= xi} is recovered
// from the partial fractions of H_N(s)/(2s).

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "mahler/error.hpp"
#include "mahler/laurent.hpp"
#include "mahler/matrix.hpp"
#include "mahler/ratfun.hpp"
#include "mahler/rational.hpp"

namespace mahler {

/// c_n(J) = C(J-1, (J+n)/2 - 1) - C(J-1, (J+n)/2) for n <= J of the same
/// parity, else 0. The bracket order is fixed by integrating h(1, 3; r)
/// directly, which gives +2 pi (r^2 + r^-2); c_J(J) = 1.
inline BigInt coeff_c(int n, int order) {
  if (n < 1 || order < 1) throw error(errc::domain_error, "c_n(J) needs n, J >= 1");
  if (n > order || (order - n) % 2 != 0) return 0;
  const int half = (order + n) / 2;
  return binomial(order - 1, half - 1) - binomial(order - 1, half);
}

/// C[n-1][K-1] = c_n(K); unit upper triangular.
inline Matrix<Rational> c_matrix(int order) {
  const auto size = static_cast<std::size_t>(order);
  Matrix<Rational> c(size, size, Rational(0));
  for (int n = 1; n <= order; ++n) {
    for (int k = 1; k <= order; ++k) c(static_cast<std::size_t>(n - 1), static_cast<std::size_t>(k - 1)) = Rational(coeff_c(n, k));
  }
  return c;
}

/// 2 pi s / (s^2 - n^2)
inline RatFunPi pole_pair(int n) {
  return {1, PolyQ{Rational(0), Rational(2)}, PolyQ{Rational(-n * n), Rational(0), Rational(1)}};
}

inline RatFunPi i_entry(int j, int k) {
  RatFunPi out;
  for (int n = 1; n <= std::min(j, k); ++n) {
    const BigInt w = coeff_c(n, j) * coeff_c(n, k);
    if (w == 0) continue;
    out = out + RatFunPi::constant(PiScaled(Rational(w), 0)) * pole_pair(n);
  }
  return out;
}

/// h(J, K; r) = 2 pi sum_n c_n(J) c_n(K) (r^(2n) + r^(-2n)) on [1, inf).
inline LaurentPi hJK_closed(int j, int k) {
  LaurentPi out;
  for (int n = 1; n <= std::min(j, k); ++n) {
    const BigInt w = coeff_c(n, j) * coeff_c(n, k);
    if (w == 0) continue;
    const PiScaled c(Rational(2 * w), 1);
    out.add_term(2 * n, c);
    out.add_term(-2 * n, c);
  }
  return out;
}

/// Trapezoid rule for the angular integral
///   int_0^{2pi} (a - 1/a)(conj a - 1/conj a)(a + 1/a)^(J-1)(conj a + 1/conj a)^(K-1) dtheta,
/// a = r e^{i theta}. The integrand is a trigonometric polynomial of degree
/// J + K, so the rule is exact up to rounding once nodes > 2(J + K).
inline double hJK_quadrature(int j, int k, double r, int nodes) {
  if (j < 1 || k < 1) throw error(errc::domain_error, "J, K >= 1");
  if (r < 1.0) throw error(errc::domain_error, "h(J, K; r) is defined here for r >= 1");
  if (nodes <= 2 * (j + k)) throw error(errc::domain_error, "nodes must exceed 2(J + K)");
  double sum = 0.0;
  for (int t = 0; t < nodes; ++t) {
    const double theta = 2.0 * std::numbers::pi * t / nodes;
    const cplx a = std::polar(r, theta);
    const cplx ac = std::conj(a);
    const cplx value = (a - 1.0 / a) * (ac - 1.0 / ac) * std::pow(a + 1.0 / a, j - 1) *
                       std::pow(ac + 1.0 / ac, k - 1);
    sum += value.real();
  }
  return sum * (2.0 * std::numbers::pi / nodes);
}

inline Matrix<RatFunPi> i_matrix(int order) {
  if (order < 1) throw error(errc::domain_error, "N >= 1");
  const auto size = static_cast<std::size_t>(order);
  Matrix<RatFunPi> m(size, size);
  for (int j = 1; j <= order; ++j) {
    for (int k = j; k <= order; ++k) {
      const RatFunPi e = i_entry(j, k);
      m(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(k - 1)) = e;
      m(static_cast<std::size_t>(k - 1), static_cast<std::size_t>(j - 1)) = e;
    }
  }
  return m;
}

inline RatFunPi det_ratfun(const Matrix<RatFunPi>& m) { return det_elimination(m); }

/// prod_{n=1}^N 2 pi s/(s^2 - n^2)
inline RatFunPi h_product(int order) {
  if (order < 1) throw error(errc::domain_error, "N >= 1");
  RatFunPi out = pole_pair(1);
  for (int n = 2; n <= order; ++n) out = out * pole_pair(n);
  return out;
}

/// H_N(s) / (2s), the Mellin transform of h_N.
inline RatFunPi h_mellin(int order) {
  return h_product(order) / RatFunPi(0, PolyQ{Rational(0), Rational(2)}, PolyQ::constant(1));
}

/// Residue of H_N(s)/(2s) at s = n:
///   pi^N 2^(N-1) n^N (-1)^(N-n) / ((N+n)! (N-n)!).
inline PiScaled rho(int order, int n) {
  if (n < 1 || n > order) throw error(errc::index_out_of_range, "rho(N, n) needs 1 <= n <= N");
  Rational q = Rational(BigInt(1) << (order - 1)) * rational_pow(Rational(n), order);
  q /= Rational(factorial(order + n) * factorial(order - n));
  if ((order - n) % 2 != 0) q = -q;
  return {q, order};
}

/// h_N(xi) = sum_n 2 rho(n) (xi^(2n) + (-1)^N xi^(-2n)) for xi >= 1. The
/// pole at s = +n comes from the xi^(2n) term, which fixes the orientation.
inline LaurentPi h_closed(int order) {
  if (order < 1) throw error(errc::domain_error, "N >= 1");
  LaurentPi out;
  for (int n = 1; n <= order; ++n) {
    const PiScaled twice = PiScaled(Rational(2), 0) * rho(order, n);
    out.add_term(2 * n, twice);
    out.add_term(-2 * n, order % 2 == 0 ? twice : -twice);
  }
  return out;
}

/// h_N at a rational point; zero below 1.
inline PiScaled h_eval_exact(int order, const Rational& xi) {
  if (xi < 1) return {};
  return h_closed(order).eval_exact(xi);
}

/// h_N(xi), evaluated exactly at the binary value of xi and rounded once, so
/// the result is non-negative and monotone on any grid.
inline double h_eval(int order, double xi, long double pi_value = pi_ld) {
  if (!(xi >= 1.0)) return 0.0;
  return static_cast<double>(h_eval_exact(order, rational_from_double(xi)).value(pi_value));
}

/// 2^N pi^(N+1) (N+1)^N / (2N+1)!
inline PiScaled volume_exact(int order) {
  if (order < 1) throw error(errc::domain_error, "N >= 1");
  const Rational q = Rational(BigInt(1) << order) * rational_pow(Rational(order + 1), order) /
                     Rational(factorial(2 * order + 1));
  return {q, order + 1};
}

/// 2 pi (H_N(s)/2s) at s = N + 1.
inline PiScaled volume_via_mellin(int order) {
  return PiScaled(Rational(2), 1) * ratfun_eval_exact(h_mellin(order), Rational(order + 1));
}

struct SpectralCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct RankOneReport {
  int order = 0;
  std::vector<Rational> psi;
  std::vector<SpectralCheck> checks;

  bool passed() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return !checks.empty();
  }
};

/// Verifies the rank-one structure behind the product formula:
/// I = sum_n B_n 2 pi s/(s^2 - n^2) with B_n = w_n w_n^T (w_n the n-th row of
/// C), a kernel vector psi of w_1..w_{N-1}, I psi = (2 pi s/(s^2 - N^2)) B_N psi,
/// det(I - B_N 2 pi s/(s^2 - N^2)) = 0, I = C^T D C, det C = 1, and the
/// induction step det I_N = det I_{N-1} * 2 pi s/(s^2 - N^2).
inline RankOneReport omega_psi_check(int order) {
  if (order < 2) throw error(errc::domain_error, "rank-one check needs N >= 2");
  const auto size = static_cast<std::size_t>(order);
  RankOneReport report;
  report.order = order;

  const Matrix<Rational> c = c_matrix(order);
  const Matrix<RatFunPi> im = i_matrix(order);

  // Back-substitute w_n . psi = 0 for n < N with psi_N = 1 (C has unit diagonal).
  std::vector<Rational> psi(size, Rational(0));
  psi[size - 1] = 1;
  for (std::size_t n = size - 1; n-- > 0;) {
    Rational acc = 0;
    for (std::size_t k = n + 1; k < size; ++k) acc += c(n, k) * psi[k];
    psi[n] = -acc / c(n, n);
  }
  bool orthogonal = true;
  for (std::size_t n = 0; n + 1 < size; ++n) {
    Rational dot = 0;
    for (std::size_t k = 0; k < size; ++k) dot += c(n, k) * psi[k];
    orthogonal = orthogonal && dot == 0;
  }
  if (!orthogonal) throw error(errc::kernel_not_found, "no kernel vector for w_1..w_{N-1}");
  report.psi = psi;
  report.checks.push_back({"kernel_orthogonal", true, "w_n . psi = 0 for n = 1..N-1"});

  // B_N psi and I psi
  const RatFunPi last = pole_pair(order);
  Rational wn_psi = 0;
  for (std::size_t k = 0; k < size; ++k) wn_psi += c(size - 1, k) * psi[k];
  bool identity = true;
  for (std::size_t j = 0; j < size; ++j) {
    RatFunPi lhs;
    for (std::size_t k = 0; k < size; ++k) {
      lhs = lhs + im(j, k) * RatFunPi::constant(PiScaled(psi[k], 0));
    }
    const RatFunPi rhs = last * RatFunPi::constant(PiScaled(c(size - 1, j) * wn_psi, 0));
    identity = identity && lhs == rhs;
  }
  report.checks.push_back({"i_psi_rank_one", identity, "I psi == (2 pi s/(s^2 - N^2)) B_N psi"});

  Matrix<RatFunPi> shifted = im;
  for (std::size_t j = 0; j < size; ++j) {
    for (std::size_t k = 0; k < size; ++k) {
      shifted(j, k) = shifted(j, k) - last * RatFunPi::constant(PiScaled(c(size - 1, j) * c(size - 1, k), 0));
    }
  }
  report.checks.push_back({"shifted_singular", det_ratfun(shifted).is_zero(),
                           "det(I - B_N 2 pi s/(s^2 - N^2)) == 0"});

  Matrix<RatFunPi> cq(size, size);
  Matrix<RatFunPi> d(size, size);
  for (std::size_t j = 0; j < size; ++j) {
    d(j, j) = pole_pair(static_cast<int>(j) + 1);
    for (std::size_t k = 0; k < size; ++k) cq(j, k) = RatFunPi::constant(PiScaled(c(j, k), 0));
  }
  const Matrix<RatFunPi> ctdc = multiply(multiply(cq.transposed(), d), cq);
  report.checks.push_back({"factorization", ctdc == im, "I == C^T D C"});

  const Rational det_c = det_elimination(c);
  report.checks.push_back({"det_c_one", det_c == 1, "det C == 1"});

  Matrix<RatFunPi> replaced = im;
  for (std::size_t j = 0; j + 1 < size; ++j) replaced(j, size - 1) = RatFunPi{};
  for (std::size_t k = 0; k + 1 < size; ++k) replaced(size - 1, k) = im(size - 1, k);
  replaced(size - 1, size - 1) = last;
  const RatFunPi det_full = det_ratfun(im);
  report.checks.push_back({"last_column_reduction", det_ratfun(replaced) == det_full,
                           "det I == det(I with last column (0, ..., 2 pi s/(s^2 - N^2)))"});
  report.checks.push_back({"induction_step", det_full == det_ratfun(i_matrix(order - 1)) * last,
                           "det I_N == det I_{N-1} * 2 pi s/(s^2 - N^2)"});
  return report;
}

}  // namespace mahler
