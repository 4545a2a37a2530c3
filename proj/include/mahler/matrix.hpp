#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

#include "mahler/error.hpp"
#include "mahler/ratfun.hpp"
#include "mahler/rational.hpp"

namespace mahler {

/// Dense square-or-rectangular matrix, row-major.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transposed() const {
    Matrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
struct field_traits;

template <>
struct field_traits<Rational> {
  static Rational one() { return 1; }
  static bool is_zero(const Rational& x) { return x == 0; }
  static Rational scale(const Rational& x, const Rational& k) { return x * k; }
};

template <>
struct field_traits<RatFunPi> {
  static RatFunPi one() { return RatFunPi::constant(PiScaled(1, 0)); }
  static bool is_zero(const RatFunPi& x) { return x.is_zero(); }
  static RatFunPi scale(const RatFunPi& x, const Rational& k) {
    return x * RatFunPi::constant(PiScaled(k, 0));
  }
};

template <class A, class B, class Field = A>
Matrix<Field> multiply(const Matrix<A>& a, const Matrix<B>& b) {
  Matrix<Field> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Field acc{};
      for (std::size_t k = 0; k < a.cols(); ++k) acc = acc + a(i, k) * b(k, j);
      out(i, j) = acc;
    }
  }
  return out;
}

/// Exact determinant by Gaussian elimination over a field, pivoting on the
/// first nonzero entry of each column.
template <class T>
T det_elimination(Matrix<T> m) {
  using traits = field_traits<T>;
  if (m.rows() != m.cols()) throw error(errc::domain_error, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  T det = traits::one();
  bool negate = false;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && traits::is_zero(m(pivot, col))) ++pivot;
    if (pivot == n) return T{};
    if (pivot != col) {
      for (std::size_t c = col; c < n; ++c) std::swap(m(pivot, c), m(col, c));
      negate = !negate;
    }
    const T& p = m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (traits::is_zero(m(r, col))) continue;
      const T factor = m(r, col) / p;
      for (std::size_t c = col + 1; c < n; ++c) m(r, c) = m(r, c) - factor * m(col, c);
      m(r, col) = T{};
    }
    det = det * p;
  }
  return negate ? T(-det) : det;
}

inline int permutation_sign(const std::vector<std::size_t>& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

/// (1/N!) sum_tau sum_sigma sgn(tau) sgn(sigma) prod_n M[tau(n)][sigma(n)].
/// Cost is (N!)^2, so dimensions above 6 are refused.
template <class T>
T det_double_sum(const Matrix<T>& m) {
  using traits = field_traits<T>;
  if (m.rows() != m.cols()) throw error(errc::domain_error, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n > 6) throw error(errc::dimension_too_large, "double-sum determinant limited to 6x6");

  std::vector<std::size_t> tau(n);
  std::iota(tau.begin(), tau.end(), 0);
  T total{};
  do {
    const int sign_tau = permutation_sign(tau);
    std::vector<std::size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
      T term = traits::one();
      for (std::size_t k = 0; k < n && !traits::is_zero(term); ++k) term = term * m(tau[k], sigma[k]);
      if (traits::is_zero(term)) continue;
      total = sign_tau * permutation_sign(sigma) > 0 ? T(total + term) : T(total - term);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  } while (std::next_permutation(tau.begin(), tau.end()));
  return traits::scale(total, Rational(1) / Rational(factorial(static_cast<int>(n))));
}

}  // namespace mahler
