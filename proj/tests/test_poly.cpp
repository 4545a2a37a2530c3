#include <algorithm>
#include <complex>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "mahler/poly.hpp"

using namespace mahler;

namespace {

void expect_close(const std::vector<cplx>& got, const std::vector<cplx>& want, double tol) {
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 0; i < got.size(); ++i) EXPECT_LE(std::abs(got[i] - want[i]), tol) << "entry " << i;
}

cplx random_point(std::mt19937_64& rng, double lo = 0.3, double hi = 2.5) {
  std::uniform_real_distribution<double> mod(lo, hi);
  std::uniform_real_distribution<double> arg(0.0, 2.0 * M_PI);
  return std::polar(mod(rng), arg(rng));
}

}  // namespace

TEST(EvalRecip, Examples) {
  EXPECT_LE(std::abs(eval_recip(RecipLaurent({2.5, 1.0}), 2.0) - cplx(5.0)), 1e-15);
  EXPECT_LE(std::abs(eval_recip(MonicRecip({-2.5}), 2.0)), 1e-15);
  EXPECT_THROW(eval_recip(RecipLaurent({1.0, 1.0}), 0.0), error);
  try {
    eval_recip(MonicRecip({1.0}), 0.0);
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::zero_argument);
  }
}

TEST(EvalRecip, CosineFormOnTheCircle) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<cplx> v(4);
    for (auto& x : v) x = g(rng);
    const double t = std::uniform_real_distribution<double>(0, 1)(rng);
    double expected = v[0].real();
    for (int n = 1; n < 4; ++n) expected += 2.0 * v[static_cast<std::size_t>(n)].real() * std::cos(2 * M_PI * n * t);
    const cplx got = eval_recip(RecipLaurent(v), std::polar(1.0, 2 * M_PI * t));
    EXPECT_NEAR(got.real(), expected, 1e-12);
    EXPECT_NEAR(got.imag(), 0.0, 1e-12);
  }
}

TEST(MonicToPoly, Examples) {
  expect_close(monic_to_poly(MonicRecip({-2.5})).entries, {1.0, -2.5, 1.0}, 0);
  expect_close(monic_to_poly(MonicRecip({2.0, 0.0})).entries, {1.0, 0.0, 2.0, 0.0, 1.0}, 0);
  expect_close(monic_to_poly(MonicRecip({0.0})).entries, {1.0, 0.0, 1.0}, 0);
}

TEST(LambdaEmbed, Examples) {
  const cplx v0(0.3, -1.0);
  const cplx v1(2.0, 0.5);
  expect_close(lambda_embed(RecipLaurent({v0, v1})).entries, {v1, v0, v1}, 0);
  expect_close(lambda_embed(RecipLaurent({1.0, 0.0})).entries, {0.0, 1.0, 0.0}, 0);
  expect_close(lambda_embed(RecipLaurent({0.0, 1.0})).entries, {1.0, 0.0, 1.0}, 0);
}

TEST(FromRoots, Examples) {
  expect_close(from_roots(RootVec({2.0})).b, {2.5}, 1e-15);
  expect_close(from_roots(RootVec({0.5})).b, {2.5}, 1e-15);
  // (x+1)^2 (x-1)^2 = x^4 - 2x^2 + 1
  expect_close(from_roots(RootVec({1.0, -1.0})).b, {-2.0, 0.0}, 1e-15);
  EXPECT_THROW(RootVec({1.0, 0.0}), error);
}

TEST(EMap, Examples) {
  expect_close(e_map(std::vector<cplx>{2.0, 3.0}), {6.0, 5.0}, 0);
  expect_close(e_map(std::vector<cplx>{0.0, 0.0}), {0.0, 0.0}, 0);
  expect_close(e_map(std::vector<cplx>{1.0, -1.0}), {-1.0, 0.0}, 0);
}

TEST(PolyProperties, PalindromeAndEvaluationConsistency) {
  std::mt19937_64 rng(2);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 100; ++trial) {
    const int order = 1 + trial % 6;
    std::vector<cplx> b(static_cast<std::size_t>(order));
    for (auto& x : b) x = {g(rng), g(rng)};
    const MonicRecip p(b);
    const CoeffVec f = monic_to_poly(p);
    ASSERT_EQ(static_cast<int>(f.size()), 2 * order + 1);
    EXPECT_EQ(f.entries.back(), cplx(1.0));
    for (int j = 0; j <= 2 * order; ++j) EXPECT_EQ(f[static_cast<std::size_t>(j)], f[static_cast<std::size_t>(2 * order - j)]);

    const cplx x = random_point(rng);
    const cplx lhs = f(x);
    const cplx rhs = std::pow(x, order) * eval_recip(p, x);
    EXPECT_LE(std::abs(lhs - rhs), 1e-12 * std::abs(rhs));
  }
}

TEST(PolyProperties, PreimageSymmetry) {
  std::mt19937_64 rng(3);
  for (int order = 1; order <= 4; ++order) {
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<cplx> alpha(static_cast<std::size_t>(order));
      for (auto& a : alpha) a = random_point(rng, 0.5, 2.0);
      const MonicRecip base = from_roots(RootVec(alpha));

      std::vector<int> perm(static_cast<std::size_t>(order));
      std::iota(perm.begin(), perm.end(), 0);
      int variants = 0;
      do {
        for (unsigned mask = 0; mask < (1u << order); ++mask) {
          std::vector<cplx> image(static_cast<std::size_t>(order));
          for (int k = 0; k < order; ++k) {
            const cplx a = alpha[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])];
            image[static_cast<std::size_t>(k)] = (mask >> k) & 1u ? 1.0 / a : a;
          }
          expect_close(from_roots(RootVec(image)).b, base.b, 1e-10);
          ++variants;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      int expected = 1 << order;
      for (int k = 2; k <= order; ++k) expected *= k;
      EXPECT_EQ(variants, expected);
    }
  }
}

TEST(PolyProperties, RootsOfFromRoots) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const int order = 1 + trial % 5;
    std::vector<cplx> alpha(static_cast<std::size_t>(order));
    for (auto& a : alpha) a = random_point(rng, 0.4, 2.5);
    const MonicRecip p = from_roots(RootVec(alpha));
    for (const cplx& a : alpha) {
      EXPECT_LE(std::abs(eval_recip(p, -a)), 1e-9);
      EXPECT_LE(std::abs(eval_recip(p, -1.0 / a)), 1e-9);
    }
  }
}
