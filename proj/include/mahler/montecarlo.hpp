#pragma once

// Seeded Monte Carlo estimates of
//   h_N(xi)          = vol{b in C^N     : nu_rec(b) <= xi}
//   vol(V_{N+1})     = vol{v in C^{N+1} : mu_rec(v) <= 1}
// by uniform sampling of a product of disks that contains the sublevel set.
//
// For a degree-2N polynomial with Mahler measure mu, |a_j| <= C(2N, j) mu.
// Coefficient b_n (or v_n) sits at x^{N+n} of x^N p(x), hence the radius
// C(2N, N - n) * xi.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <thread>
#include <vector>

#include "mahler/error.hpp"
#include "mahler/measure.hpp"
#include "mahler/poly.hpp"
#include "mahler/rational.hpp"

namespace mahler {

struct MCEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;  // accepted samples
  std::uint64_t seed = 0;
  double region_volume = 0.0;
  std::uint64_t hits = 0;
  std::uint64_t rejections = 0;  // root-finder failures, excluded from `samples`
};

/// SplitMix64 output for position `counter` of the stream keyed by `seed`;
/// stateless, so any partition of the counters yields the same values.
inline double counter_uniform(std::uint64_t seed, std::uint64_t counter) {
  std::uint64_t z = seed + (counter + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return static_cast<double>(z >> 11) * 0x1.0p-53;
}

inline std::vector<double> bounding_radii(int order, double xi) {
  if (order < 1) throw error(errc::domain_error, "N >= 1");
  if (!(xi >= 1.0)) throw error(errc::domain_error, "xi >= 1");
  std::vector<double> radii;
  for (int n = 0; n < order; ++n) radii.push_back(binomial(2 * order, order - n).convert_to<double>() * xi);
  return radii;
}

namespace detail {

enum class outcome { hit, miss, reject };

inline constexpr std::uint64_t mc_chunk = 1u << 14;

/// Uniform point in the product of disks |z_n| <= radii[n] for sample `index`.
inline void sample_disks(const std::vector<double>& radii, std::uint64_t seed, std::uint64_t index,
                         std::vector<cplx>& out) {
  const std::uint64_t base = index * 2 * radii.size();
  for (std::size_t n = 0; n < radii.size(); ++n) {
    const double u = counter_uniform(seed, base + 2 * n);
    const double w = counter_uniform(seed, base + 2 * n + 1);
    out[n] = std::polar(radii[n] * std::sqrt(u), 2.0 * std::numbers::pi * w);
  }
}

struct Tally {
  std::uint64_t hits = 0;
  std::uint64_t misses = 0;
  std::uint64_t rejections = 0;
};

template <class Classify>
Tally run_chunks(const std::vector<double>& radii, std::uint64_t samples, std::uint64_t seed, unsigned workers,
                 const Classify& classify) {
  const std::uint64_t chunks = (samples + mc_chunk - 1) / mc_chunk;
  std::vector<Tally> per_chunk(chunks);
  auto work = [&](unsigned worker) {
    std::vector<cplx> point(radii.size());
    for (std::uint64_t c = worker; c < chunks; c += workers) {
      Tally t;
      const std::uint64_t end = std::min(samples, (c + 1) * mc_chunk);
      for (std::uint64_t i = c * mc_chunk; i < end; ++i) {
        sample_disks(radii, seed, i, point);
        switch (classify(point)) {
          case outcome::hit: ++t.hits; break;
          case outcome::miss: ++t.misses; break;
          case outcome::reject: ++t.rejections; break;
        }
      }
      per_chunk[c] = t;
    }
  };
  workers = std::max(1u, workers);
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  Tally total;
  for (const Tally& t : per_chunk) {
    total.hits += t.hits;
    total.misses += t.misses;
    total.rejections += t.rejections;
  }
  return total;
}

inline MCEstimate finish(const std::vector<double>& radii, const Tally& tally, std::uint64_t seed) {
  MCEstimate est;
  est.seed = seed;
  est.region_volume = 1.0;
  for (double r : radii) est.region_volume *= std::numbers::pi * r * r;
  est.hits = tally.hits;
  est.rejections = tally.rejections;
  est.samples = tally.hits + tally.misses;
  if (est.samples == 0) return est;
  const double p = static_cast<double>(est.hits) / static_cast<double>(est.samples);
  est.mean = est.region_volume * p;
  est.std_error = est.region_volume * std::sqrt(p * (1.0 - p) / static_cast<double>(est.samples));
  return est;
}

template <class Measure>
outcome classify_by(const Measure& measure, double threshold) {
  try {
    return measure() <= threshold ? outcome::hit : outcome::miss;
  } catch (const error& e) {
    if (e.code() == errc::no_convergence) return outcome::reject;
    throw;
  }
}

}  // namespace detail

inline constexpr std::uint64_t mc_min_samples = 10'000;

inline MCEstimate mc_hN(int order, double xi, std::uint64_t samples, std::uint64_t seed, unsigned workers = 1) {
  if (samples < mc_min_samples) throw error(errc::domain_error, "at least 1e4 samples");
  const std::vector<double> radii = bounding_radii(order, xi);
  const auto tally = detail::run_chunks(radii, samples, seed, workers, [&](const std::vector<cplx>& b) {
    return detail::classify_by([&] { return nu_rec(MonicRecip{b}); }, xi);
  });
  return detail::finish(radii, tally, seed);
}

inline MCEstimate mc_volume(int order, std::uint64_t samples, std::uint64_t seed, unsigned workers = 1) {
  if (samples < mc_min_samples) throw error(errc::domain_error, "at least 1e4 samples");
  if (order < 1) throw error(errc::domain_error, "N >= 1");
  std::vector<double> radii;
  for (int n = 0; n <= order; ++n) radii.push_back(binomial(2 * order, order - n).convert_to<double>());
  const auto tally = detail::run_chunks(radii, samples, seed, workers, [&](const std::vector<cplx>& v) {
    return detail::classify_by([&] { return mu_rec(RecipLaurent{v}); }, 1.0);
  });
  return detail::finish(radii, tally, seed);
}

/// Samples the box of bounding_radii(N, xi) inflated by `inflation` and counts
/// points with nu_rec <= xi that fall outside the nominal box. Must be zero.
inline std::uint64_t containment_probe(int order, double xi, std::uint64_t samples, std::uint64_t seed,
                                       double inflation = 2.0) {
  const std::vector<double> nominal = bounding_radii(order, xi);
  std::vector<double> wide = nominal;
  for (double& r : wide) r *= inflation;
  const auto tally = detail::run_chunks(wide, samples, seed, 1, [&](const std::vector<cplx>& b) {
    bool inside = true;
    for (std::size_t n = 0; n < b.size(); ++n) inside = inside && std::abs(b[n]) <= nominal[n];
    if (inside) return detail::outcome::miss;
    return detail::classify_by([&] { return nu_rec(MonicRecip{b}); }, xi);
  });
  return tally.hits;
}

}  // namespace mahler
