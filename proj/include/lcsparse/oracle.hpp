#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lcsparse/geometry.hpp"
#include "lcsparse/polynomial.hpp"
#include "lcsparse/sps.hpp"

namespace lcsparse::oracle {

using Rng = std::mt19937_64;

/// splitmix64 of seed ^ index; per-trial seeds for reproducible streams.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Uniform integer in [lo, hi], independent of the standard library's
/// distribution implementation.
std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi);

/// Largest convexly independent subset by exhaustive enumeration.
/// Throws CapExceeded above limits.max_brute_points points.
std::int64_t brute_max_convex_subset(const PointSet& a, const Coefficient& tau, const Limits& limits = {});

/// Max-product table C_{i,l} by enumerating every tuple of term indices.
/// Rows may hold at most 3 factors of at most 4 terms each.
std::vector<std::vector<Coefficient>> brute_max_convolution(const SpsExpression& e, std::int64_t degree);

/// Random a_i = 2^(e_i) with 2 e_i >= e_{i-1} + e_{i+1} + ceil(log2 tau) + 1.
/// Requires d >= 2 and tau <= 2^60.
Polynomial random_kurtz_polynomial(Rng& rng, std::int64_t d, const Coefficient& tau);

/// Shape of randomly generated SPS expressions.
struct SpsShape {
  std::int64_t max_k = 3;
  std::int64_t max_m = 3;
  std::int64_t max_t = 4;
  std::int64_t max_exponent = 8;
  /// When set, every row has exactly this many factors.
  std::int64_t fixed_m = 0;
  /// Probability (in percent) that a factor gets a consecutive support and a
  /// sharply concave coefficient profile; the rest get random supports and
  /// random dyadic coefficients.
  std::int64_t shaped_percent = 70;
  /// Range of the curvature used for shaped factors, in bits.
  std::int64_t min_curvature = 48;
  std::int64_t max_curvature = 160;
};

SparsePoly random_factor(Rng& rng, const SpsShape& shape);
SpsExpression random_sps(Rng& rng, const SpsShape& shape);

struct PointShape {
  std::int64_t min_points = 1;
  std::int64_t max_points = 12;
  std::int64_t max_x = 5;
  std::int64_t max_pow2 = 3;
  std::int64_t max_tau_halves = 0;
};

PointSet random_point_set(Rng& rng, const PointShape& shape);

struct ExperimentConfig {
  std::uint64_t seed = 1;
  std::int64_t trials = 2000;
  SpsShape shape;
  Coefficient tau{4};
};

struct SearchRecord {
  std::int64_t trial = 0;
  SpsExpression instance;
  SpsParams params;
  BoundsReport bounds;
};

struct BestFound {
  bool found = false;
  SearchRecord best;
  /// Every instance whose expansion met the tau-condition, in trial order.
  std::vector<SearchRecord> records;
};

/// Random search for the largest degree among expressions whose expansion
/// satisfies the tau-condition (Kurtz for tau = 4). Ties keep the earliest
/// trial. Report-only.
BestFound search_extremal_kurtz(const ExperimentConfig& cfg, const Limits& limits = {});

}  // namespace lcsparse::oracle
