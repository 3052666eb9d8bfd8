#pragma once

#include <cstdint>

namespace lcsparse {

/// Resource caps shared by all modules. Every operation that can blow up
/// takes one of these by const reference; the defaults are desk-scale.
struct Limits {
  /// Maximum degree of a dense Polynomial.
  std::int64_t max_dense_degree = 1'000'000;
  /// Maximum degree produced by SPS expansion.
  std::int64_t max_expand_degree = 100'000;
  /// Maximum number of term products performed by one expansion.
  std::int64_t max_expand_work = 50'000'000;
  /// Largest d for which d^(2d) is materialized by check_strong.
  std::int64_t max_strong_degree = 5'000;
  /// Largest integer power applied inside the orientation predicate.
  std::int64_t max_predicate_exponent = 1 << 20;
  /// Largest bit length a materialized intermediate may reach.
  std::int64_t max_bits = 64 * 1024 * 1024;
  /// Largest input accepted by max_convex_chain.
  std::int64_t max_chain_points = 400;
  /// Largest input accepted by the exhaustive convex-subset oracle.
  std::int64_t max_brute_points = 12;

  /// Defaults overridden by LCSPARSE_MAX_DEGREE, LCSPARSE_MAX_EXPAND_DEGREE,
  /// LCSPARSE_MAX_STRONG_DEGREE, LCSPARSE_MAX_CHAIN_POINTS and
  /// LCSPARSE_MAX_BITS when set.
  static Limits from_environment();
};

}  // namespace lcsparse
