#include "lcsparse/oracle.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "lcsparse/errors.hpp"

namespace lcsparse::oracle {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = (seed ^ index) + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  if (hi <= lo) return lo;
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t draw = rng();
  while (draw >= limit) draw = rng();
  return lo + static_cast<std::int64_t>(draw % span);
}

std::int64_t brute_max_convex_subset(const PointSet& a, const Coefficient& tau, const Limits& limits) {
  if (static_cast<std::int64_t>(a.size()) > limits.max_brute_points) {
    throw CapExceeded("exhaustive convex-subset search is limited to " + std::to_string(limits.max_brute_points) +
                      " points");
  }
  const auto& pts = a.points();
  const std::uint32_t n = static_cast<std::uint32_t>(pts.size());
  std::int64_t best = 0;
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    const std::int64_t count = __builtin_popcount(mask);
    if (count <= best) continue;
    std::vector<LogPoint> subset;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (mask & (1U << i)) subset.push_back(pts[i]);
    }
    if (is_convexly_independent(PointSet(std::move(subset)), tau, limits)) best = count;
  }
  return best;
}

std::vector<std::vector<Coefficient>> brute_max_convolution(const SpsExpression& e, std::int64_t degree) {
  std::vector<std::vector<Coefficient>> table;
  for (const auto& row : e.products()) {
    if (row.size() > 3) throw CapExceeded("brute max-convolution takes at most 3 factors per row");
    for (const auto& f : row) {
      if (f.term_count() > 4) throw CapExceeded("brute max-convolution takes at most 4 terms per factor");
    }
    std::vector<Coefficient> best(static_cast<std::size_t>(degree) + 1);
    // Odometer over one term index per factor.
    std::vector<std::size_t> pick(row.size(), 0);
    while (true) {
      std::int64_t exponent = 0;
      Coefficient product(1);
      for (std::size_t r = 0; r < row.size(); ++r) {
        exponent += row[r].terms()[pick[r]].first;
        product *= row[r].terms()[pick[r]].second;
      }
      if (exponent <= degree && compare(product, best[static_cast<std::size_t>(exponent)]) > 0) {
        best[static_cast<std::size_t>(exponent)] = product;
      }
      std::size_t r = 0;
      while (r < row.size() && ++pick[r] == row[r].term_count()) pick[r++] = 0;
      if (r == row.size()) break;
    }
    table.push_back(std::move(best));
  }
  return table;
}

Polynomial random_kurtz_polynomial(Rng& rng, std::int64_t d, const Coefficient& tau) {
  if (d < 2) throw PreconditionFailed("random Kurtz polynomials need d >= 2");
  if (compare(tau, Coefficient::power_of_two(60)) > 0) throw PreconditionFailed("tau must not exceed 2^60");
  std::int64_t log_tau = 0;
  while (compare(Coefficient::power_of_two(log_tau), tau) < 0) ++log_tau;
  const std::int64_t gap = log_tau + 1;

  std::vector<Coefficient> coeffs;
  std::int64_t exponent = uniform(rng, -4, 4);
  std::int64_t slope = uniform(rng, 0, d * (gap + 3));
  for (std::int64_t i = 0; i <= d; ++i) {
    coeffs.push_back(Coefficient::power_of_two(exponent));
    exponent += slope;
    slope -= gap + uniform(rng, 0, 3);
  }
  Polynomial p(std::move(coeffs));
  if (!check_tau_logconcave(p, tau).holds) throw FatalInconsistency("generated polynomial misses the tau-condition");
  return p;
}

SparsePoly random_factor(Rng& rng, const SpsShape& shape) {
  const std::int64_t terms = uniform(rng, 1, std::min(shape.max_t, shape.max_exponent + 1));
  std::vector<SparsePoly::Term> out;
  if (uniform(rng, 0, 99) < shape.shaped_percent) {
    const std::int64_t last_start = shape.max_exponent - terms + 1;
    const std::int64_t start = uniform(rng, 0, 2) == 0 ? uniform(rng, 0, last_start) : uniform(rng, 0, std::min<std::int64_t>(1, last_start));
    const std::int64_t curvature = uniform(rng, shape.min_curvature, shape.max_curvature);
    const std::int64_t center = uniform(rng, 0, terms - 1);
    const std::int64_t offset = uniform(rng, -64, 64);
    for (std::int64_t j = 0; j < terms; ++j) {
      const std::int64_t mantissa = 2 * uniform(rng, 0, 3) + 1;
      const std::int64_t pow2 = offset - curvature * (j - center) * (j - center);
      out.emplace_back(start + j, Coefficient(mpq_class(mantissa), mpz_class(static_cast<long>(pow2))));
    }
  } else {
    std::vector<std::int64_t> pool(static_cast<std::size_t>(shape.max_exponent) + 1);
    for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = static_cast<std::int64_t>(i);
    for (std::int64_t j = 0; j < terms; ++j) {
      const auto pick = static_cast<std::size_t>(uniform(rng, j, static_cast<std::int64_t>(pool.size()) - 1));
      std::swap(pool[static_cast<std::size_t>(j)], pool[pick]);
      const std::int64_t mantissa = 2 * uniform(rng, 0, 3) + 1;
      const std::int64_t pow2 = uniform(rng, -3, 3);
      out.emplace_back(pool[static_cast<std::size_t>(j)],
                       Coefficient(mpq_class(mantissa), mpz_class(static_cast<long>(pow2))));
    }
  }
  return SparsePoly(std::move(out));
}

SpsExpression random_sps(Rng& rng, const SpsShape& shape) {
  const std::int64_t k = uniform(rng, 1, shape.max_k);
  std::vector<SpsExpression::Row> rows;
  for (std::int64_t i = 0; i < k; ++i) {
    const std::int64_t m = shape.fixed_m > 0 ? shape.fixed_m : uniform(rng, 1, shape.max_m);
    SpsExpression::Row row;
    for (std::int64_t j = 0; j < m; ++j) row.push_back(random_factor(rng, shape));
    rows.push_back(std::move(row));
  }
  return SpsExpression(std::move(rows));
}

PointSet random_point_set(Rng& rng, const PointShape& shape) {
  const std::int64_t count = uniform(rng, shape.min_points, shape.max_points);
  std::vector<LogPoint> pts;
  while (static_cast<std::int64_t>(pts.size()) < count) {
    LogPoint p;
    p.x = uniform(rng, 0, shape.max_x);
    const std::int64_t num = 2 * uniform(rng, 0, 2) + 1;
    const std::int64_t den = 2 * uniform(rng, 0, 1) + 1;
    p.r = Coefficient(mpq_class(num, den), mpz_class(static_cast<long>(uniform(rng, -shape.max_pow2, shape.max_pow2))));
    p.tau_halves = uniform(rng, 0, shape.max_tau_halves);
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(std::move(p));
  }
  return PointSet(std::move(pts));
}

BestFound search_extremal_kurtz(const ExperimentConfig& cfg, const Limits& limits) {
  BestFound out;
  for (std::int64_t trial = 0; trial < cfg.trials; ++trial) {
    Rng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(trial)));
    SpsExpression e = random_sps(rng, cfg.shape);
    Polynomial f = expand(e, limits);
    if (f.degree() < 1 || !check_tau_logconcave(f, cfg.tau).holds) continue;
    SearchRecord record{trial, e, params(e, limits), bounds_report(e, limits)};
    if (!out.found || record.params.d > out.best.params.d) {
      out.found = true;
      out.best = record;
    }
    out.records.push_back(std::move(record));
  }
  return out;
}

}  // namespace lcsparse::oracle
