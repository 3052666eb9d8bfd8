#include <algorithm>

#include "lcsparse/errors.hpp"
#include "lcsparse/sps.hpp"

namespace lcsparse {

std::vector<std::vector<Coefficient>> max_product_table(const SpsExpression& e, std::int64_t degree) {
  const std::size_t width = static_cast<std::size_t>(degree) + 1;
  std::vector<std::vector<Coefficient>> table;
  table.reserve(e.rows());
  for (const auto& row : e.products()) {
    std::vector<Coefficient> cur(width);
    cur[0] = Coefficient(1);
    for (const auto& f : row) {
      std::vector<Coefficient> next(width);
      for (std::size_t l = 0; l < width; ++l) {
        if (cur[l].is_zero()) continue;
        for (const auto& [exp, c] : f.terms()) {
          const std::size_t target = l + static_cast<std::size_t>(exp);
          if (target >= width) break;
          Coefficient candidate = cur[l] * c;
          if (compare(candidate, next[target]) > 0) next[target] = std::move(candidate);
        }
      }
      cur = std::move(next);
    }
    table.push_back(std::move(cur));
  }
  return table;
}

WitnessReport sparse_factor_witness(const SpsExpression& e, const Limits& limits) {
  Polynomial a = expand(e, limits);
  WitnessReport report;
  report.params = params(e, limits);
  const auto& [k, m, t, d] = report.params;
  if (d < 1) throw PreconditionFailed("the expansion must have degree >= 1");

  // Hypothesis: a_l > 0 on 1..d and a_i^2 > k^2 d^(2m) a_{i-1} a_{i+1}.
  mpz_class d_pow_m;
  mpz_ui_pow_ui(d_pow_m.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(m));
  const Coefficient spread = Coefficient(mpz_class(k)) * Coefficient(d_pow_m);
  if (!check_tau_logconcave(a, spread * spread).holds) {
    throw PreconditionFailed("expansion violates a_i^2 > k^2 d^(2m) a_{i-1} a_{i+1}");
  }

  report.row_max = max_product_table(e, d);
  report.global_max.assign(static_cast<std::size_t>(d) + 1, Coefficient());
  for (const auto& row : report.row_max) {
    for (std::size_t l = 0; l < row.size(); ++l) {
      if (compare(row[l], report.global_max[l]) > 0) report.global_max[l] = row[l];
    }
  }

  // C_l <= a_l <= k d^m C_l
  for (std::int64_t l = 0; l <= d; ++l) {
    const Coefficient& cl = report.global_max[static_cast<std::size_t>(l)];
    if (compare(cl, a[l]) > 0 || compare(a[l], spread * cl) > 0) {
      throw FatalInconsistency("sandwich C_l <= a_l <= k d^m C_l fails at l = " + std::to_string(l));
    }
  }

  // Row attaining the maximum most often; ties go to the smallest index.
  std::vector<std::int64_t> best_L;
  for (std::size_t i = 0; i < report.row_max.size(); ++i) {
    std::vector<std::int64_t> L;
    for (std::int64_t l = 1; l <= d; ++l) {
      if (report.row_max[i][static_cast<std::size_t>(l)] == report.global_max[static_cast<std::size_t>(l)]) L.push_back(l);
    }
    if (L.size() > best_L.size() || i == 0) {
      best_L = std::move(L);
      report.i0 = i;
    }
  }
  report.L = std::move(best_L);
  const std::int64_t size_L = static_cast<std::int64_t>(report.L.size());
  if (size_L * k < d) throw FatalInconsistency("no row attains the maximum on d/k exponents");

  // Points (l, C_{i0,l}) for l in L lie on the upper envelope of the
  // Minkowski sum of the lifted factors of row i0.
  const auto& row = e.products()[report.i0];
  PointSet sum({LogPoint{0, Coefficient(1), 0}});
  std::int64_t lifted_points = 0;
  for (const auto& f : row) {
    std::vector<LogPoint> lifted;
    for (const auto& [exp, c] : f.terms()) lifted.push_back({exp, c, 0});
    lifted_points += static_cast<std::int64_t>(lifted.size());
    if (static_cast<double>(sum.size()) * static_cast<double>(lifted.size()) > static_cast<double>(limits.max_expand_work)) {
      throw ResourceLimit("Minkowski sum of lifted factors exceeds the work cap");
    }
    sum = minkowski_sum(sum, PointSet(std::move(lifted)));
  }
  const Coefficient unit_tau(2);  // no tau_halves offsets here; any tau > 1 works
  PointSet envelope(upper_envelope(sum, unit_tau, limits));
  for (std::int64_t l : report.L) {
    LogPoint p{l, report.row_max[report.i0][static_cast<std::size_t>(l)], 0};
    if (!envelope.contains(p)) {
      throw FatalInconsistency("maximal point at l = " + std::to_string(l) + " is not an upper-envelope vertex");
    }
  }
  report.hull_vertices = static_cast<std::int64_t>(convex_hull_vertices(sum, unit_tau, limits).size());
  if (report.hull_vertices > lifted_points || size_L > report.hull_vertices) {
    throw FatalInconsistency("hull vertex count outside [|L|, sum of factor sizes]");
  }

  report.j0 = 0;
  for (std::size_t j = 1; j < row.size(); ++j) {
    if (row[j].term_count() > row[report.j0].term_count()) report.j0 = j;
  }
  report.factor_terms = static_cast<std::int64_t>(row[report.j0].term_count());
  report.threshold = mpq_class(mpz_class(d), mpz_class(k * m));
  report.threshold.canonicalize();
  if (report.factor_terms * static_cast<std::int64_t>(row.size()) < size_L || report.factor_terms * k * m < d) {
    throw FatalInconsistency("extracted factor has fewer than d/(km) terms");
  }
  return report;
}

}  // namespace lcsparse
