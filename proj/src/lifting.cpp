#include <cmath>

#include "lcsparse/errors.hpp"
#include "lcsparse/sps.hpp"

namespace lcsparse {

namespace {

PointSet lift(const SparsePoly& f) {
  std::vector<LogPoint> pts;
  for (const auto& [exp, c] : f.terms()) pts.push_back({exp, c, 0});
  return PointSet(std::move(pts));
}

PointSet vertical_offsets(std::int64_t count, std::int64_t step) {
  std::vector<LogPoint> pts;
  for (std::int64_t i = 0; i < count; ++i) pts.push_back({0, Coefficient(1), i * step});
  return PointSet(std::move(pts));
}

// Least L >= 0 with tau^L >= target.
std::int64_t least_tau_power(const Coefficient& tau, const Coefficient& target) {
  std::int64_t power = 0;
  Coefficient acc(1);
  while (compare(acc, target) < 0) {
    acc *= tau;
    ++power;
  }
  return power;
}

}  // namespace

LiftingArtifacts build_lifting(const SpsExpression& e, const Coefficient& tau, const Limits& limits) {
  require_valid_tau(tau);
  for (const auto& row : e.products()) {
    if (row.size() != 2) throw ShapeError("lifting needs exactly two factors per product");
  }
  Polynomial f = expand(e, limits);
  if (f.degree() < 1) throw PreconditionFailed("lifting needs an expansion of degree >= 1");
  if (!check_tau_logconcave(f, tau).holds) throw PreconditionFailed("expansion violates the tau-condition");

  LiftingArtifacts a;
  a.tau = tau;
  a.k = static_cast<std::int64_t>(e.rows());
  a.d = f.degree();
  a.c = f.coeffs();
  for (const auto& row : e.products()) {
    a.r = std::max(a.r, static_cast<std::int64_t>(row[0].term_count()));
    a.s = std::max(a.s, static_cast<std::int64_t>(row[1].term_count()));
    a.R_sets.push_back(lift(row[0]));
    a.S_sets.push_back(lift(row[1]));
  }

  // tau^lambda_cap >= (kr)^2 is exactly lambda_cap * epsilon >= log(kr).
  const Coefficient kr(a.k * a.r);
  a.lambda_cap = least_tau_power(tau, kr * kr);
  a.root_cap = static_cast<std::int64_t>(std::sqrt(static_cast<double>(a.lambda_cap)));
  while (a.root_cap * a.root_cap < a.lambda_cap) ++a.root_cap;
  while (a.root_cap > 0 && (a.root_cap - 1) * (a.root_cap - 1) >= a.lambda_cap) --a.root_cap;

  a.Q = vertical_offsets(a.lambda_cap + 1, 1);
  a.Q1 = vertical_offsets(a.root_cap + 1, 1);
  a.Q2 = vertical_offsets(a.root_cap + 1, a.root_cap);

  std::vector<LogPoint> chain;
  for (std::int64_t l = 1; l <= a.d; ++l) {
    Coefficient best;
    std::array<std::size_t, 3> where{0, 0, 0};
    for (std::size_t i = 0; i < e.rows(); ++i) {
      const auto& g = e.products()[i][0].terms();
      const auto& h = e.products()[i][1].terms();
      for (std::size_t j1 = 0; j1 < g.size(); ++j1) {
        for (std::size_t j2 = 0; j2 < h.size(); ++j2) {
          if (g[j1].first + h[j2].first != l) continue;
          Coefficient product = g[j1].second * h[j2].second;
          if (compare(product, best) > 0) {
            best = std::move(product);
            where = {i, j1, j2};
          }
        }
      }
    }
    if (best.is_zero()) throw FatalInconsistency("no product term at exponent " + std::to_string(l));

    // Least lambda with M_l^2 tau^lambda >= c_l^2.
    const Coefficient target = f[l] * f[l];
    Coefficient acc = best * best;
    std::int64_t lambda = 0;
    while (compare(acc, target) < 0) {
      if (lambda >= a.lambda_cap) throw FatalInconsistency("lambda exceeds ceil(log(kr)/epsilon)");
      acc *= tau;
      ++lambda;
    }
    chain.push_back({l, best, lambda});
    a.M.push_back(std::move(best));
    a.lambda.push_back(lambda);
    a.argmax.push_back(where);
  }
  a.chain = PointSet(std::move(chain));
  return a;
}

LiftingVerdict verify_lifting(const LiftingArtifacts& a, const Limits& limits) {
  LiftingVerdict v;
  v.chain_size = static_cast<std::int64_t>(a.chain.size()) == a.d && static_cast<std::int64_t>(a.M.size()) == a.d &&
                 static_cast<std::int64_t>(a.lambda.size()) == a.d;

  PointSet products;
  for (std::size_t i = 0; i < a.R_sets.size() && i < a.S_sets.size(); ++i) {
    products = set_union(products, minkowski_sum(a.R_sets[i], a.S_sets[i]));
  }
  v.chain_in_union = a.chain.subset_of(minkowski_sum(products, a.Q));
  v.chain_convex = is_convexly_independent(a.chain, a.tau, limits);
  v.q_in_q1_q2 = a.Q.subset_of(minkowski_sum(a.Q1, a.Q2));
  v.q_sizes = static_cast<std::int64_t>(a.Q1.size()) == a.root_cap + 1 &&
              static_cast<std::int64_t>(a.Q2.size()) == a.root_cap + 1 &&
              static_cast<std::int64_t>(a.Q.size()) == a.lambda_cap + 1;

  v.lambda_bounds = true;
  v.delta_bounds = v.chain_size && static_cast<std::int64_t>(a.c.size()) == a.d + 1;
  for (std::size_t idx = 0; idx < a.lambda.size(); ++idx) {
    const std::int64_t lambda = a.lambda[idx];
    if (lambda < 0 || lambda > a.lambda_cap) v.lambda_bounds = false;
    if (!v.delta_bounds) continue;
    // 0 <= delta < epsilon  <=>  M^2 tau^(lambda-1) < c^2 <= M^2 tau^lambda
    const Coefficient& cl = a.c[idx + 1];
    Coefficient upper = a.M[idx] * a.M[idx] * a.tau.pow(static_cast<std::uint64_t>(std::max<std::int64_t>(lambda, 0)), limits);
    if (compare(cl * cl, upper) > 0 || compare(upper, cl * cl * a.tau) >= 0) v.delta_bounds = false;
  }
  return v;
}

void require(const LiftingVerdict& verdict) {
  if (!verdict.ok()) throw FatalInconsistency("lifting verification failed");
}

}  // namespace lcsparse
