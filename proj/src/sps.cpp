#include "lcsparse/sps.hpp"

#include <algorithm>
#include <cmath>

#include "lcsparse/errors.hpp"

namespace lcsparse {

SpsExpression::SpsExpression(std::vector<Row> products) : products_(std::move(products)) {
  if (products_.empty()) throw ShapeError("an SPS expression needs at least one product");
  for (const auto& row : products_) {
    if (row.empty()) throw ShapeError("every product needs at least one factor");
    for (const auto& f : row) {
      if (f.is_zero()) throw ShapeError("factors must be nonzero");
    }
  }
}

namespace {

SparsePoly row_product(const SpsExpression::Row& row, const Limits& limits) {
  SparsePoly acc = SparsePoly::one();
  for (const auto& f : row) acc = mul(acc, f, limits);
  return acc;
}

}  // namespace

Polynomial expand(const SpsExpression& e, const Limits& limits) {
  std::vector<Coefficient> dense;
  for (const auto& row : e.products()) {
    SparsePoly prod = row_product(row, limits);
    if (prod.degree() > limits.max_expand_degree) throw ResourceLimit("expansion degree exceeds cap");
    if (dense.size() <= static_cast<std::size_t>(prod.degree())) dense.resize(static_cast<std::size_t>(prod.degree()) + 1);
    for (const auto& [exp, c] : prod.terms()) dense[static_cast<std::size_t>(exp)] += c;
  }
  return Polynomial(std::move(dense), limits);
}

SpsParams params(const SpsExpression& e, const Limits& limits) {
  SpsParams p;
  p.k = static_cast<std::int64_t>(e.rows());
  for (const auto& row : e.products()) {
    p.m = std::max(p.m, static_cast<std::int64_t>(row.size()));
    for (const auto& f : row) p.t = std::max(p.t, static_cast<std::int64_t>(f.term_count()));
  }
  p.d = expand(e, limits).degree();
  return p;
}

DegreeVerdict verify_theorem2(const SpsExpression& e, const Limits& limits) {
  DegreeVerdict verdict;
  Polynomial f = expand(e, limits);
  verdict.params = params(e, limits);
  const auto& [k, m, t, d] = verdict.params;
  verdict.bound_holds = d <= k * m * t;
  if (d < 1) return verdict;
  verdict.applicable = check_strong(f, limits).holds;
  if (!verdict.applicable) return verdict;

  if (d > k && d > m) {
    // d^(2d) > k^2 d^(2(d-1)) >= k^2 d^(2m), so the sparse-factor
    // hypothesis follows from the strong condition.
    mpz_class lhs = strong_constant(d, limits);
    mpz_class rhs;
    mpz_ui_pow_ui(rhs.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(2 * m));
    rhs *= k * k;
    if (lhs <= rhs) throw FatalInconsistency("d^(2d) <= k^2 d^(2m) although d > k and d > m");
    WitnessReport w = sparse_factor_witness(e, limits);
    verdict.used_witness = true;
    if (w.factor_terms > t || w.factor_terms * k * m < d) {
      throw FatalInconsistency("sparse-factor witness inconsistent with the parameters");
    }
  }
  if (!verdict.bound_holds) {
    throw FatalInconsistency("degree bound d <= kmt violated: d = " + std::to_string(d) + ", kmt = " +
                             std::to_string(k * m * t));
  }
  return verdict;
}

SpsExpression split_products(const SpsExpression& e, const Limits& limits) {
  std::vector<SpsExpression::Row> rows;
  rows.reserve(e.rows());
  for (const auto& row : e.products()) {
    const std::size_t half = row.size() / 2;
    SpsExpression::Row first(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(half));
    SpsExpression::Row second(row.begin() + static_cast<std::ptrdiff_t>(half), row.end());
    rows.push_back({row_product(first, limits), row_product(second, limits)});
  }
  return SpsExpression(std::move(rows));
}

BoundsReport bounds_report(const SpsExpression& e, const Limits& limits) {
  BoundsReport report;
  report.params = params(e, limits);
  const auto& [k, m, t, d] = report.params;
  mpz_ui_pow_ui(report.trivial.get_mpz_t(), static_cast<unsigned long>(t), static_cast<unsigned long>(m));
  report.trivial *= k;
  report.thm2 = k * m * t;
  report.d = d;
  const double kd = static_cast<double>(k);
  const double md = static_cast<double>(m);
  const double td = static_cast<double>(t);
  report.thm1_shape =
      kd * std::pow(md, 2.0 / 3.0) * std::pow(td, 2.0 * md / 3.0) * std::pow(std::log(kd * td), 2.0 / 3.0);
  return report;
}

}  // namespace lcsparse
