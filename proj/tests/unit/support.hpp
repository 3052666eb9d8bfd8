#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <vector>

#include "lcsparse/geometry.hpp"
#include "lcsparse/polynomial.hpp"
#include "lcsparse/sps.hpp"

namespace testing {

using namespace lcsparse;

inline Polynomial poly(std::initializer_list<long> coeffs) {
  std::vector<Coefficient> cs;
  for (long c : coeffs) cs.emplace_back(c);
  return Polynomial(cs);
}

inline SparsePoly sparse(std::initializer_list<std::pair<Exponent, long>> terms) {
  std::vector<SparsePoly::Term> ts;
  for (const auto& [e, c] : terms) ts.emplace_back(e, Coefficient(c));
  return SparsePoly(ts);
}

inline LogPoint pt(std::int64_t x, long r, std::int64_t h = 0) { return LogPoint{x, Coefficient(r), h}; }

inline std::vector<mpq_class> values(const Polynomial& p) {
  std::vector<mpq_class> out;
  for (const auto& c : p.coeffs()) out.push_back(c.to_rational());
  return out;
}

// Schoolbook product over rationals, written independently of the library.
inline std::vector<mpq_class> naive_mul(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<mpq_class> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

inline std::vector<mpq_class> naive_dense(const SparsePoly& f) {
  std::vector<mpq_class> out(static_cast<std::size_t>(f.degree()) + 1, 0);
  for (const auto& [e, c] : f.terms()) out[static_cast<std::size_t>(e)] = c.to_rational();
  return out;
}

inline std::vector<mpq_class> naive_expand(const SpsExpression& e) {
  std::vector<mpq_class> total;
  for (const auto& row : e.products()) {
    std::vector<mpq_class> prod{1};
    for (const auto& f : row) prod = naive_mul(prod, naive_dense(f));
    if (prod.size() > total.size()) total.resize(prod.size(), 0);
    for (std::size_t i = 0; i < prod.size(); ++i) total[i] += prod[i];
  }
  while (!total.empty() && total.back() == 0) total.pop_back();
  return total;
}

inline mpq_class qpow(const mpq_class& base, unsigned long e) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  mpq_class out(num, den);
  out.canonicalize();
  return out;
}

// a_i^2 > tau a_{i-1} a_{i+1} and a_i > 0 for 1 <= i <= d, checked on plain rationals.
inline bool naive_tau_condition(const std::vector<mpq_class>& a, const mpq_class& tau) {
  const std::size_t d = a.size() - 1;
  for (std::size_t i = 1; i <= d; ++i) {
    if (a[i] <= 0) return false;
  }
  for (std::size_t i = 1; i < d; ++i) {
    if (!(a[i] * a[i] > tau * a[i - 1] * a[i + 1])) return false;
  }
  return true;
}

}  // namespace testing
