#include "lcsparse/polynomial.hpp"

#include <algorithm>
#include <map>

#include "lcsparse/errors.hpp"

namespace lcsparse {

namespace {

const Coefficient kZero{};

void check_degree_cap(std::int64_t degree, const Limits& limits) {
  if (degree > limits.max_dense_degree) {
    throw ResourceLimit("dense degree " + std::to_string(degree) + " exceeds cap " +
                        std::to_string(limits.max_dense_degree));
  }
}

}  // namespace

Polynomial::Polynomial(std::vector<Coefficient> coeffs, const Limits& limits) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  check_degree_cap(degree(), limits);
}

Polynomial Polynomial::monomial(Exponent exponent, Coefficient coeff, const Limits& limits) {
  if (exponent < 0) throw PreconditionFailed("negative exponent");
  check_degree_cap(exponent, limits);
  std::vector<Coefficient> coeffs(static_cast<std::size_t>(exponent) + 1);
  coeffs.back() = std::move(coeff);
  return Polynomial(std::move(coeffs), limits);
}

const Coefficient& Polynomial::operator[](std::int64_t i) const {
  if (i < 0 || i >= static_cast<std::int64_t>(coeffs_.size())) return kZero;
  return coeffs_[static_cast<std::size_t>(i)];
}

Polynomial add(const Polynomial& p, const Polynomial& q) {
  std::vector<Coefficient> out(std::max(p.coeffs().size(), q.coeffs().size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = p[static_cast<std::int64_t>(i)] + q[static_cast<std::int64_t>(i)];
  return Polynomial(std::move(out));
}

Polynomial mul(const Polynomial& p, const Polynomial& q, const Limits& limits) {
  if (p.is_zero() || q.is_zero()) return {};
  check_degree_cap(p.degree() + q.degree(), limits);
  std::vector<Coefficient> out(p.coeffs().size() + q.coeffs().size() - 1);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (p.coeffs()[i].is_zero()) continue;
    for (std::size_t j = 0; j < q.coeffs().size(); ++j) {
      if (q.coeffs()[j].is_zero()) continue;
      out[i + j] += p.coeffs()[i] * q.coeffs()[j];
    }
  }
  return Polynomial(std::move(out), limits);
}

mpq_class evaluate(const Polynomial& p, const mpq_class& x, const Limits& limits) {
  mpq_class acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + it->to_rational(limits);
  return acc;
}

SparsePoly::SparsePoly(std::vector<Term> terms) {
  std::map<Exponent, Coefficient> merged;
  for (auto& [e, c] : terms) {
    if (e < 0) throw PreconditionFailed("negative exponent in sparse polynomial");
    merged[e] += c;
  }
  for (auto& [e, c] : merged) {
    if (!c.is_zero()) terms_.emplace_back(e, std::move(c));
  }
}

SparsePoly SparsePoly::one() { return SparsePoly({{0, Coefficient(1)}}); }

SparsePoly SparsePoly::from_dense(const Polynomial& p) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (!p.coeffs()[i].is_zero()) terms.emplace_back(static_cast<Exponent>(i), p.coeffs()[i]);
  }
  return SparsePoly(std::move(terms));
}

Polynomial SparsePoly::to_dense(const Limits& limits) const {
  if (terms_.empty()) return {};
  check_degree_cap(degree(), limits);
  std::vector<Coefficient> coeffs(static_cast<std::size_t>(degree()) + 1);
  for (const auto& [e, c] : terms_) coeffs[static_cast<std::size_t>(e)] = c;
  return Polynomial(std::move(coeffs), limits);
}

SparsePoly mul(const SparsePoly& p, const SparsePoly& q, const Limits& limits) {
  if (static_cast<double>(p.term_count()) * static_cast<double>(q.term_count()) >
      static_cast<double>(limits.max_expand_work)) {
    throw ResourceLimit("sparse product exceeds the work cap");
  }
  std::map<Exponent, Coefficient> acc;
  for (const auto& [ep, cp] : p.terms()) {
    for (const auto& [eq, cq] : q.terms()) acc[ep + eq] += cp * cq;
  }
  std::vector<SparsePoly::Term> terms(acc.begin(), acc.end());
  SparsePoly out(std::move(terms));
  if (out.degree() > limits.max_expand_degree) throw ResourceLimit("sparse product degree exceeds cap");
  return out;
}

mpq_class evaluate(const SparsePoly& p, const mpq_class& x, const Limits& limits) {
  mpq_class acc = 0;
  for (const auto& [e, c] : p.terms()) {
    mpq_class power;
    mpz_pow_ui(mpq_numref(power.get_mpq_t()), x.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(mpq_denref(power.get_mpq_t()), x.get_den_mpz_t(), static_cast<unsigned long>(e));
    power.canonicalize();
    acc += c.to_rational(limits) * power;
  }
  return acc;
}

// ---------------------------------------------------------------------------

NewtonReport check_newton(const Polynomial& p) {
  const std::int64_t d = p.degree();
  if (p.is_zero() || d < 2) throw DegreeTooSmall("Newton's inequalities need degree >= 2");
  NewtonReport report;
  for (std::int64_t i = 1; i < d; ++i) {
    // a_i^2 (d-i) i  vs  (d-i+1)(i+1) a_{i-1} a_{i+1}
    Coefficient lhs = p[i] * p[i] * Coefficient((d - i) * i);
    Coefficient rhs = p[i - 1] * p[i + 1] * Coefficient((d - i + 1) * (i + 1));
    int c = compare(lhs, rhs);
    if (c < 0) {
      report.holds_weak = false;
      report.holds_strict = false;
      report.failures.push_back(i);
    } else if (c == 0) {
      report.holds_strict = false;
      report.equalities.push_back(i);
    }
  }
  return report;
}

ConditionReport check_tau_logconcave(const Polynomial& p, const Coefficient& tau) {
  const std::int64_t d = p.degree();
  if (p.is_zero() || d < 1) throw DegreeTooSmall("log-concavity conditions need degree >= 1");
  if (tau.is_zero()) throw PreconditionFailed("tau must be positive");
  ConditionReport report;
  for (std::int64_t i = 1; i <= d; ++i) {
    bool ok = !p[i].is_zero();
    if (ok && i < d) ok = compare(p[i] * p[i], tau * p[i - 1] * p[i + 1]) > 0;
    if (!ok) {
      report.holds = false;
      report.failures.push_back(i);
    }
  }
  return report;
}

ConditionReport check_kurtz(const Polynomial& p) { return check_tau_logconcave(p, Coefficient(4)); }

mpz_class strong_constant(std::int64_t d, const Limits& limits) {
  if (d > limits.max_strong_degree) {
    throw ResourceLimit("d^(2d) refused for d = " + std::to_string(d) + " (cap " +
                        std::to_string(limits.max_strong_degree) + ")");
  }
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(2 * d));
  return out;
}

ConditionReport check_strong(const Polynomial& p, const Limits& limits) {
  if (p.is_zero() || p.degree() < 1) throw DegreeTooSmall("log-concavity conditions need degree >= 1");
  return check_tau_logconcave(p, Coefficient(strong_constant(p.degree(), limits)));
}

}  // namespace lcsparse
