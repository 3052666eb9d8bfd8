#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <istream>
#include <string>
#include <utility>
#include <vector>

#include "lcsparse/coefficient.hpp"
#include "lcsparse/limits.hpp"

namespace lcsparse {

using Exponent = std::int64_t;

/// Dense polynomial with nonnegative exact coefficients. The zero polynomial
/// has no stored coefficients and reports degree 0.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Coefficient> coeffs, const Limits& limits = {});

  static Polynomial monomial(Exponent exponent, Coefficient coeff, const Limits& limits = {});

  const std::vector<Coefficient>& coeffs() const { return coeffs_; }
  std::int64_t degree() const { return coeffs_.empty() ? 0 : static_cast<std::int64_t>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of X^i, zero outside the stored range.
  const Coefficient& operator[](std::int64_t i) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Coefficient> coeffs_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q, const Limits& limits = {});

/// Horner evaluation at a rational point.
mpq_class evaluate(const Polynomial& p, const mpq_class& x, const Limits& limits = {});

/// Sparse polynomial; terms strictly increasing in exponent, every
/// coefficient strictly positive.
class SparsePoly {
 public:
  using Term = std::pair<Exponent, Coefficient>;

  SparsePoly() = default;
  /// Sorts the terms, merges equal exponents and drops zeros. Negative
  /// exponents are rejected.
  explicit SparsePoly(std::vector<Term> terms);

  static SparsePoly one();
  static SparsePoly from_dense(const Polynomial& p);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Exponent degree() const { return terms_.empty() ? 0 : terms_.back().first; }

  Polynomial to_dense(const Limits& limits = {}) const;

  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

 private:
  std::vector<Term> terms_;
};

SparsePoly mul(const SparsePoly& p, const SparsePoly& q, const Limits& limits = {});
mpq_class evaluate(const SparsePoly& p, const mpq_class& x, const Limits& limits = {});

// ---------------------------------------------------------------------------
// log-concavity conditions

struct NewtonReport {
  bool holds_weak = true;
  bool holds_strict = true;
  /// Interior indices where the weak inequality fails.
  std::vector<std::int64_t> failures;
  /// Interior indices where the inequality is tight.
  std::vector<std::int64_t> equalities;
};

struct ConditionReport {
  bool holds = true;
  /// Indices i whose check failed: either a_i = 0 for 1 <= i <= d or the
  /// interior inequality at i.
  std::vector<std::int64_t> failures;
};

/// a_i^2 >= ((d-i+1)/(d-i)) ((i+1)/i) a_{i-1} a_{i+1} for 0 < i < d.
/// Throws DegreeTooSmall for d < 2.
NewtonReport check_newton(const Polynomial& p);

/// a_i > 0 for 1 <= i <= d and a_i^2 > tau a_{i-1} a_{i+1} for 0 < i < d.
/// a_0 may be zero. Throws DegreeTooSmall for d < 1.
ConditionReport check_tau_logconcave(const Polynomial& p, const Coefficient& tau);

/// Same as check_tau_logconcave(p, 4).
ConditionReport check_kurtz(const Polynomial& p);

/// check_tau_logconcave with tau = d^(2d). Throws ResourceLimit when d
/// exceeds limits.max_strong_degree.
ConditionReport check_strong(const Polynomial& p, const Limits& limits = {});

/// d^(2d) as an exact integer.
mpz_class strong_constant(std::int64_t d, const Limits& limits = {});

// ---------------------------------------------------------------------------
// real roots

/// Signed dense polynomial used by root counting: coefficient i multiplies X^i.
using RationalPoly = std::vector<mpq_class>;

/// Number of distinct real roots, by a Sturm sequence on the square-free part.
/// Throws ZeroPolynomial for the zero polynomial.
std::int64_t sturm_distinct_real_roots(const RationalPoly& p);
std::int64_t sturm_distinct_real_roots(const Polynomial& p, const Limits& limits = {});

// ---------------------------------------------------------------------------
// text format: one "<exponent> <coefficient>" per line, '#' starts a comment

SparsePoly parse_sparse_text(std::istream& in);
Polynomial parse_polynomial_text(std::istream& in, const Limits& limits = {});
/// Like parse_polynomial_text but admits negative rational coefficients.
RationalPoly parse_signed_polynomial_text(std::istream& in);
std::string to_text(const Polynomial& p);
std::string to_text(const SparsePoly& p);

}  // namespace lcsparse
