#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "lcsparse/polynomial.hpp"

namespace lcsparse {

/// g_{n,s} = sum_{i < 2^n} 2^(s i (2^n - i - 1)) X^i, held by its exponents.
class FamilyG {
 public:
  /// Throws PreconditionFailed unless n >= 1 and s >= 1; ResourceLimit for n > 20.
  FamilyG(int n, mpz_class s);

  int n() const { return n_; }
  const mpz_class& s() const { return s_; }
  std::int64_t degree() const { return (std::int64_t{1} << n_) - 1; }

  /// e(n, i) = s i (2^n - i - 1).
  mpz_class exponent(std::int64_t i) const;
  std::vector<mpz_class> exponents() const;

  /// Dense form with coefficients 2^e(n,i). Respects limits.max_dense_degree.
  Polynomial materialize(const Limits& limits = {}) const;

 private:
  int n_;
  mpz_class s_;
};

Polynomial gen_g(int n, const mpz_class& s, const Limits& limits = {});

/// 2 e_i > s + e_{i-1} + e_{i+1} at every interior index of a
/// power-of-two coefficient sequence.
bool check_exponent_gaps(const std::vector<mpz_class>& exponents, const mpz_class& s);

/// Condition a_i^2 > 2^s a_{i-1} a_{i+1} for g_{n,s} by exponent
/// arithmetic alone. Requires n >= 2.
bool check_g(int n, const mpz_class& s);

/// s = n 2^(n+1).
mpz_class f_family_scale(int n);

/// g_{n, n 2^(n+1)}, verified against the strong condition with constant
/// d^(2d). Requires n <= 12; throws FatalInconsistency if the check fails.
Polynomial gen_f(int n, const Limits& limits = {});

/// One monomial of h_n: X_k^(alpha_k) for k < n and Y_j^(beta_j) for j < 4n.
struct HMonomial {
  std::uint64_t alpha = 0;  // bit k is alpha_k
  std::uint64_t beta = 0;   // bit j is beta_j

  friend bool operator==(const HMonomial&, const HMonomial&) = default;
};

/// The multilinear h_n in 5n variables. Coefficients are the 0/1 predicate
/// lambda; only the 2^n supported monomials are ever enumerated.
class MultilinearH {
 public:
  /// Requires 1 <= n <= 8.
  explicit MultilinearH(int n);

  int n() const { return n_; }
  int x_variables() const { return n_; }
  int y_variables() const { return 4 * n_; }

  /// lambda(n, alpha, beta) = 1 iff sum_j beta_j 2^j = 2n 2^n i (2^n - i - 1)
  /// < 2^(4n) with i = sum_k alpha_k 2^k.
  bool lambda(std::uint64_t alpha, std::uint64_t beta) const;

  struct Enumeration {
    std::vector<HMonomial> monomials;
    /// alpha values whose target exponent failed the < 2^(4n) guard.
    std::int64_t guard_rejections = 0;
  };

  /// Supported monomials in increasing alpha order.
  Enumeration enumerate() const;

 private:
  int n_;
};

/// alpha_0 alpha_1 ... as '0'/'1' characters, lowest index first.
std::string bitstring(std::uint64_t bits, int width);

struct SubstitutionVerdict {
  bool equal = false;
  std::int64_t coefficients = 0;
  /// Bit length of the largest coefficient produced by the substitution.
  std::int64_t max_bits = 0;
};

/// Substitutes X_k <- X^(2^k), Y_j <- 2^(2^j) into h_n with big-integer
/// arithmetic and compares to f_n coefficientwise. Throws ResourceLimit for
/// n > 3 and FatalInconsistency on mismatch.
SubstitutionVerdict verify_substitution_identity(int n, const Limits& limits = {});

}  // namespace lcsparse
