#include "lcsparse/families.hpp"

#include <map>

#include "lcsparse/errors.hpp"

namespace lcsparse {

FamilyG::FamilyG(int n, mpz_class s) : n_(n), s_(std::move(s)) {
  if (n < 1 || sgn(s_) <= 0) throw PreconditionFailed("g_{n,s} needs n >= 1 and s >= 1");
  if (n > 20) throw ResourceLimit("g_{n,s} is limited to n <= 20");
}

mpz_class FamilyG::exponent(std::int64_t i) const {
  const std::int64_t top = std::int64_t{1} << n_;
  return s_ * mpz_class(static_cast<long>(i)) * mpz_class(static_cast<long>(top - i - 1));
}

std::vector<mpz_class> FamilyG::exponents() const {
  std::vector<mpz_class> out;
  out.reserve(static_cast<std::size_t>(degree()) + 1);
  for (std::int64_t i = 0; i <= degree(); ++i) out.push_back(exponent(i));
  return out;
}

Polynomial FamilyG::materialize(const Limits& limits) const {
  if (degree() > limits.max_dense_degree) throw ResourceLimit("g_{n,s} degree exceeds dense cap");
  std::vector<Coefficient> coeffs;
  coeffs.reserve(static_cast<std::size_t>(degree()) + 1);
  for (std::int64_t i = 0; i <= degree(); ++i) coeffs.push_back(Coefficient::power_of_two(exponent(i)));
  return Polynomial(std::move(coeffs), limits);
}

Polynomial gen_g(int n, const mpz_class& s, const Limits& limits) { return FamilyG(n, s).materialize(limits); }

bool check_exponent_gaps(const std::vector<mpz_class>& e, const mpz_class& s) {
  for (std::size_t i = 1; i + 1 < e.size(); ++i) {
    if (2 * e[i] <= s + e[i - 1] + e[i + 1]) return false;
  }
  return true;
}

bool check_g(int n, const mpz_class& s) {
  if (n < 2) throw PreconditionFailed("check_g needs n >= 2");
  return check_exponent_gaps(FamilyG(n, s).exponents(), s);
}

mpz_class f_family_scale(int n) {
  mpz_class s;
  mpz_ui_pow_ui(s.get_mpz_t(), 2, static_cast<unsigned long>(n + 1));
  return s * n;
}

Polynomial gen_f(int n, const Limits& limits) {
  if (n < 1) throw PreconditionFailed("f_n needs n >= 1");
  if (n > 12) throw ResourceLimit("f_n is limited to n <= 12");
  const mpz_class s = f_family_scale(n);
  FamilyG g(n, s);
  // The exponent 2n 2^n i (2^n - i - 1) is the same as s i (2^n - i - 1).
  const mpz_class two_n = mpz_class(2 * n) * (mpz_class(1) << n);
  for (std::int64_t i = 0; i <= g.degree(); ++i) {
    if (two_n * i * (g.degree() - i) != g.exponent(i)) throw FatalInconsistency("f_n exponent spellings disagree");
  }
  Polynomial f = g.materialize(limits);
  if (f.degree() != g.degree()) throw FatalInconsistency("f_n has the wrong degree");
  if (f.degree() >= 1 && !check_strong(f, limits).holds) throw FatalInconsistency("f_n fails the strong condition");
  return f;
}

// ---------------------------------------------------------------------------

namespace {

std::uint64_t h_target(int n, std::uint64_t i) {
  const std::uint64_t top = std::uint64_t{1} << n;
  return 2 * static_cast<std::uint64_t>(n) * top * i * (top - i - 1);
}

}  // namespace

MultilinearH::MultilinearH(int n) : n_(n) {
  if (n < 1 || n > 8) throw PreconditionFailed("h_n is supported for 1 <= n <= 8");
}

bool MultilinearH::lambda(std::uint64_t alpha, std::uint64_t beta) const {
  if (alpha >> n_ != 0 || beta >> (4 * n_) != 0) return false;
  const std::uint64_t target = h_target(n_, alpha);
  return target < (std::uint64_t{1} << (4 * n_)) && beta == target;
}

MultilinearH::Enumeration MultilinearH::enumerate() const {
  Enumeration out;
  const std::uint64_t limit = std::uint64_t{1} << (4 * n_);
  for (std::uint64_t alpha = 0; alpha < (std::uint64_t{1} << n_); ++alpha) {
    const std::uint64_t target = h_target(n_, alpha);
    if (target >= limit) {
      ++out.guard_rejections;
      continue;
    }
    out.monomials.push_back({alpha, target});
  }
  return out;
}

std::string bitstring(std::uint64_t bits, int width) {
  std::string out(static_cast<std::size_t>(width), '0');
  for (int i = 0; i < width; ++i) {
    if ((bits >> i) & 1U) out[static_cast<std::size_t>(i)] = '1';
  }
  return out;
}

SubstitutionVerdict verify_substitution_identity(int n, const Limits& limits) {
  if (n > 3) throw ResourceLimit("the substitution identity is only evaluated for n <= 3");
  MultilinearH h(n);

  // X_k <- X^(2^k), Y_j <- 2^(2^j); collect the univariate result.
  std::map<std::int64_t, mpz_class> collected;
  for (const auto& mono : h.enumerate().monomials) {
    std::int64_t x_exponent = 0;
    for (int k = 0; k < n; ++k) {
      if ((mono.alpha >> k) & 1U) x_exponent += std::int64_t{1} << k;
    }
    mpz_class value = 1;
    for (int j = 0; j < 4 * n; ++j) {
      if (!((mono.beta >> j) & 1U)) continue;
      mpz_class y;
      mpz_ui_pow_ui(y.get_mpz_t(), 2, 1UL << j);
      value *= y;
    }
    collected[x_exponent] += value;
  }

  Polynomial f = gen_f(n, limits);
  SubstitutionVerdict verdict;
  verdict.coefficients = static_cast<std::int64_t>(collected.size());
  verdict.equal = static_cast<std::int64_t>(collected.size()) == f.degree() + 1;
  for (const auto& [exp, value] : collected) {
    verdict.max_bits = std::max<std::int64_t>(verdict.max_bits, static_cast<std::int64_t>(mpz_sizeinbase(value.get_mpz_t(), 2)));
    if (f[exp].to_rational(limits) != value) verdict.equal = false;
  }
  if (!verdict.equal) throw FatalInconsistency("h_n substitution does not reproduce f_n");
  return verdict;
}

}  // namespace lcsparse
