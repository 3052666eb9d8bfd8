#include <doctest.h>

#include "lcsparse/errors.hpp"
#include "lcsparse/families.hpp"

using namespace lcsparse;

namespace {

std::vector<mpz_class> ints(std::initializer_list<long> xs) {
  std::vector<mpz_class> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("g exponents") {
  CHECK(FamilyG(2, 1).exponents() == ints({0, 2, 2, 0}));
  CHECK(FamilyG(1, 99).exponents() == ints({0, 0}));
  CHECK(FamilyG(3, 2).exponents() == ints({0, 12, 20, 24, 24, 20, 12, 0}));
  CHECK(gen_g(2, 1) == Polynomial({Coefficient(1), Coefficient(4), Coefficient(4), Coefficient(1)}));
  CHECK(gen_g(1, 5) == Polynomial({Coefficient(1), Coefficient(1)}));
  CHECK_THROWS_AS(FamilyG(0, 1), PreconditionFailed);
  CHECK_THROWS_AS(FamilyG(2, 0), PreconditionFailed);
  CHECK_THROWS_AS(FamilyG(21, 1), ResourceLimit);
}

TEST_CASE("g exponents are palindromic") {
  for (int n = 1; n <= 12; ++n) {
    FamilyG g(n, 3);
    for (std::int64_t i = 0; i <= g.degree(); ++i) CHECK(g.exponent(i) == g.exponent(g.degree() - i));
  }
}

TEST_CASE("g condition by exponent arithmetic") {
  CHECK(check_g(2, 1));
  CHECK(check_exponent_gaps(ints({0, 2, 2, 0}), 1));
  for (int n = 2; n <= 10; ++n) {
    CHECK(check_g(n, 1));
    CHECK(check_g(n, 7));
    CHECK(check_g(n, f_family_scale(n)));
  }
  for (int n = 2; n <= 8; ++n) {
    const mpz_class s = f_family_scale(n);
    std::vector<mpz_class> e = FamilyG(n, s).exponents();
    e[1] -= s * (mpz_class(1) << n);
    CHECK_FALSE(check_exponent_gaps(e, s));
  }
  CHECK_THROWS_AS(check_g(1, 1), PreconditionFailed);
}

TEST_CASE("f family") {
  CHECK(f_family_scale(2) == 16);
  CHECK(gen_f(1) == Polynomial({Coefficient(1), Coefficient(1)}));
  const Coefficient two32 = Coefficient::power_of_two(mpz_class(32));
  Polynomial f2 = gen_f(2);
  CHECK(f2 == Polynomial({Coefficient(1), two32, two32, Coefficient(1)}));
  CHECK(check_strong(f2).holds);
  for (int n = 1; n <= 10; ++n) CHECK(gen_f(n).degree() == (std::int64_t{1} << n) - 1);
  CHECK_THROWS_AS(gen_f(13), ResourceLimit);
}

TEST_CASE("multilinear h") {
  MultilinearH h1(1);
  auto e1 = h1.enumerate();
  REQUIRE(e1.monomials.size() == 2);
  CHECK(e1.monomials[0] == HMonomial{0, 0});
  CHECK(e1.monomials[1] == HMonomial{1, 0});
  CHECK(bitstring(e1.monomials[1].beta, 4) == "0000");

  MultilinearH h2(2);
  CHECK(h2.lambda(1, 32));
  CHECK(bitstring(32, 8) == "00000100");
  CHECK(bitstring(1, 2) == "10");
  CHECK_FALSE(h2.lambda(1, 31));
  CHECK_FALSE(h2.lambda(1, 0));
  for (std::uint64_t beta = 0; beta < 256; ++beta) {
    if (beta != 32) CHECK_FALSE(h2.lambda(1, beta));
  }
  CHECK(h2.lambda(0, 0));
  CHECK(h2.lambda(3, 0));

  for (int n = 1; n <= 8; ++n) {
    auto e = MultilinearH(n).enumerate();
    CHECK(e.monomials.size() == (std::size_t{1} << n));
    CHECK(e.guard_rejections == 0);
    for (std::size_t i = 0; i < e.monomials.size(); ++i) CHECK(e.monomials[i].alpha == i);
  }
  CHECK_THROWS(MultilinearH(0));
  CHECK_THROWS(MultilinearH(9));
}

TEST_CASE("substitution identity") {
  for (int n = 1; n <= 3; ++n) {
    SubstitutionVerdict v = verify_substitution_identity(n);
    CHECK(v.equal);
    CHECK(v.coefficients == (std::int64_t{1} << n));
  }
  CHECK_THROWS_AS(verify_substitution_identity(4), ResourceLimit);
}

TEST_CASE("substitution identity against a direct product of powers") {
  for (int n = 1; n <= 3; ++n) {
    Polynomial f = gen_f(n);
    for (const auto& m : MultilinearH(n).enumerate().monomials) {
      // X_k -> X^(2^k) sends the monomial to X^alpha; Y_j -> 2^(2^j)
      mpz_class value = 1;
      for (int j = 0; j < 4 * n; ++j) {
        if ((m.beta >> j) & 1) {
          mpz_class factor;
          mpz_ui_pow_ui(factor.get_mpz_t(), 2, 1ul << j);
          value *= factor;
        }
      }
      CHECK(f[static_cast<std::int64_t>(m.alpha)].to_rational() == mpq_class(value));
    }
  }
}
