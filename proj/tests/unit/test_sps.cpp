#include <doctest.h>

#include <random>

#include "lcsparse/errors.hpp"
#include "lcsparse/families.hpp"
#include "lcsparse/oracle.hpp"
#include "lcsparse/sps.hpp"
#include "support.hpp"

using namespace lcsparse;
using testing::poly;
using testing::pt;
using testing::sparse;

namespace {

SpsExpression hand_instance() { return SpsExpression({{sparse({{0, 1}, {1, 1}}), sparse({{0, 1}, {1, 4}})}}); }

SparsePoly dyadic_factor(const std::vector<mpz_class>& exponents) {
  std::vector<SparsePoly::Term> terms;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    terms.emplace_back(static_cast<Exponent>(i), Coefficient::power_of_two(exponents[i]));
  }
  return SparsePoly(terms);
}

}  // namespace

TEST_CASE("expression shape errors") {
  CHECK_THROWS_AS(SpsExpression(std::vector<SpsExpression::Row>{}), ShapeError);
  CHECK_THROWS_AS(SpsExpression(std::vector<SpsExpression::Row>{SpsExpression::Row{}}), ShapeError);
  CHECK_THROWS_AS(SpsExpression({{SparsePoly()}}), ShapeError);
}

TEST_CASE("expand") {
  CHECK(expand(hand_instance()) == poly({1, 5, 4}));
  CHECK(expand(SpsExpression({{sparse({{0, 1}})}, {sparse({{1, 1}})}})) == poly({1, 1}));
  CHECK(expand(SpsExpression({{SparsePoly::from_dense(gen_g(2, 1))}})) == poly({1, 4, 4, 1}));
  Limits tight;
  tight.max_expand_degree = 1;
  CHECK_THROWS_AS(expand(hand_instance(), tight), ResourceLimit);
}

TEST_CASE("expand agrees with a schoolbook expansion and with evaluation") {
  std::mt19937_64 rng(41);
  oracle::SpsShape shape;
  shape.shaped_percent = 30;
  for (int trial = 0; trial < 200; ++trial) {
    SpsExpression e = oracle::random_sps(rng, shape);
    Polynomial a = expand(e);
    CHECK(testing::values(a) == testing::naive_expand(e));
    for (int point = 0; point < 20; ++point) {
      mpq_class x(static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 4 + 1));
      x.canonicalize();
      mpq_class direct = 0;
      for (const auto& row : e.products()) {
        mpq_class prod = 1;
        for (const auto& f : row) prod *= evaluate(f, x);
        direct += prod;
      }
      CHECK(evaluate(a, x) == direct);
    }
  }
}

TEST_CASE("params") {
  CHECK(params(hand_instance()) == SpsParams{1, 2, 2, 2});
  SpsExpression monomials({{sparse({{3, 1}})}, {sparse({{8, 2}})}, {sparse({{5, 1}})}});
  CHECK(params(monomials) == SpsParams{3, 1, 1, 8});
}

TEST_CASE("term count of an expansion stays under k t^m") {
  std::mt19937_64 rng(43);
  oracle::SpsShape shape;
  for (int trial = 0; trial < 1000; ++trial) {
    SpsExpression e = oracle::random_sps(rng, shape);
    SpsParams p = params(e);
    mpz_class trivial = p.k;
    for (std::int64_t i = 0; i < p.m; ++i) trivial *= p.t;
    std::int64_t terms = 0;
    bool full = true;
    Polynomial a = expand(e);
    for (std::int64_t l = 0; l <= a.degree(); ++l) {
      if (!a[l].is_zero()) {
        ++terms;
      } else if (l > 0) {
        full = false;
      }
    }
    CHECK(mpz_class(terms) <= trivial);
    if (full) CHECK(mpz_class(p.d) <= trivial);
  }
}

TEST_CASE("degree bound under the strong condition") {
  SpsExpression single({{SparsePoly::from_dense(gen_f(2))}});
  DegreeVerdict v = verify_theorem2(single);
  CHECK(v.applicable);
  CHECK(v.bound_holds);
  CHECK(v.params == SpsParams{1, 1, 4, 3});

  DegreeVerdict hand = verify_theorem2(hand_instance());
  CHECK_FALSE(hand.applicable);
  CHECK(hand.bound_holds);
}

TEST_CASE("degree bound on random instances never raises") {
  std::mt19937_64 rng(47);
  oracle::SpsShape shape;
  int applicable = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    DegreeVerdict v;
    CHECK_NOTHROW(v = verify_theorem2(oracle::random_sps(rng, shape)));
    if (v.applicable) {
      ++applicable;
      CHECK(v.params.d <= v.params.k * v.params.m * v.params.t);
    }
  }
  CHECK(applicable > 0);
}

TEST_CASE("max-product table") {
  auto table = max_product_table(hand_instance(), 2);
  REQUIRE(table.size() == 1);
  CHECK(table[0] == std::vector<Coefficient>{1, 4, 4});

  SpsExpression single({{sparse({{0, 3}, {2, 5}})}});
  CHECK(max_product_table(single, 3)[0] == std::vector<Coefficient>{3, 0, 5, 0});
}

TEST_CASE("sparse-factor witness, single factor") {
  Polynomial f2 = gen_f(2);
  WitnessReport w = sparse_factor_witness(SpsExpression({{SparsePoly::from_dense(f2)}}));
  CHECK(w.i0 == 0);
  CHECK(w.j0 == 0);
  CHECK(w.L == std::vector<std::int64_t>{1, 2, 3});
  CHECK(w.factor_terms == 4);
  CHECK(w.threshold == 3);
  CHECK(w.global_max == f2.coeffs());
}

TEST_CASE("sparse-factor witness, padded product") {
  std::vector<mpz_class> exponents;
  for (long i = 0; i <= 7; ++i) exponents.emplace_back(64 * i * (7 - i));
  // 2 e_i - e_{i-1} - e_{i+1} = 128 bits beats 7^4 at every interior index
  for (std::size_t i = 1; i + 1 < exponents.size(); ++i) {
    CHECK(2 * exponents[i] - exponents[i - 1] - exponents[i + 1] == 128);
  }
  SpsExpression e({{dyadic_factor(exponents), SparsePoly::one()}});
  WitnessReport w = sparse_factor_witness(e);
  CHECK(w.params == SpsParams{1, 2, 8, 7});
  CHECK(w.j0 == 0);
  CHECK(w.factor_terms == 8);
  CHECK(w.threshold == mpq_class(7, 2));
  CHECK(w.L.size() == 7);
}

TEST_CASE("sparse-factor witness rejects instances outside the hypothesis") {
  CHECK_THROWS_AS(sparse_factor_witness(hand_instance()), PreconditionFailed);
}

TEST_CASE("witness tables agree with the brute-force oracle") {
  std::mt19937_64 rng(53);
  oracle::SpsShape shape;
  shape.shaped_percent = 100;
  shape.min_curvature = 96;
  shape.max_curvature = 200;
  int checked = 0;
  for (int trial = 0; trial < 20000 && checked < 60; ++trial) {
    SpsExpression e = oracle::random_sps(rng, shape);
    WitnessReport w;
    try {
      w = sparse_factor_witness(e);
    } catch (const PreconditionFailed&) {
      continue;
    }
    ++checked;
    CHECK(w.row_max == oracle::brute_max_convolution(e, w.params.d));
    CHECK(w.factor_terms * w.params.k * w.params.m >= w.params.d);
    CHECK(static_cast<std::int64_t>(w.L.size()) * static_cast<std::int64_t>(w.params.k) >= w.params.d);
  }
  CHECK(checked == 60);
}

TEST_CASE("lifting of the hand instance") {
  LiftingArtifacts a = build_lifting(hand_instance(), Coefficient(4));
  CHECK(a.k == 1);
  CHECK(a.r == 2);
  CHECK(a.s == 2);
  CHECK(a.d == 2);
  CHECK(a.c == std::vector<Coefficient>{1, 5, 4});
  CHECK(a.M == std::vector<Coefficient>{4, 4});
  CHECK(a.lambda == std::vector<std::int64_t>{1, 0});
  CHECK(a.lambda_cap == 1);
  CHECK(a.root_cap == 1);
  CHECK(a.chain == PointSet{pt(1, 4, 1), pt(2, 4, 0)});
  CHECK(a.Q == PointSet{pt(0, 1, 0), pt(0, 1, 1)});
  CHECK(a.R_sets[0] == PointSet{pt(0, 1), pt(1, 1)});
  CHECK(a.S_sets[0] == PointSet{pt(0, 1), pt(1, 4)});
  // (1, log 8) = (0, log 1) + (1, log 4) + (0, epsilon)
  CHECK(pt(0, 1) + pt(1, 4) + pt(0, 1, 1) == pt(1, 4, 1));
  LiftingVerdict v = verify_lifting(a);
  CHECK(v.ok());
  CHECK_NOTHROW(require(v));
}

TEST_CASE("lifting preconditions") {
  SpsExpression three({{sparse({{0, 1}, {1, 1}}), sparse({{0, 1}}), sparse({{0, 1}, {1, 4}})}});
  CHECK_THROWS_AS(build_lifting(three, Coefficient(4)), ShapeError);
  SpsExpression square({{sparse({{0, 1}, {1, 1}}), sparse({{0, 1}, {1, 1}})}});
  CHECK_THROWS_AS(build_lifting(square, Coefficient(4)), PreconditionFailed);
  CHECK_THROWS_AS(build_lifting(hand_instance(), Coefficient(1)), PreconditionFailed);
  LiftingVerdict broken;
  CHECK_FALSE(broken.ok());
  CHECK_THROWS_AS(require(broken), FatalInconsistency);
}

TEST_CASE("lifting on random two-factor instances") {
  std::mt19937_64 rng(59);
  oracle::SpsShape shape;
  shape.fixed_m = 2;
  shape.shaped_percent = 100;
  int checked = 0;
  for (int trial = 0; trial < 20000 && checked < 100; ++trial) {
    SpsExpression e = oracle::random_sps(rng, shape);
    Polynomial f = expand(e);
    if (f.degree() < 1 || !testing::naive_tau_condition(testing::values(f), 4)) continue;
    ++checked;
    LiftingArtifacts a = build_lifting(e, Coefficient(4));
    CHECK(verify_lifting(a).ok());
    for (std::int64_t lam : a.lambda) {
      CHECK(lam >= 0);
      CHECK(lam <= a.lambda_cap);
    }
    CHECK(static_cast<std::int64_t>(a.chain.size()) == a.d);
    if (a.d <= 2) CHECK(is_convexly_independent(a.chain, Coefficient(4)));
  }
  CHECK(checked == 100);
}

TEST_CASE("lifting with a general tau") {
  SpsExpression e({{sparse({{0, 1}, {1, 3}}), sparse({{0, 1}, {1, 7}})}});
  Polynomial f = expand(e);  // 1 + 10X + 21X^2, 100 > 3 * 21
  REQUIRE(check_tau_logconcave(f, Coefficient(3)).holds);
  LiftingArtifacts a = build_lifting(e, Coefficient(3));
  CHECK(verify_lifting(a).ok());
}

TEST_CASE("split into two factors") {
  SpsExpression two = hand_instance();
  CHECK(split_products(two) == two);

  SpsExpression three({{sparse({{0, 1}, {1, 2}}), sparse({{0, 1}, {2, 3}}), sparse({{0, 5}, {4, 1}})}});
  SpsExpression split = split_products(three);
  REQUIRE(split.products()[0].size() == 2);
  CHECK(split.products()[0][0].term_count() <= 2);
  CHECK(split.products()[0][1].term_count() <= 4);
  CHECK(expand(split) == expand(three));

  SpsExpression single({{sparse({{0, 1}, {3, 2}})}});
  SpsExpression padded = split_products(single);
  CHECK(padded.products()[0][0] == SparsePoly::one());
  CHECK(padded.products()[0][1] == single.products()[0][0]);

  std::mt19937_64 rng(61);
  oracle::SpsShape shape;
  for (int trial = 0; trial < 200; ++trial) {
    SpsExpression e = oracle::random_sps(rng, shape);
    SpsExpression s = split_products(e);
    CHECK(expand(s) == expand(e));
    for (const auto& row : s.products()) CHECK(row.size() == 2);
  }
}

TEST_CASE("bounds report") {
  BoundsReport hand = bounds_report(hand_instance());
  CHECK(hand.trivial == 4);
  CHECK(hand.thm2 == 4);
  CHECK(hand.d == 2);
  BoundsReport g = bounds_report(SpsExpression({{SparsePoly::from_dense(gen_g(2, 1))}}));
  CHECK(g.trivial == 4);
  CHECK(g.d == 3);

  auto shape_of = [](std::int64_t k, std::int64_t m, std::int64_t t) {
    std::vector<SpsExpression::Row> rows;
    std::vector<SparsePoly::Term> terms;
    for (std::int64_t j = 0; j < t; ++j) terms.emplace_back(j, Coefficient(1));
    for (std::int64_t i = 0; i < k; ++i) rows.emplace_back(static_cast<std::size_t>(m), SparsePoly(terms));
    return bounds_report(SpsExpression(rows)).thm1_shape;
  };
  CHECK(shape_of(2, 2, 3) < shape_of(3, 2, 3));
  CHECK(shape_of(2, 2, 3) < shape_of(2, 3, 3));
  CHECK(shape_of(2, 2, 3) < shape_of(2, 2, 4));
}
