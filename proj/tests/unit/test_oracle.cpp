#include <doctest.h>

#include "lcsparse/errors.hpp"
#include "lcsparse/oracle.hpp"
#include "support.hpp"

using namespace lcsparse;
using testing::pt;
using testing::sparse;

TEST_CASE("seeds and uniform draws") {
  CHECK(oracle::derive_seed(1, 2) == oracle::derive_seed(1, 2));
  CHECK(oracle::derive_seed(1, 2) != oracle::derive_seed(1, 3));
  oracle::Rng rng(5);
  bool low = false, high = false;
  for (int i = 0; i < 2000; ++i) {
    std::int64_t v = oracle::uniform(rng, -3, 4);
    CHECK(v >= -3);
    CHECK(v <= 4);
    low = low || v == -3;
    high = high || v == 4;
  }
  CHECK(low);
  CHECK(high);
  CHECK(oracle::uniform(rng, 7, 7) == 7);
}

TEST_CASE("brute-force convex subsets") {
  const Coefficient tau(4);
  CHECK(oracle::brute_max_convex_subset(PointSet{pt(0, 1), pt(1, 2), pt(2, 4), pt(3, 8), pt(4, 16)}, tau) == 2);
  CHECK(oracle::brute_max_convex_subset(PointSet{pt(0, 1), pt(0, 2), pt(1, 1), pt(1, 2)}, tau) == 4);
  std::vector<LogPoint> many;
  for (int i = 0; i < 13; ++i) many.push_back(pt(i, 1));
  CHECK_THROWS_AS(oracle::brute_max_convex_subset(PointSet(many), tau), CapExceeded);
}

TEST_CASE("brute-force max convolution") {
  SpsExpression hand({{sparse({{0, 1}, {1, 1}}), sparse({{0, 1}, {1, 4}})}});
  CHECK(oracle::brute_max_convolution(hand, 2)[0] == std::vector<Coefficient>{1, 4, 4});
  SpsExpression single({{sparse({{0, 2}, {3, 7}})}});
  CHECK(oracle::brute_max_convolution(single, 3)[0] == std::vector<Coefficient>{2, 0, 0, 7});
  SpsExpression wide({{sparse({{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}})}});
  CHECK_THROWS_AS(oracle::brute_max_convolution(wide, 4), CapExceeded);
}

TEST_CASE("random Kurtz polynomials") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    oracle::Rng rng(seed), again(seed);
    const std::int64_t d = 2 + static_cast<std::int64_t>(seed % 11);
    Polynomial p = oracle::random_kurtz_polynomial(rng, d, Coefficient(4));
    CHECK(p.degree() == d);
    CHECK(testing::naive_tau_condition(testing::values(p), 4));
    CHECK(sturm_distinct_real_roots(p) == d);
    CHECK(oracle::random_kurtz_polynomial(again, d, Coefficient(4)) == p);
  }
  oracle::Rng rng(1);
  Polynomial big_tau = oracle::random_kurtz_polynomial(rng, 6, Coefficient(1000));
  CHECK(testing::naive_tau_condition(testing::values(big_tau), 1000));
}

TEST_CASE("random generators respect their shapes") {
  oracle::Rng rng(3);
  oracle::SpsShape shape;
  shape.fixed_m = 2;
  for (int i = 0; i < 300; ++i) {
    SpsExpression e = oracle::random_sps(rng, shape);
    SpsParams p = params(e);
    CHECK(p.k >= 1);
    CHECK(p.k <= shape.max_k);
    CHECK(p.m == 2);
    CHECK(p.t <= shape.max_t);
    for (const auto& row : e.products()) {
      for (const auto& f : row) CHECK(f.degree() <= shape.max_exponent);
    }
  }
  oracle::PointShape ps;
  ps.min_points = 4;
  ps.max_points = 6;
  for (int i = 0; i < 100; ++i) {
    PointSet a = oracle::random_point_set(rng, ps);
    CHECK(a.size() >= 1);
    CHECK(a.size() <= 6);
  }
}

TEST_CASE("extremal search") {
  oracle::ExperimentConfig cfg;
  cfg.seed = 99;
  cfg.trials = 400;
  cfg.shape.max_k = 1;
  cfg.shape.max_m = 1;
  cfg.shape.max_t = 4;
  oracle::BestFound found = oracle::search_extremal_kurtz(cfg);
  REQUIRE(found.found);
  CHECK((found.best.params.d == 3 || found.best.params.d == 4));
  for (const auto& r : found.records) {
    CHECK(r.params.d <= r.params.t);
    CHECK(check_kurtz(expand(r.instance)).holds);
  }

  oracle::BestFound again = oracle::search_extremal_kurtz(cfg);
  CHECK(again.best.trial == found.best.trial);
  CHECK(again.best.instance == found.best.instance);
  CHECK(again.records.size() == found.records.size());

  oracle::ExperimentConfig wide;
  wide.seed = 5;
  wide.trials = 500;
  for (const auto& r : oracle::search_extremal_kurtz(wide).records) {
    CHECK(mpz_class(r.params.d) <= r.bounds.trivial);
  }
}
