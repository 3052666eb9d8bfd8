#include "lcsparse/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include "lcsparse/errors.hpp"
#include "lcsparse/families.hpp"
#include "lcsparse/geometry.hpp"
#include "lcsparse/oracle.hpp"
#include "lcsparse/polynomial.hpp"
#include "lcsparse/sps.hpp"

namespace lcsparse::acceptance {

namespace {

using oracle::Rng;
using oracle::uniform;

struct Outcome {
  bool passed = false;
  std::string detail;
};

const Coefficient kKurtzTau(4);

// 1. Degree bound d <= kmt on every strongly log-concave expansion.
Outcome theorem2_suite(std::uint64_t seed) {
  oracle::SpsShape shape;  // k, m <= 3, t <= 4, exponents <= 8
  std::int64_t applicable = 0;
  std::int64_t witness_route = 0;
  std::int64_t violations = 0;
  std::int64_t fatal = 0;
  const std::int64_t instances = 10'000;
  for (std::int64_t trial = 0; trial < instances; ++trial) {
    Rng rng(oracle::derive_seed(seed, static_cast<std::uint64_t>(trial)));
    SpsExpression e = oracle::random_sps(rng, shape);
    try {
      DegreeVerdict v = verify_theorem2(e);
      if (v.applicable) {
        ++applicable;
        if (!v.bound_holds) ++violations;
        if (v.used_witness) ++witness_route;
      }
    } catch (const FatalInconsistency&) {
      ++fatal;
    }
  }
  std::ostringstream detail;
  detail << instances << " instances, " << applicable << " applicable (" << witness_route
         << " via sparse-factor witness), " << violations << " bound violations, " << fatal << " fatal";
  return {applicable > 0 && violations == 0 && fatal == 0, detail.str()};
}

// 2. Sparse-factor witness, sandwich bounds and max-product tables.
Outcome witness_suite(std::uint64_t seed) {
  oracle::SpsShape shape;
  shape.shaped_percent = 100;
  shape.min_curvature = 96;
  shape.max_curvature = 256;
  const std::int64_t wanted = 200;
  std::int64_t checked = 0;
  std::int64_t multi_row = 0;
  std::int64_t multi_factor = 0;
  std::int64_t failures = 0;
  std::int64_t table_mismatches = 0;
  for (std::int64_t trial = 0; trial < 200'000 && checked < wanted; ++trial) {
    Rng rng(oracle::derive_seed(seed, static_cast<std::uint64_t>(trial)));
    SpsExpression e = oracle::random_sps(rng, shape);
    WitnessReport w;
    try {
      w = sparse_factor_witness(e);
    } catch (const PreconditionFailed&) {
      continue;
    } catch (const FatalInconsistency&) {
      ++checked;
      ++failures;
      continue;
    }
    ++checked;
    const auto& [k, m, t, d] = w.params;
    if (k > 1) ++multi_row;
    if (m > 1) ++multi_factor;
    if (w.factor_terms * k * m < d) ++failures;
    Polynomial a = expand(e);
    Coefficient spread = Coefficient(mpz_class(k));
    for (std::int64_t i = 0; i < m; ++i) spread *= Coefficient(mpz_class(d));
    for (std::int64_t l = 0; l <= d; ++l) {
      const Coefficient& cl = w.global_max[static_cast<std::size_t>(l)];
      if (compare(cl, a[l]) > 0 || compare(a[l], spread * cl) > 0) ++failures;
    }
    if (oracle::brute_max_convolution(e, d) != w.row_max) ++table_mismatches;
  }
  std::ostringstream detail;
  detail << checked << " instances met the hypothesis (" << multi_row << " with k > 1, " << multi_factor
         << " with m > 1), " << failures << " failures, " << table_mismatches << " table mismatches";
  return {checked >= wanted && failures == 0 && table_mismatches == 0, detail.str()};
}

// 3. Kurtz polynomials have d distinct real roots.
Outcome kurtz_roots_suite(std::uint64_t seed) {
  std::int64_t wrong = 0;
  for (std::int64_t trial = 0; trial < 100; ++trial) {
    Rng rng(oracle::derive_seed(seed, static_cast<std::uint64_t>(trial)));
    const std::int64_t d = uniform(rng, 2, 12);
    Polynomial p = oracle::random_kurtz_polynomial(rng, d, kKurtzTau);
    if (!check_kurtz(p).holds || sturm_distinct_real_roots(p) != d) ++wrong;
  }
  return {wrong == 0, "100 polynomials, " + std::to_string(wrong) + " with a root count different from d"};
}

// 4. Newton's inequalities on real-rooted products.
Outcome newton_suite(std::uint64_t seed) {
  std::int64_t strict_failures = 0;
  for (std::int64_t trial = 0; trial < 100; ++trial) {
    Rng rng(oracle::derive_seed(seed, static_cast<std::uint64_t>(trial)));
    const std::int64_t d = uniform(rng, 2, 10);
    std::vector<mpq_class> roots;
    while (static_cast<std::int64_t>(roots.size()) < d) {
      mpq_class r(uniform(rng, 1, 60), uniform(rng, 1, 25));
      r.canonicalize();
      if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    }
    Polynomial p({Coefficient(1)});
    for (const auto& r : roots) p = mul(p, Polynomial({Coefficient(r), Coefficient(1)}));
    if (!check_newton(p).holds_strict) ++strict_failures;
  }
  std::int64_t equality_failures = 0;
  for (std::int64_t d = 2; d <= 10; ++d) {
    for (const mpq_class& c : {mpq_class(1), mpq_class(3, 7), mpq_class(5, 2)}) {
      Polynomial p({Coefficient(1)});
      for (std::int64_t j = 0; j < d; ++j) p = mul(p, Polynomial({Coefficient(c), Coefficient(1)}));
      NewtonReport r = check_newton(p);
      if (!r.holds_weak || r.holds_strict || static_cast<std::int64_t>(r.equalities.size()) != d - 1) ++equality_failures;
    }
  }
  std::ostringstream detail;
  detail << "100 distinct-root products, " << strict_failures << " not strict; 27 powers (X+c)^d, "
         << equality_failures << " without equality at every interior index";
  return {strict_failures == 0 && equality_failures == 0, detail.str()};
}

// 5. Hull of a Minkowski sum has at most sum |R_i| vertices.
Outcome minkowski_hull_suite(std::uint64_t seed) {
  oracle::PointShape shape;
  shape.max_points = 6;
  shape.max_tau_halves = 2;
  std::int64_t violations = 0;
  std::size_t largest = 0;
  for (std::int64_t trial = 0; trial < 100; ++trial) {
    Rng rng(oracle::derive_seed(seed, static_cast<std::uint64_t>(trial)));
    const std::int64_t sets = uniform(rng, 1, 4);
    PointSet sum({LogPoint{0, Coefficient(1), 0}});
    std::size_t total = 0;
    for (std::int64_t i = 0; i < sets; ++i) {
      PointSet r = oracle::random_point_set(rng, shape);
      total += r.size();
      sum = minkowski_sum(sum, r);
    }
    std::size_t hull = convex_hull_vertices(sum, kKurtzTau).size();
    largest = std::max(largest, hull);
    if (hull > total) ++violations;
  }
  return {violations == 0, "100 instances, " + std::to_string(violations) + " violations, largest hull " +
                               std::to_string(largest) + " vertices"};
}

// 6. g_{n,s} and f_n conditions by exponent arithmetic.
Outcome families_suite(std::uint64_t) {
  std::int64_t failures = 0;
  for (int n = 2; n <= 10; ++n) {
    for (const mpz_class& s : {mpz_class(1), mpz_class(7), f_family_scale(n)}) {
      if (!check_g(n, s)) ++failures;
    }
  }
  for (int n = 2; n <= 8; ++n) {
    Polynomial f = gen_f(n);
    if (f.degree() != (std::int64_t{1} << n) - 1 || !check_strong(f).holds) ++failures;
  }
  return {failures == 0, "27 (n, s) pairs and f_2..f_8, " + std::to_string(failures) + " failures"};
}

// 7. Substitution identity for h_n.
Outcome identity_suite(std::uint64_t) {
  std::int64_t max_bits = 0;
  for (int n = 1; n <= 3; ++n) {
    SubstitutionVerdict v = verify_substitution_identity(n);
    if (!v.equal) return {false, "mismatch at n = " + std::to_string(n)};
    max_bits = std::max(max_bits, v.max_bits);
  }
  return {true, "n = 1, 2, 3 equal; largest substituted coefficient " + std::to_string(max_bits) + " bits"};
}

// 8. Lifting of two-factor Kurtz instances.
Outcome lifting_suite(std::uint64_t seed) {
  oracle::SpsShape shape;
  shape.fixed_m = 2;
  shape.shaped_percent = 100;
  const std::int64_t wanted = 500;
  std::int64_t checked = 0;
  std::int64_t failures = 0;
  std::int64_t multi_row = 0;
  std::int64_t positive_lambda = 0;
  for (std::int64_t trial = 0; trial < 200'000 && checked < wanted; ++trial) {
    Rng rng(oracle::derive_seed(seed, static_cast<std::uint64_t>(trial)));
    SpsExpression e = oracle::random_sps(rng, shape);
    Polynomial f = expand(e);
    if (f.degree() < 1 || !check_kurtz(f).holds) continue;
    ++checked;
    if (e.rows() > 1) ++multi_row;
    try {
      LiftingArtifacts a = build_lifting(e, kKurtzTau);
      if (std::any_of(a.lambda.begin(), a.lambda.end(), [](std::int64_t l) { return l > 0; })) ++positive_lambda;
      if (!verify_lifting(a).ok()) ++failures;
    } catch (const FatalInconsistency&) {
      ++failures;
    }
  }
  std::ostringstream detail;
  detail << checked << " Kurtz instances (" << multi_row << " with k > 1, " << positive_lambda
         << " with some lambda > 0), " << failures << " failures";
  return {checked >= wanted && failures == 0, detail.str()};
}

// 9. Convex-position DP against exhaustive search.
Outcome chain_oracle_suite(std::uint64_t seed) {
  oracle::PointShape shape;
  shape.min_points = 8;
  shape.max_points = 12;
  shape.max_x = 4;
  shape.max_pow2 = 2;
  shape.max_tau_halves = 2;
  std::int64_t mismatches = 0;
  std::int64_t degenerate = 0;
  for (std::int64_t trial = 0; trial < 50; ++trial) {
    Rng rng(oracle::derive_seed(seed, static_cast<std::uint64_t>(trial)));
    PointSet a = oracle::random_point_set(rng, shape);
    ChainResult dp = max_convex_chain(a, kKurtzTau);
    std::int64_t brute = oracle::brute_max_convex_subset(a, kKurtzTau);
    bool witness_ok = static_cast<std::int64_t>(dp.witness.size()) == dp.size && dp.witness.subset_of(a) &&
                      is_convexly_independent(dp.witness, kKurtzTau);
    if (dp.size != brute || !witness_ok) ++mismatches;
    if (dp.size < static_cast<std::int64_t>(a.size())) ++degenerate;
  }
  return {mismatches == 0, "50 sets, " + std::to_string(mismatches) + " disagreements (" +
                               std::to_string(degenerate) + " sets not in convex position)"};
}

// 10. Report-only curves never exceed the trivial bound.
Outcome report_curves_suite(std::uint64_t seed) {
  oracle::ExperimentConfig cfg;
  cfg.seed = seed;
  cfg.trials = 3000;
  oracle::BestFound found = oracle::search_extremal_kurtz(cfg);
  std::int64_t over = 0;
  for (const auto& rec : found.records) {
    if (mpz_class(rec.params.d) > rec.bounds.trivial) ++over;
  }
  // Any expansion has at most k t^m terms, so full support forces d <= k t^m.
  std::int64_t full_support = 0;
  for (std::int64_t trial = 0; trial < 500; ++trial) {
    Rng rng(oracle::derive_seed(seed + 1, static_cast<std::uint64_t>(trial)));
    SpsExpression e = oracle::random_sps(rng, cfg.shape);
    BoundsReport b = bounds_report(e);
    Polynomial a = expand(e);
    std::int64_t terms = 0;
    bool full = true;
    for (std::int64_t l = 0; l <= a.degree(); ++l) {
      if (!a[l].is_zero()) {
        ++terms;
      } else if (l > 0) {
        full = false;
      }
    }
    if (mpz_class(terms) > b.trivial) ++over;
    if (full) {
      ++full_support;
      if (mpz_class(b.d) > b.trivial) ++over;
    }
  }
  std::ostringstream detail;
  detail << found.records.size() << " Kurtz instances from search (best d = " << (found.found ? found.best.params.d : 0)
         << ") and 500 bounds reports (" << full_support << " with full support), " << over << " above k t^m";
  return {over == 0, detail.str()};
}

struct Criterion {
  int id;
  const char* name;
  double budget;
  std::function<Outcome(std::uint64_t)> body;
};

}  // namespace

std::string format(const CriterionResult& r) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(2);
  out << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ". " << r.name << ": " << r.detail << " (" << r.seconds
      << "s of " << r.budget_seconds << "s)";
  return out.str();
}

std::vector<CriterionResult> run(const Options& options, std::ostream* progress) {
  const std::vector<Criterion> criteria = {
      {1, "degree bound d <= kmt under the strong condition", 60, theorem2_suite},
      {2, "sparse-factor witness and max-product sandwich", 30, witness_suite},
      {3, "Kurtz polynomials are real-rooted with distinct roots", 30, kurtz_roots_suite},
      {4, "Newton inequalities on real-rooted products", 10, newton_suite},
      {5, "Minkowski-sum hull vertex bound", 30, minkowski_hull_suite},
      {6, "g_{n,s} condition and f_n strong condition", 10, families_suite},
      {7, "h_n substitution identity", 10, identity_suite},
      {8, "lifting chain of two-factor Kurtz instances", 60, lifting_suite},
      {9, "convex-position DP equals exhaustive search", 30, chain_oracle_suite},
      {10, "report-only curves stay under k t^m", 30, report_curves_suite},
  };
  std::vector<CriterionResult> results;
  for (const auto& c : criteria) {
    if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), c.id) == options.only.end()) {
      continue;
    }
    CriterionResult r{c.id, c.name, false, "", 0.0, c.budget};
    const auto start = std::chrono::steady_clock::now();
    try {
      Outcome o = c.body(oracle::derive_seed(options.seed, static_cast<std::uint64_t>(c.id)));
      r.passed = o.passed;
      r.detail = o.detail;
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.seconds > r.budget_seconds) {
      r.passed = false;
      r.detail += "; over time budget";
    }
    if (progress != nullptr) *progress << format(r) << std::endl;
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace lcsparse::acceptance
