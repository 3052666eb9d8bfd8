#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "lcsparse/geometry.hpp"
#include "lcsparse/polynomial.hpp"

namespace lcsparse {

/// Sum of products of sparse nonnegative polynomials: row i holds the
/// factors f_{i,1}, ..., f_{i,m_i} and the expression is sum_i prod_j f_{i,j}.
class SpsExpression {
 public:
  using Row = std::vector<SparsePoly>;

  SpsExpression() = default;
  /// Throws ShapeError for an empty expression, an empty row or a zero factor.
  explicit SpsExpression(std::vector<Row> products);

  const std::vector<Row>& products() const { return products_; }
  std::size_t rows() const { return products_.size(); }

  friend bool operator==(const SpsExpression&, const SpsExpression&) = default;

 private:
  std::vector<Row> products_;
};

/// k rows, at most m factors per row, at most t terms per factor, and the
/// degree d of the expansion. Shorter rows count as padded with the factor 1.
struct SpsParams {
  std::int64_t k = 0;
  std::int64_t m = 0;
  std::int64_t t = 0;
  std::int64_t d = 0;

  friend bool operator==(const SpsParams&, const SpsParams&) = default;
};

Polynomial expand(const SpsExpression& e, const Limits& limits = {});
SpsParams params(const SpsExpression& e, const Limits& limits = {});

struct DegreeVerdict {
  /// The expansion satisfies a_i^2 > d^(2d) a_{i-1} a_{i+1}.
  bool applicable = false;
  /// d <= k m t. Never false when applicable: that case throws.
  bool bound_holds = false;
  /// The sparse-factor witness was needed (d > k and d > m).
  bool used_witness = false;
  SpsParams params;
};

/// Throws FatalInconsistency if the degree bound fails on an applicable
/// instance.
DegreeVerdict verify_theorem2(const SpsExpression& e, const Limits& limits = {});

/// Max-product table: entry [i][l] is the largest prod_r c_{i,r,l_r} over
/// l_1 + ... + l_m = l, zero when no composition exists. Computed one factor
/// at a time as a max-plus convolution.
std::vector<std::vector<Coefficient>> max_product_table(const SpsExpression& e, std::int64_t degree);

struct WitnessReport {
  std::size_t i0 = 0;
  std::size_t j0 = 0;
  /// Exponents l in 1..d where row i0 attains the global maximum C_l.
  std::vector<std::int64_t> L;
  std::int64_t factor_terms = 0;
  /// d / (k m).
  mpq_class threshold;
  SpsParams params;
  std::vector<std::vector<Coefficient>> row_max;  // C_{i,l}
  std::vector<Coefficient> global_max;            // C_l
  /// Vertices of the hull of R_{i0,1} + ... + R_{i0,m}.
  std::int64_t hull_vertices = 0;
};

/// Constructively extracts a factor with at least d/(km) terms from an
/// expression whose expansion satisfies a_i^2 > k^2 d^(2m) a_{i-1} a_{i+1}
/// with a_l > 0 for 1 <= l <= d. Throws PreconditionFailed if that
/// hypothesis fails, FatalInconsistency if an intermediate claim fails.
WitnessReport sparse_factor_witness(const SpsExpression& e, const Limits& limits = {});

/// Lifting of a two-factor expression sum_i g_i h_i satisfying the
/// tau-condition into the plane, with epsilon = log(tau) / 2 carried
/// symbolically through LogPoint::tau_halves.
struct LiftingArtifacts {
  Coefficient tau;
  std::int64_t k = 0;
  std::int64_t r = 0;  // max terms of a g_i
  std::int64_t s = 0;  // max terms of an h_i
  std::int64_t d = 0;
  std::vector<Coefficient> c;  // expansion coefficients c_0..c_d
  /// Entries for l = 1..d are stored at index l - 1.
  std::vector<Coefficient> M;
  std::vector<std::int64_t> lambda;
  /// (i, j1, j2) attaining M_l, lexicographically smallest.
  std::vector<std::array<std::size_t, 3>> argmax;
  /// ceil(log(kr) / epsilon).
  std::int64_t lambda_cap = 0;
  /// ceil(sqrt(log(kr) / epsilon)).
  std::int64_t root_cap = 0;
  std::vector<PointSet> R_sets;
  std::vector<PointSet> S_sets;
  PointSet Q;
  PointSet Q1;
  PointSet Q2;
  PointSet chain;
};

/// Throws ShapeError unless every row has exactly two factors and
/// PreconditionFailed unless the expansion satisfies the tau-condition.
LiftingArtifacts build_lifting(const SpsExpression& e, const Coefficient& tau, const Limits& limits = {});

struct LiftingVerdict {
  bool chain_size = false;
  bool chain_in_union = false;
  bool chain_convex = false;
  bool q_in_q1_q2 = false;
  bool q_sizes = false;
  bool lambda_bounds = false;
  bool delta_bounds = false;

  bool ok() const {
    return chain_size && chain_in_union && chain_convex && q_in_q1_q2 && q_sizes && lambda_bounds && delta_bounds;
  }
};

/// Re-checks every claim about the artifacts. A false flag is a defect;
/// callers that need a hard failure use require(verify_lifting(a)).
LiftingVerdict verify_lifting(const LiftingArtifacts& a, const Limits& limits = {});
void require(const LiftingVerdict& verdict);

/// Groups each row into two factors by brute-force expansion of the first
/// floor(m_i / 2) factors and of the rest. Rows with one factor become (1, f).
SpsExpression split_products(const SpsExpression& e, const Limits& limits = {});

struct BoundsReport {
  mpz_class trivial;  // k t^m
  mpz_class thm2;     // k m t
  /// k m^(2/3) t^(2m/3) log(kt)^(2/3); approximate, no constant, plot only.
  double thm1_shape = 0.0;
  std::int64_t d = 0;
  SpsParams params;
};

BoundsReport bounds_report(const SpsExpression& e, const Limits& limits = {});

/// Parsed SPS JSON payload.
struct SpsDocument {
  SpsExpression expression;
  std::optional<Coefficient> tau;
};

}  // namespace lcsparse
