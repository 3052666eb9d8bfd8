#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

#include "lcsparse/coefficient.hpp"
#include "lcsparse/limits.hpp"

namespace lcsparse {

/// Planar point (x, log r + (tau_halves / 2) log tau).
///
/// The y-coordinate is never materialized. Every predicate reduces to a
/// comparison of two products of rational powers, which is exact.
struct LogPoint {
  std::int64_t x = 0;
  Coefficient r{1};
  std::int64_t tau_halves = 0;

  friend bool operator==(const LogPoint&, const LogPoint&) = default;
  friend std::strong_ordering operator<=>(const LogPoint&, const LogPoint&) = default;
};

/// Pointwise sum of two lifted points.
LogPoint operator+(const LogPoint& a, const LogPoint& b);

/// Finite deduplicated set of LogPoints, kept in structural order.
class PointSet {
 public:
  PointSet() = default;
  PointSet(std::vector<LogPoint> points);  // NOLINT(google-explicit-constructor)
  PointSet(std::initializer_list<LogPoint> points) : PointSet(std::vector<LogPoint>(points)) {}

  const std::vector<LogPoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  bool contains(const LogPoint& p) const;
  /// True when every point of this set is also in other.
  bool subset_of(const PointSet& other) const;

  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::vector<LogPoint> points_;
};

PointSet set_union(const PointSet& a, const PointSet& b);

/// Sign of the cross product (p2 - p1) x (p3 - p1); +1 is a left turn.
/// tau must exceed 1. Throws ExponentOverflow when an intermediate power
/// exceeds limits.max_predicate_exponent.
int orientation(const LogPoint& p1, const LogPoint& p2, const LogPoint& p3, const Coefficient& tau,
                const Limits& limits = {});

/// Sign of y(a) - y(b).
int compare_height(const LogPoint& a, const LogPoint& b, const Coefficient& tau, const Limits& limits = {});

/// Same x and same y, possibly with different (r, tau_halves) spellings.
bool coincide(const LogPoint& a, const LogPoint& b, const Coefficient& tau, const Limits& limits = {});

PointSet minkowski_sum(const PointSet& a, const PointSet& b);

/// Hull vertices counterclockwise, starting at the lowest point of the
/// leftmost column. Points in the relative interior of an edge are not
/// vertices.
std::vector<LogPoint> convex_hull_vertices(const PointSet& a, const Coefficient& tau, const Limits& limits = {});

/// Hull vertices seen from y = +infinity, left to right.
std::vector<LogPoint> upper_envelope(const PointSet& a, const Coefficient& tau, const Limits& limits = {});

/// Every point is a strict hull vertex. Sets of at most two points count as
/// convexly independent unless the two points coincide geometrically.
bool is_convexly_independent(const PointSet& c, const Coefficient& tau, const Limits& limits = {});

struct ChainResult {
  std::int64_t size = 0;
  PointSet witness;
};

/// Largest subset in strict convex position. Throws CapExceeded when |a|
/// exceeds limits.max_chain_points.
ChainResult max_convex_chain(const PointSet& a, const Coefficient& tau, const Limits& limits = {});

/// Lines "x,mantissa,pow2,tau_halves"; blank lines and '#' comments skipped.
PointSet parse_point_csv(std::istream& in);
std::string to_csv(const PointSet& points);

/// Throws PreconditionFailed unless tau > 1.
void require_valid_tau(const Coefficient& tau);

}  // namespace lcsparse
