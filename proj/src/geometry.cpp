#include "lcsparse/geometry.hpp"

#include <algorithm>
#include <sstream>

#include "lcsparse/errors.hpp"

namespace lcsparse {

namespace {

struct PowerTerm {
  const Coefficient* base;
  std::int64_t exponent;
};

// Sign of log(prod base^exponent), i.e. compares the product of the positive
// powers against the product of the negative ones.
int sign_of_log_product(std::initializer_list<PowerTerm> factors, const Limits& limits) {
  Coefficient numerator(1);
  Coefficient denominator(1);
  for (const auto& f : factors) {
    if (f.exponent == 0 || f.base->is_one()) continue;
    std::int64_t magnitude = f.exponent < 0 ? -f.exponent : f.exponent;
    if (magnitude > limits.max_predicate_exponent) {
      throw ExponentOverflow("orientation predicate exponent " + std::to_string(magnitude) + " exceeds cap");
    }
    Coefficient power = f.base->pow(static_cast<std::uint64_t>(magnitude), limits);
    (f.exponent > 0 ? numerator : denominator) *= power;
  }
  return compare(numerator, denominator);
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_sub_overflow(a, b, &out)) throw ExponentOverflow("coordinate difference overflows");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw ExponentOverflow("coordinate product overflows");
  return out;
}

// Sorted by x, then height; geometric duplicates collapsed to the first
// structural representative.
std::vector<LogPoint> sorted_distinct(const PointSet& a, const Coefficient& tau, const Limits& limits) {
  std::vector<LogPoint> pts(a.begin(), a.end());
  std::stable_sort(pts.begin(), pts.end(), [&](const LogPoint& p, const LogPoint& q) {
    if (p.x != q.x) return p.x < q.x;
    return compare_height(p, q, tau, limits) < 0;
  });
  std::vector<LogPoint> out;
  for (auto& p : pts) {
    if (!out.empty() && coincide(out.back(), p, tau, limits)) continue;
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

LogPoint operator+(const LogPoint& a, const LogPoint& b) {
  return {a.x + b.x, a.r * b.r, a.tau_halves + b.tau_halves};
}

PointSet::PointSet(std::vector<LogPoint> points) : points_(std::move(points)) {
  for (const auto& p : points_) {
    if (p.r.is_zero()) throw PreconditionFailed("lifted points need a positive coefficient");
  }
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool PointSet::contains(const LogPoint& p) const { return std::binary_search(points_.begin(), points_.end(), p); }

bool PointSet::subset_of(const PointSet& other) const {
  return std::includes(other.points_.begin(), other.points_.end(), points_.begin(), points_.end());
}

PointSet set_union(const PointSet& a, const PointSet& b) {
  std::vector<LogPoint> all(a.begin(), a.end());
  all.insert(all.end(), b.begin(), b.end());
  return PointSet(std::move(all));
}

void require_valid_tau(const Coefficient& tau) {
  if (compare(tau, Coefficient(1)) <= 0) throw PreconditionFailed("tau must be a rational > 1");
}

int orientation(const LogPoint& p1, const LogPoint& p2, const LogPoint& p3, const Coefficient& tau,
                const Limits& limits) {
  const std::int64_t dx2 = checked_sub(p2.x, p1.x);
  const std::int64_t dx3 = checked_sub(p3.x, p1.x);
  // Twice the cross product is
  //   2 dx2 log r3 - 2 dx3 log r2 + 2 (dx3 - dx2) log r1 + h log tau
  // with h = dx2 (h3 - h1) - dx3 (h2 - h1). Halve everything when h is even.
  const std::int64_t h = checked_sub(checked_mul(dx2, checked_sub(p3.tau_halves, p1.tau_halves)),
                                     checked_mul(dx3, checked_sub(p2.tau_halves, p1.tau_halves)));
  const std::int64_t scale = (h % 2 == 0) ? 1 : 2;
  const std::int64_t tau_exp = (h % 2 == 0) ? h / 2 : h;
  return sign_of_log_product({{&p3.r, checked_mul(scale, dx2)},
                              {&p2.r, checked_mul(-scale, dx3)},
                              {&p1.r, checked_mul(scale, checked_sub(dx3, dx2))},
                              {&tau, tau_exp}},
                             limits);
}

int compare_height(const LogPoint& a, const LogPoint& b, const Coefficient& tau, const Limits& limits) {
  const std::int64_t dh = checked_sub(a.tau_halves, b.tau_halves);
  const std::int64_t scale = (dh % 2 == 0) ? 1 : 2;
  const std::int64_t tau_exp = (dh % 2 == 0) ? dh / 2 : dh;
  return sign_of_log_product({{&a.r, scale}, {&b.r, -scale}, {&tau, tau_exp}}, limits);
}

bool coincide(const LogPoint& a, const LogPoint& b, const Coefficient& tau, const Limits& limits) {
  return a.x == b.x && compare_height(a, b, tau, limits) == 0;
}

PointSet minkowski_sum(const PointSet& a, const PointSet& b) {
  std::vector<LogPoint> out;
  out.reserve(a.size() * b.size());
  for (const auto& p : a) {
    for (const auto& q : b) out.push_back(p + q);
  }
  return PointSet(std::move(out));
}

std::vector<LogPoint> convex_hull_vertices(const PointSet& a, const Coefficient& tau, const Limits& limits) {
  std::vector<LogPoint> pts = sorted_distinct(a, tau, limits);
  if (pts.size() <= 2) return pts;

  std::vector<LogPoint> hull;
  auto build = [&](auto first, auto last) {
    const std::size_t base = hull.size();
    for (auto it = first; it != last; ++it) {
      while (hull.size() >= base + 2 && orientation(hull[hull.size() - 2], hull.back(), *it, tau, limits) <= 0) {
        hull.pop_back();
      }
      hull.push_back(*it);
    }
    hull.pop_back();
  };
  build(pts.begin(), pts.end());
  build(pts.rbegin(), pts.rend());
  return hull;
}

std::vector<LogPoint> upper_envelope(const PointSet& a, const Coefficient& tau, const Limits& limits) {
  std::vector<LogPoint> pts = sorted_distinct(a, tau, limits);
  // Keep the highest point of every column.
  std::vector<LogPoint> tops;
  for (auto& p : pts) {
    if (!tops.empty() && tops.back().x == p.x) tops.pop_back();
    tops.push_back(std::move(p));
  }
  std::vector<LogPoint> chain;
  for (auto& p : tops) {
    while (chain.size() >= 2 && orientation(chain[chain.size() - 2], chain.back(), p, tau, limits) >= 0) {
      chain.pop_back();
    }
    chain.push_back(std::move(p));
  }
  return chain;
}

bool is_convexly_independent(const PointSet& c, const Coefficient& tau, const Limits& limits) {
  if (c.size() == 2) return !coincide(c.points()[0], c.points()[1], tau, limits);
  if (c.size() < 2) return true;
  return convex_hull_vertices(c, tau, limits).size() == c.size();
}

ChainResult max_convex_chain(const PointSet& a, const Coefficient& tau, const Limits& limits) {
  if (static_cast<std::int64_t>(a.size()) > limits.max_chain_points) {
    throw CapExceeded("max_convex_chain input of " + std::to_string(a.size()) + " points exceeds cap " +
                      std::to_string(limits.max_chain_points));
  }
  std::vector<LogPoint> pts = sorted_distinct(a, tau, limits);
  const std::size_t n = pts.size();
  if (n <= 2) return {static_cast<std::int64_t>(n), PointSet(pts)};

  ChainResult best{2, PointSet({pts[0], pts[1]})};

  // The anchor is the lexicographically smallest vertex of the polygon; the
  // remaining vertices appear in strictly increasing angle around it.
  for (std::size_t anchor = 0; anchor + 2 < n; ++anchor) {
    const LogPoint& o = pts[anchor];
    std::vector<std::size_t> cand;
    for (std::size_t i = anchor + 1; i < n; ++i) cand.push_back(i);
    std::stable_sort(cand.begin(), cand.end(), [&](std::size_t u, std::size_t v) {
      int turn = orientation(o, pts[u], pts[v], tau, limits);
      if (turn != 0) return turn > 0;
      return u < v;  // same ray: nearer first, since pts is sorted
    });

    const std::size_t m = cand.size();
    // len[i][j]: vertices on the chain o, ..., cand[i], cand[j]; 0 if none.
    std::vector<std::vector<std::int64_t>> len(m, std::vector<std::int64_t>(m, 0));
    std::vector<std::vector<std::int64_t>> parent(m, std::vector<std::int64_t>(m, -1));
    for (std::size_t j = 0; j < m; ++j) {
      const LogPoint& pj = pts[cand[j]];
      for (std::size_t i = 0; i < j; ++i) {
        const LogPoint& pi = pts[cand[i]];
        if (orientation(o, pi, pj, tau, limits) <= 0) continue;
        std::int64_t value = 3;
        std::int64_t from = -1;
        for (std::size_t k = 0; k < i; ++k) {
          if (len[k][i] == 0 || len[k][i] + 1 <= value) continue;
          if (orientation(pts[cand[k]], pi, pj, tau, limits) > 0) {
            value = len[k][i] + 1;
            from = static_cast<std::int64_t>(k);
          }
        }
        len[i][j] = value;
        parent[i][j] = from;
        if (value > best.size && orientation(pi, pj, o, tau, limits) > 0) {
          std::vector<LogPoint> witness{o, pj, pi};
          std::int64_t a_idx = from;
          std::size_t b_idx = i;
          while (a_idx >= 0) {
            witness.push_back(pts[cand[static_cast<std::size_t>(a_idx)]]);
            std::int64_t next = parent[static_cast<std::size_t>(a_idx)][b_idx];
            b_idx = static_cast<std::size_t>(a_idx);
            a_idx = next;
          }
          best = {value, PointSet(std::move(witness))};
        }
      }
    }
  }
  return best;
}

PointSet parse_point_csv(std::istream& in) {
  std::vector<LogPoint> pts;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 4) throw ParseError("line " + std::to_string(lineno) + ": expected x,mantissa,pow2,tau_halves");
    try {
      std::size_t used = 0;
      LogPoint p;
      p.x = std::stoll(fields[0], &used);
      Coefficient mant = parse_coefficient(fields[1]);
      mpz_class pow2(fields[2].substr(fields[2].find_first_not_of(" \t")), 10);
      p.r = mant * Coefficient::power_of_two(pow2);
      p.tau_halves = std::stoll(fields[3], &used);
      if (p.r.is_zero()) throw ParseError("zero coefficient");
      pts.push_back(std::move(p));
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return PointSet(std::move(pts));
}

std::string to_csv(const PointSet& points) {
  std::string out;
  for (const auto& p : points) {
    const auto& m = p.r.mantissa();
    std::string mant = m.get_den() == 1 ? m.get_num().get_str() : m.get_str();
    out += std::to_string(p.x) + "," + mant + "," + p.r.pow2().get_str() + "," + std::to_string(p.tau_halves) + "\n";
  }
  return out;
}

}  // namespace lcsparse
