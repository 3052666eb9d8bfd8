#include <algorithm>

#include "lcsparse/errors.hpp"
#include "lcsparse/polynomial.hpp"

namespace lcsparse {

namespace {

using Poly = RationalPoly;

void trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// Rescales by a positive rational so the coefficients become coprime
// integers. Signs, and hence Sturm variation counts, are unchanged.
void make_primitive(Poly& p) {
  trim(p);
  if (p.empty()) return;
  mpz_class den_lcm = 1;
  for (const auto& c : p) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  mpz_class content = 0;
  for (auto& c : p) {
    c *= den_lcm;
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_num_mpz_t());
  }
  for (auto& c : p) c /= content;
}

Poly derivative(const Poly& p) {
  Poly out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * static_cast<unsigned long>(i));
  trim(out);
  return out;
}

// Euclidean division over Q; returns {quotient, remainder}.
std::pair<Poly, Poly> divide(Poly num, const Poly& den) {
  Poly quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0);
  trim(num);
  while (num.size() >= den.size() && !num.empty()) {
    std::size_t shift = num.size() - den.size();
    mpq_class factor = num.back() / den.back();
    quot[shift] = factor;
    for (std::size_t i = 0; i < den.size(); ++i) num[i + shift] -= factor * den[i];
    num.pop_back();
    trim(num);
  }
  trim(quot);
  return {quot, num};
}

Poly gcd(Poly a, Poly b) {
  make_primitive(a);
  make_primitive(b);
  while (!b.empty()) {
    Poly r = divide(a, b).second;
    make_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

int sign_at_infinity(const Poly& p, bool negative) {
  int s = sgn(p.back());
  if (negative && (p.size() - 1) % 2 == 1) s = -s;
  return s;
}

std::int64_t variations(const std::vector<Poly>& chain, bool negative) {
  std::int64_t count = 0;
  int last = 0;
  for (const auto& p : chain) {
    int s = sign_at_infinity(p, negative);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace

std::int64_t sturm_distinct_real_roots(const RationalPoly& input) {
  Poly p = input;
  make_primitive(p);
  if (p.empty()) throw ZeroPolynomial("root counting needs a nonzero polynomial");
  if (p.size() == 1) return 0;

  Poly square_free = divide(p, gcd(p, derivative(p))).first;
  make_primitive(square_free);

  std::vector<Poly> chain{square_free, derivative(square_free)};
  make_primitive(chain.back());
  while (chain.back().size() > 1) {
    Poly r = divide(chain[chain.size() - 2], chain.back()).second;
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    make_primitive(r);
    chain.push_back(std::move(r));
  }
  return variations(chain, true) - variations(chain, false);
}

std::int64_t sturm_distinct_real_roots(const Polynomial& p, const Limits& limits) {
  RationalPoly q;
  q.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) q.push_back(c.to_rational(limits));
  return sturm_distinct_real_roots(q);
}

}  // namespace lcsparse
