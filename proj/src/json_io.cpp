#include "lcsparse/json_io.hpp"

#include <cmath>

#include "lcsparse/errors.hpp"

namespace lcsparse::json_io {

namespace {

std::string str(const Coefficient& c) { return to_string(c); }

json coeff_list(const std::vector<Coefficient>& cs) {
  json out = json::array();
  for (const auto& c : cs) out.push_back(str(c));
  return out;
}

json index_list(const std::vector<std::int64_t>& xs) { return json(xs); }

Coefficient coeff_from(const json& j) {
  if (j.is_string()) return parse_coefficient(j.get<std::string>());
  if (j.is_number_unsigned() || (j.is_number_integer() && j.get<long long>() >= 0)) {
    return Coefficient(mpz_class(std::to_string(j.get<long long>())));
  }
  throw ParseError("coefficients must be strings in the coefficient grammar");
}

}  // namespace

SpsDocument parse_sps(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_sps(doc);
}

SpsDocument parse_sps(const json& doc) {
  try {
    if (!doc.is_object() || !doc.contains("products")) throw ParseError("SPS document needs a \"products\" array");
    std::vector<SpsExpression::Row> rows;
    for (const auto& row_json : doc.at("products")) {
      SpsExpression::Row row;
      for (const auto& factor_json : row_json) {
        std::vector<SparsePoly::Term> terms;
        for (const auto& term : factor_json.at("terms")) {
          if (!term.is_array() || term.size() != 2) throw ParseError("terms are [exponent, \"coefficient\"] pairs");
          const long long exp = term[0].get<long long>();
          if (exp < 0) throw ParseError("negative exponent");
          terms.emplace_back(exp, coeff_from(term[1]));
        }
        row.emplace_back(std::move(terms));
      }
      rows.push_back(std::move(row));
    }
    SpsDocument out{SpsExpression(std::move(rows)), std::nullopt};
    if (doc.contains("tau") && !doc.at("tau").is_null()) out.tau = coeff_from(doc.at("tau"));
    return out;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed SPS document: ") + e.what());
  } catch (const ShapeError& e) {
    throw ParseError(e.what());
  } catch (const PreconditionFailed& e) {
    throw ParseError(e.what());
  }
}

json sps_to_json(const SpsExpression& e, const std::optional<Coefficient>& tau) {
  json products = json::array();
  for (const auto& row : e.products()) {
    json row_json = json::array();
    for (const auto& f : row) {
      json terms = json::array();
      for (const auto& [exp, c] : f.terms()) terms.push_back(json::array({exp, str(c)}));
      row_json.push_back({{"terms", terms}});
    }
    products.push_back(row_json);
  }
  json out{{"products", products}};
  if (tau) out["tau"] = str(*tau);
  return out;
}

json poly_to_json(const Polynomial& p) {
  json terms = json::array();
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (!p.coeffs()[i].is_zero()) terms.push_back(json::array({i, str(p.coeffs()[i])}));
  }
  return {{"degree", p.degree()}, {"terms", terms}};
}

json to_json(const NewtonReport& r) {
  return {{"holds_weak", r.holds_weak},
          {"holds_strict", r.holds_strict},
          {"failures", index_list(r.failures)},
          {"equalities", index_list(r.equalities)}};
}

json to_json(const ConditionReport& r) { return {{"holds", r.holds}, {"failures", index_list(r.failures)}}; }

json to_json(const SpsParams& p) { return {{"k", p.k}, {"m", p.m}, {"t", p.t}, {"d", p.d}}; }

json to_json(const DegreeVerdict& v) {
  return {{"applicable", v.applicable},
          {"bound_holds", v.bound_holds},
          {"used_witness", v.used_witness},
          {"params", to_json(v.params)}};
}

json to_json(const WitnessReport& w) {
  json table = json::array();
  for (const auto& row : w.row_max) table.push_back(coeff_list(row));
  return {{"i0", w.i0},
          {"j0", w.j0},
          {"L", index_list(w.L)},
          {"factor_terms", w.factor_terms},
          {"threshold", to_string(w.threshold)},
          {"hull_vertices", w.hull_vertices},
          {"params", to_json(w.params)},
          {"row_max", table},
          {"global_max", coeff_list(w.global_max)}};
}

json to_json(const LogPoint& p) { return {{"x", p.x}, {"r", str(p.r)}, {"tau_halves", p.tau_halves}}; }

json points_to_json(const std::vector<LogPoint>& pts) {
  json out = json::array();
  for (const auto& p : pts) out.push_back(to_json(p));
  return out;
}

json to_json(const LiftingArtifacts& a) {
  json r_sets = json::array();
  json s_sets = json::array();
  for (const auto& r : a.R_sets) r_sets.push_back(points_to_json(r.points()));
  for (const auto& s : a.S_sets) s_sets.push_back(points_to_json(s.points()));
  json argmax = json::array();
  for (const auto& w : a.argmax) argmax.push_back(json::array({w[0], w[1], w[2]}));
  const double kr = static_cast<double>(a.k * a.r);
  const double eps = a.tau.log2_approx() * std::log(2.0) / 2.0;
  const double log_kr = std::log(kr);
  json shapes = {
      {"approx_chain_bound",
       static_cast<double>(a.k) * std::pow(static_cast<double>(a.r) * static_cast<double>(a.s), 2.0 / 3.0) *
               std::pow(log_kr, 2.0 / 3.0) +
           static_cast<double>(a.k) * static_cast<double>(a.r + a.s) * std::sqrt(log_kr)},
      {"corollary_terms", a.k * a.r * static_cast<std::int64_t>(a.Q1.size()) +
                              a.k * a.s * static_cast<std::int64_t>(a.Q2.size())},
      {"approx_epsilon", eps}};
  return {{"tau", str(a.tau)},
          {"k", a.k},
          {"r", a.r},
          {"s", a.s},
          {"d", a.d},
          {"c", coeff_list(a.c)},
          {"M", coeff_list(a.M)},
          {"lambda", index_list(a.lambda)},
          {"argmax", argmax},
          {"lambda_cap", a.lambda_cap},
          {"root_cap", a.root_cap},
          {"R_sets", r_sets},
          {"S_sets", s_sets},
          {"Q", points_to_json(a.Q.points())},
          {"Q1", points_to_json(a.Q1.points())},
          {"Q2", points_to_json(a.Q2.points())},
          {"chain", points_to_json(a.chain.points())},
          {"shapes", shapes}};
}

json to_json(const LiftingVerdict& v) {
  return {{"ok", v.ok()},
          {"chain_size", v.chain_size},
          {"chain_in_union", v.chain_in_union},
          {"chain_convex", v.chain_convex},
          {"q_in_q1_q2", v.q_in_q1_q2},
          {"q_sizes", v.q_sizes},
          {"lambda_bounds", v.lambda_bounds},
          {"delta_bounds", v.delta_bounds}};
}

json to_json(const BoundsReport& b) {
  return {{"trivial", b.trivial.get_str()},
          {"thm2", b.thm2.get_str()},
          {"thm1_shape_approx", b.thm1_shape},
          {"d", b.d},
          {"params", to_json(b.params)}};
}

json to_json(const ChainResult& c) { return {{"size", c.size}, {"vertices", points_to_json(c.witness.points())}}; }

json to_json(const SubstitutionVerdict& v) {
  return {{"equal", v.equal}, {"coefficients", v.coefficients}, {"max_bits", v.max_bits}};
}

json to_json(const oracle::SearchRecord& r) {
  return {{"trial", r.trial}, {"params", to_json(r.params)}, {"bounds", to_json(r.bounds)},
          {"instance", sps_to_json(r.instance)}};
}

json h_monomial_to_json(const HMonomial& m, int n) {
  return {{"alpha", bitstring(m.alpha, n)}, {"beta", bitstring(m.beta, 4 * n)}};
}

}  // namespace lcsparse::json_io
