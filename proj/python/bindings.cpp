#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "lcsparse/cli.hpp"
#include "lcsparse/errors.hpp"
#include "lcsparse/families.hpp"
#include "lcsparse/geometry.hpp"
#include "lcsparse/json_io.hpp"
#include "lcsparse/polynomial.hpp"
#include "lcsparse/sps.hpp"

namespace py = pybind11;
using namespace lcsparse;

namespace {

using PyPoint = std::tuple<std::int64_t, std::string, std::int64_t>;

Polynomial to_poly(const std::vector<std::string>& coeffs) {
  std::vector<Coefficient> cs;
  for (const auto& c : coeffs) cs.push_back(parse_coefficient(c));
  return Polynomial(cs);
}

std::vector<std::string> from_poly(const Polynomial& p) {
  std::vector<std::string> out;
  for (const auto& c : p.coeffs()) out.push_back(to_string(c));
  return out;
}

SpsExpression to_sps(const std::string& doc) { return json_io::parse_sps(json_io::json::parse(doc)).expression; }

PointSet to_points(const std::vector<PyPoint>& pts) {
  std::vector<LogPoint> out;
  for (const auto& [x, r, h] : pts) out.push_back(LogPoint{x, parse_coefficient(r), h});
  return PointSet(out);
}

std::vector<PyPoint> from_points(const std::vector<LogPoint>& pts) {
  std::vector<PyPoint> out;
  for (const auto& p : pts) out.emplace_back(p.x, to_string(p.r), p.tau_halves);
  return out;
}

std::string dump(const json_io::json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact log-concavity and sparse sum-of-products toolkit";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<DegreeTooSmall>(m, "DegreeTooSmall", base.ptr());
  py::register_exception<ZeroPolynomial>(m, "ZeroPolynomial", base.ptr());
  auto resource = py::register_exception<ResourceLimit>(m, "ResourceLimit", base.ptr());
  py::register_exception<ExponentOverflow>(m, "ExponentOverflow", resource.ptr());
  py::register_exception<CapExceeded>(m, "CapExceeded", resource.ptr());
  py::register_exception<PreconditionFailed>(m, "PreconditionFailed", base.ptr());
  py::register_exception<ShapeError>(m, "ShapeError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<FatalInconsistency>(m, "FatalInconsistency", base.ptr());

  m.def("normalize_coefficient", [](const std::string& c) { return to_string(parse_coefficient(c)); });
  m.def("mul", [](const std::vector<std::string>& a, const std::vector<std::string>& b) {
    return from_poly(mul(to_poly(a), to_poly(b)));
  });
  m.def("check_newton", [](const std::vector<std::string>& c) { return dump(json_io::to_json(check_newton(to_poly(c)))); });
  m.def("check_kurtz", [](const std::vector<std::string>& c) { return dump(json_io::to_json(check_kurtz(to_poly(c)))); });
  m.def("check_tau", [](const std::vector<std::string>& c, const std::string& tau) {
    return dump(json_io::to_json(check_tau_logconcave(to_poly(c), parse_coefficient(tau))));
  });
  m.def("check_strong", [](const std::vector<std::string>& c) { return dump(json_io::to_json(check_strong(to_poly(c)))); });
  m.def("sturm_distinct_real_roots", [](const std::vector<std::string>& c) {
    RationalPoly p;
    for (const auto& x : c) p.push_back(parse_rational(x));
    return sturm_distinct_real_roots(p);
  });

  m.def("expand", [](const std::string& doc) { return from_poly(expand(to_sps(doc))); });
  m.def("params", [](const std::string& doc) { return dump(json_io::to_json(params(to_sps(doc)))); });
  m.def("verify_theorem2", [](const std::string& doc) { return dump(json_io::to_json(verify_theorem2(to_sps(doc)))); });
  m.def("sparse_factor_witness",
        [](const std::string& doc) { return dump(json_io::to_json(sparse_factor_witness(to_sps(doc)))); });
  m.def("build_lifting", [](const std::string& doc, const std::string& tau) {
    return dump(json_io::to_json(build_lifting(to_sps(doc), parse_coefficient(tau))));
  });
  m.def("verify_lifting", [](const std::string& doc, const std::string& tau) {
    return dump(json_io::to_json(verify_lifting(build_lifting(to_sps(doc), parse_coefficient(tau)))));
  });
  m.def("split_products", [](const std::string& doc) { return dump(json_io::sps_to_json(split_products(to_sps(doc)))); });
  m.def("bounds_report", [](const std::string& doc) { return dump(json_io::to_json(bounds_report(to_sps(doc)))); });

  m.def("orientation", [](const PyPoint& a, const PyPoint& b, const PyPoint& c, const std::string& tau) {
    auto get = [](const PyPoint& p) { return LogPoint{std::get<0>(p), parse_coefficient(std::get<1>(p)), std::get<2>(p)}; };
    return orientation(get(a), get(b), get(c), parse_coefficient(tau));
  });
  m.def("minkowski_sum", [](const std::vector<PyPoint>& a, const std::vector<PyPoint>& b) {
    return from_points(minkowski_sum(to_points(a), to_points(b)).points());
  });
  m.def("convex_hull_vertices", [](const std::vector<PyPoint>& a, const std::string& tau) {
    return from_points(convex_hull_vertices(to_points(a), parse_coefficient(tau)));
  });
  m.def("upper_envelope", [](const std::vector<PyPoint>& a, const std::string& tau) {
    return from_points(upper_envelope(to_points(a), parse_coefficient(tau)));
  });
  m.def("is_convexly_independent", [](const std::vector<PyPoint>& a, const std::string& tau) {
    return is_convexly_independent(to_points(a), parse_coefficient(tau));
  });
  m.def("max_convex_chain", [](const std::vector<PyPoint>& a, const std::string& tau) {
    ChainResult c = max_convex_chain(to_points(a), parse_coefficient(tau));
    return py::make_tuple(c.size, from_points(c.witness.points()));
  });

  m.def("gen_g", [](int n, const std::string& s) { return from_poly(gen_g(n, mpz_class(s))); });
  m.def("gen_f", [](int n) { return from_poly(gen_f(n)); });
  m.def("check_g", [](int n, const std::string& s) { return check_g(n, mpz_class(s)); });
  m.def("gen_h", [](int n) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& mono : MultilinearH(n).enumerate().monomials) {
      out.emplace_back(bitstring(mono.alpha, n), bitstring(mono.beta, 4 * n));
    }
    return out;
  });
  m.def("verify_substitution_identity",
        [](int n) { return dump(json_io::to_json(verify_substitution_identity(n))); });

  m.def("run_cli", [](std::vector<std::string> args) {
    args.insert(args.begin(), "lcsparse");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
