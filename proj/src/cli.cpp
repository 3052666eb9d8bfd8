#include "lcsparse/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "lcsparse/acceptance.hpp"
#include "lcsparse/errors.hpp"
#include "lcsparse/families.hpp"
#include "lcsparse/geometry.hpp"
#include "lcsparse/json_io.hpp"
#include "lcsparse/oracle.hpp"
#include "lcsparse/polynomial.hpp"
#include "lcsparse/sps.hpp"

namespace lcsparse::cli {

namespace {

using json_io::json;

constexpr int kOk = 0;
constexpr int kFails = 1;
constexpr int kUsage = 2;
constexpr int kFatal = 3;

class UsageError : public Error {
 public:
  using Error::Error;
};

// "-" is standard input.
template <class F>
auto with_input(const std::string& path, F&& f) {
  if (path == "-") return f(std::cin);
  std::ifstream file(path);
  if (!file) throw UsageError("cannot open " + path);
  return f(file);
}

struct Common {
  std::string format;
  std::string tau;
  std::uint64_t seed = 1;
  Limits limits;
};

Coefficient tau_or(const Common& c, const std::optional<Coefficient>& fallback, long default_tau) {
  Coefficient tau = !c.tau.empty() ? parse_coefficient(c.tau) : fallback.value_or(Coefficient(default_tau));
  if (compare(tau, Coefficient(1)) <= 0) throw UsageError("tau must exceed 1");
  return tau;
}

std::string format_or(const Common& c, const std::string& fallback) { return c.format.empty() ? fallback : c.format; }

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

Polynomial read_poly(const std::string& path, const Limits& limits) {
  return with_input(path, [&](std::istream& in) { return parse_polynomial_text(in, limits); });
}

SpsDocument read_sps(const std::string& path) {
  return with_input(path, [](std::istream& in) { return json_io::parse_sps(in); });
}

PointSet read_points(const std::string& path) {
  return with_input(path, [](std::istream& in) { return parse_point_csv(in); });
}

void emit_points(std::ostream& out, const std::string& format, const std::vector<LogPoint>& pts) {
  if (format == "csv" || format == "text") {
    out << to_csv(PointSet(pts));
  } else {
    emit(out, {{"size", pts.size()}, {"vertices", json_io::points_to_json(pts)}});
  }
}

void emit_poly(std::ostream& out, const std::string& format, const Polynomial& p) {
  if (format == "json") {
    emit(out, json_io::poly_to_json(p));
  } else {
    out << to_text(p);
  }
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact log-concavity and sparse-sum-of-products toolkit"};
  app.require_subcommand(1);
  Common common;
  std::map<std::string, std::string> paths;
  std::vector<std::string> many_paths;
  bool strict = false;
  int n = 0;
  std::string s_text = "1";
  std::int64_t trials = 2000;
  oracle::SpsShape shape;
  std::vector<int> only;
  bool seed_given = false;
  std::function<int(std::ostream&)> action;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  };
  auto add_tau = [&](CLI::App* sub, const char* what) { sub->add_option("--tau", common.tau, what); };
  auto add_seed = [&](CLI::App* sub) {
    sub->add_option_function<std::uint64_t>(
        "--seed",
        [&](const std::uint64_t& v) {
          common.seed = v;
          seed_given = true;
        },
        "Random seed");
  };
  auto file_cmd = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("input", paths["input"], "Input path, - for stdin")->required();
    add_common(sub);
    return sub;
  };

  CLI::App* sub = file_cmd("check-newton", "Newton inequalities of a polynomial");
  sub->add_flag("--strict", strict, "Require strict inequalities");
  sub->callback([&] {
    action = [&](std::ostream& o) {
      NewtonReport r = check_newton(read_poly(paths["input"], common.limits));
      emit(o, json_io::to_json(r));
      return (strict ? r.holds_strict : r.holds_weak) ? kOk : kFails;
    };
  });

  sub = file_cmd("check-kurtz", "a_i^2 > tau a_{i-1} a_{i+1}, tau = 4 unless given");
  add_tau(sub, "Ratio tau > 1");
  sub->callback([&] {
    action = [&](std::ostream& o) {
      ConditionReport r = check_tau_logconcave(read_poly(paths["input"], common.limits), tau_or(common, {}, 4));
      emit(o, json_io::to_json(r));
      return r.holds ? kOk : kFails;
    };
  });

  sub = file_cmd("check-strong", "a_i^2 > d^(2d) a_{i-1} a_{i+1}");
  sub->callback([&] {
    action = [&](std::ostream& o) {
      ConditionReport r = check_strong(read_poly(paths["input"], common.limits), common.limits);
      emit(o, json_io::to_json(r));
      return r.holds ? kOk : kFails;
    };
  });

  sub = file_cmd("sturm", "Distinct real roots of a signed rational polynomial");
  sub->callback([&] {
    action = [&](std::ostream& o) {
      RationalPoly p = with_input(paths["input"], [](std::istream& in) { return parse_signed_polynomial_text(in); });
      std::int64_t roots = sturm_distinct_real_roots(p);
      if (format_or(common, "json") == "json") {
        emit(o, {{"distinct_real_roots", roots}});
      } else {
        o << roots << '\n';
      }
      return kOk;
    };
  });

  sub = file_cmd("expand", "Expand an SPS document");
  sub->callback([&] {
    action = [&](std::ostream& o) {
      emit_poly(o, format_or(common, "text"), expand(read_sps(paths["input"]).expression, common.limits));
      return kOk;
    };
  });

  sub = file_cmd("params", "k, m, t and d of an SPS document");
  sub->callback([&] {
    action = [&](std::ostream& o) {
      emit(o, json_io::to_json(params(read_sps(paths["input"]).expression, common.limits)));
      return kOk;
    };
  });

  sub = file_cmd("verify-thm2", "Degree bound d <= kmt under the strong condition");
  sub->callback([&] {
    action = [&](std::ostream& o) {
      DegreeVerdict v = verify_theorem2(read_sps(paths["input"]).expression, common.limits);
      emit(o, json_io::to_json(v));
      return v.applicable && v.bound_holds ? kOk : kFails;
    };
  });

  sub = file_cmd("witness", "Sparse-factor witness with its max-product table");
  sub->callback([&] {
    action = [&](std::ostream& o) {
      emit(o, json_io::to_json(sparse_factor_witness(read_sps(paths["input"]).expression, common.limits)));
      return kOk;
    };
  });

  sub = file_cmd("lift", "Planar lifting of a two-factor expression");
  add_tau(sub, "Ratio tau > 1; defaults to the document's tau, then 4");
  sub->callback([&] {
    action = [&](std::ostream& o) {
      SpsDocument doc = read_sps(paths["input"]);
      emit(o, json_io::to_json(build_lifting(doc.expression, tau_or(common, doc.tau, 4), common.limits)));
      return kOk;
    };
  });

  sub = file_cmd("verify-lift", "Re-check every claim about the lifting");
  add_tau(sub, "Ratio tau > 1; defaults to the document's tau, then 4");
  sub->callback([&] {
    action = [&](std::ostream& o) {
      SpsDocument doc = read_sps(paths["input"]);
      LiftingVerdict v =
          verify_lifting(build_lifting(doc.expression, tau_or(common, doc.tau, 4), common.limits), common.limits);
      emit(o, json_io::to_json(v));
      require(v);
      return kOk;
    };
  });

  sub = file_cmd("split", "Group every row into two factors");
  sub->callback([&] {
    action = [&](std::ostream& o) {
      SpsDocument doc = read_sps(paths["input"]);
      emit(o, json_io::sps_to_json(split_products(doc.expression, common.limits), doc.tau));
      return kOk;
    };
  });

  sub = file_cmd("bounds", "Trivial and degree bounds of an SPS document");
  sub->callback([&] {
    action = [&](std::ostream& o) {
      emit(o, json_io::to_json(bounds_report(read_sps(paths["input"]).expression, common.limits)));
      return kOk;
    };
  });

  sub = file_cmd("hull", "Convex hull vertices of a point CSV");
  add_tau(sub, "Ratio tau > 1, default 4");
  sub->add_flag_callback("--upper", [&] { paths["upper"] = "1"; }, "Upper envelope only");
  sub->callback([&] {
    action = [&](std::ostream& o) {
      PointSet a = read_points(paths["input"]);
      Coefficient tau = tau_or(common, {}, 4);
      emit_points(o, format_or(common, "json"),
                  paths.count("upper") ? upper_envelope(a, tau, common.limits)
                                       : convex_hull_vertices(a, tau, common.limits));
      return kOk;
    };
  });

  sub = app.add_subcommand("minkowski", "Minkowski sum of point CSVs");
  sub->add_option("inputs", many_paths, "Input paths")->required()->expected(1, -1);
  add_common(sub);
  sub->callback([&] {
    action = [&](std::ostream& o) {
      PointSet sum({LogPoint{}});
      for (const auto& p : many_paths) sum = minkowski_sum(sum, read_points(p));
      std::string f = format_or(common, "csv");
      if (f == "json") {
        emit(o, json_io::points_to_json(sum.points()));
      } else {
        o << to_csv(sum);
      }
      return kOk;
    };
  });

  sub = file_cmd("chain", "Largest subset in convex position");
  add_tau(sub, "Ratio tau > 1, default 4");
  sub->callback([&] {
    action = [&](std::ostream& o) {
      ChainResult c = max_convex_chain(read_points(paths["input"]), tau_or(common, {}, 4), common.limits);
      if (format_or(common, "json") == "json") {
        emit(o, json_io::to_json(c));
      } else {
        o << to_csv(c.witness);
      }
      return kOk;
    };
  });

  sub = app.add_subcommand("gen-g", "g_{n,s} in polynomial text");
  sub->add_option("--n", n, "n >= 1")->required();
  sub->add_option("--s", s_text, "Scale s >= 1");
  add_common(sub);
  sub->callback([&] {
    action = [&](std::ostream& o) {
      mpz_class s;
      if (s.set_str(s_text, 10) != 0) throw UsageError("--s must be an integer");
      emit_poly(o, format_or(common, "text"), gen_g(n, s, common.limits));
      return kOk;
    };
  });

  sub = app.add_subcommand("gen-f", "f_n in polynomial text");
  sub->add_option("--n", n, "1 <= n <= 12")->required();
  add_common(sub);
  sub->callback([&] {
    action = [&](std::ostream& o) {
      emit_poly(o, format_or(common, "text"), gen_f(n, common.limits));
      return kOk;
    };
  });

  sub = app.add_subcommand("gen-h", "Supported monomials of h_n");
  sub->add_option("--n", n, "1 <= n <= 8")->required();
  add_common(sub);
  sub->callback([&] {
    action = [&](std::ostream& o) {
      MultilinearH h(n);
      MultilinearH::Enumeration e = h.enumerate();
      json monomials = json::array();
      for (const auto& m : e.monomials) monomials.push_back(json_io::h_monomial_to_json(m, n));
      emit(o, {{"n", n}, {"monomials", monomials}, {"guard_rejections", e.guard_rejections}});
      return kOk;
    };
  });

  sub = app.add_subcommand("verify-identity", "Substitution identity between h_n and f_n");
  sub->add_option("--n", n, "1 <= n <= 3")->required();
  add_common(sub);
  sub->callback([&] {
    action = [&](std::ostream& o) {
      emit(o, json_io::to_json(verify_substitution_identity(n, common.limits)));
      return kOk;
    };
  });

  sub = app.add_subcommand("search", "Random search for high-degree Kurtz expressions; JSON lines");
  add_seed(sub);
  add_tau(sub, "Ratio tau > 1, default 4");
  sub->add_option("--trials", trials, "Number of random expressions")->check(CLI::Range(std::int64_t{1}, std::int64_t{10'000'000}));
  sub->add_option("--max-k", shape.max_k, "Rows")->check(CLI::Range(1, 64));
  sub->add_option("--max-m", shape.max_m, "Factors per row")->check(CLI::Range(1, 16));
  sub->add_option("--max-t", shape.max_t, "Terms per factor")->check(CLI::Range(1, 64));
  sub->add_option("--max-exponent", shape.max_exponent, "Largest factor exponent")->check(CLI::Range(1, 4096));
  sub->callback([&] {
    action = [&](std::ostream& o) {
      oracle::ExperimentConfig cfg;
      cfg.seed = common.seed;
      cfg.trials = trials;
      cfg.shape = shape;
      cfg.tau = tau_or(common, {}, 4);
      oracle::BestFound found = oracle::search_extremal_kurtz(cfg, common.limits);
      for (const auto& r : found.records) o << json_io::to_json(r).dump() << '\n';
      return kOk;
    };
  });

  sub = app.add_subcommand("selftest", "Run the acceptance suite");
  add_seed(sub);
  sub->add_option("--only", only, "Criterion ids to run")->check(CLI::Range(1, 10));
  sub->callback([&] {
    action = [&](std::ostream& o) {
      acceptance::Options opts;
      if (seed_given) opts.seed = common.seed;
      opts.only = only;
      bool all = true;
      for (const auto& r : acceptance::run(opts, &o)) all = all && r.passed;
      return all ? kOk : kFails;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  std::ostringstream buffer;
  int code = kUsage;
  try {
    common.limits = Limits::from_environment();
    code = action(buffer);
  } catch (const FatalInconsistency& e) {
    out << buffer.str();
    err << "fatal inconsistency: " << e.what() << '\n';
    return kFatal;
  } catch (const PreconditionFailed& e) {
    out << buffer.str();
    err << "precondition failed: " << e.what() << '\n';
    return kFails;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  out << buffer.str();
  out.flush();
  return code;
}

}  // namespace lcsparse::cli
