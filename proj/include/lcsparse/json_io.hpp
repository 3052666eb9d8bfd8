#pragma once

#include <istream>
#include <optional>

#include "json.hpp"
#include "lcsparse/families.hpp"
#include "lcsparse/geometry.hpp"
#include "lcsparse/oracle.hpp"
#include "lcsparse/polynomial.hpp"
#include "lcsparse/sps.hpp"

namespace lcsparse::json_io {

using nlohmann::json;

/// Reads {"tau": "p/q"?, "products": [[{"terms": [[exp, "coeff"], ...]}, ...], ...]}.
/// Throws ParseError on malformed documents.
SpsDocument parse_sps(std::istream& in);
SpsDocument parse_sps(const json& doc);

json sps_to_json(const SpsExpression& e, const std::optional<Coefficient>& tau = std::nullopt);
json poly_to_json(const Polynomial& p);

json to_json(const NewtonReport& r);
json to_json(const ConditionReport& r);
json to_json(const SpsParams& p);
json to_json(const DegreeVerdict& v);
json to_json(const WitnessReport& w);
json to_json(const LiftingArtifacts& a);
json to_json(const LiftingVerdict& v);
json to_json(const BoundsReport& b);
json to_json(const LogPoint& p);
json to_json(const ChainResult& c);
json to_json(const SubstitutionVerdict& v);
json to_json(const oracle::SearchRecord& r);

json points_to_json(const std::vector<LogPoint>& pts);
json h_monomial_to_json(const HMonomial& m, int n);

}  // namespace lcsparse::json_io
