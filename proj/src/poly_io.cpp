#include <set>
#include <sstream>

#include "lcsparse/errors.hpp"
#include "lcsparse/polynomial.hpp"

namespace lcsparse {

namespace {

struct RawTerm {
  Exponent exponent;
  std::string coeff;
};

std::vector<RawTerm> read_terms(std::istream& in) {
  std::vector<RawTerm> out;
  std::set<Exponent> seen;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string exp_text;
    std::string coeff_text;
    std::string extra;
    if (!(fields >> exp_text >> coeff_text) || (fields >> extra)) {
      throw ParseError("line " + std::to_string(lineno) + ": expected '<exponent> <coefficient>'");
    }
    Exponent e = 0;
    try {
      std::size_t used = 0;
      e = std::stoll(exp_text, &used);
      if (used != exp_text.size() || e < 0) throw std::invalid_argument("exponent");
    } catch (const std::exception&) {
      throw ParseError("line " + std::to_string(lineno) + ": bad exponent '" + exp_text + "'");
    }
    if (!seen.insert(e).second) {
      throw ParseError("line " + std::to_string(lineno) + ": duplicate exponent " + exp_text);
    }
    out.push_back({e, coeff_text});
  }
  return out;
}

}  // namespace

SparsePoly parse_sparse_text(std::istream& in) {
  std::vector<SparsePoly::Term> terms;
  for (auto& raw : read_terms(in)) {
    try {
      terms.emplace_back(raw.exponent, parse_coefficient(raw.coeff));
    } catch (const PreconditionFailed& e) {
      throw ParseError(e.what());
    }
  }
  return SparsePoly(std::move(terms));
}

Polynomial parse_polynomial_text(std::istream& in, const Limits& limits) {
  return parse_sparse_text(in).to_dense(limits);
}

RationalPoly parse_signed_polynomial_text(std::istream& in) {
  RationalPoly out;
  for (auto& raw : read_terms(in)) {
    if (raw.exponent >= (1 << 20)) throw ParseError("exponent too large for root counting");
    if (out.size() <= static_cast<std::size_t>(raw.exponent)) out.resize(static_cast<std::size_t>(raw.exponent) + 1);
    out[static_cast<std::size_t>(raw.exponent)] = parse_rational(raw.coeff);
  }
  return out;
}

std::string to_text(const SparsePoly& p) {
  std::string out;
  for (const auto& [e, c] : p.terms()) out += std::to_string(e) + " " + to_string(c) + "\n";
  return out;
}

std::string to_text(const Polynomial& p) { return to_text(SparsePoly::from_dense(p)); }

}  // namespace lcsparse
