#include "lcsparse/limits.hpp"

#include <cstdlib>
#include <string>

namespace lcsparse {

namespace {

void override_from(const char* name, std::int64_t& field) {
  const char* value = std::getenv(name);
  if (value == nullptr || *value == '\0') return;
  try {
    long long parsed = std::stoll(value);
    if (parsed > 0) field = parsed;
  } catch (const std::exception&) {
    // ignore malformed overrides and keep the default
  }
}

}  // namespace

Limits Limits::from_environment() {
  Limits limits;
  override_from("LCSPARSE_MAX_DEGREE", limits.max_dense_degree);
  override_from("LCSPARSE_MAX_EXPAND_DEGREE", limits.max_expand_degree);
  override_from("LCSPARSE_MAX_STRONG_DEGREE", limits.max_strong_degree);
  override_from("LCSPARSE_MAX_CHAIN_POINTS", limits.max_chain_points);
  override_from("LCSPARSE_MAX_BITS", limits.max_bits);
  return limits;
}

}  // namespace lcsparse
