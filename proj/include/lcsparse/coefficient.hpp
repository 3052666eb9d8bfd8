#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "lcsparse/limits.hpp"

namespace lcsparse {

/// Exact nonnegative number stored as mantissa * 2^pow2.
///
/// The mantissa is a canonical rational whose numerator and denominator are
/// both odd, so two coefficients are equal exactly when their fields are.
/// Zero is the unique value with mantissa 0 and pow2 0. Keeping the binary
/// exponent apart lets coefficients such as 2^(s*i*(2^n-i-1)) be compared
/// and multiplied without materializing them.
class Coefficient {
 public:
  Coefficient() = default;
  Coefficient(long value);  // NOLINT(google-explicit-constructor)
  explicit Coefficient(const mpz_class& value);
  explicit Coefficient(const mpq_class& value);
  Coefficient(const mpq_class& mantissa, const mpz_class& pow2);

  static Coefficient power_of_two(const mpz_class& exponent);

  const mpq_class& mantissa() const { return mantissa_; }
  const mpz_class& pow2() const { return pow2_; }
  bool is_zero() const { return sgn(mantissa_) == 0; }
  bool is_one() const { return mantissa_ == 1 && pow2_ == 0; }

  /// Exact value as a GMP rational. Throws ResourceLimit when |pow2|
  /// exceeds limits.max_bits.
  mpq_class to_rational(const Limits& limits = {}) const;

  /// Rough base-2 logarithm, for reports and plots only.
  double log2_approx() const;

  /// Raise to a nonnegative integer power.
  Coefficient pow(std::uint64_t exponent, const Limits& limits = {}) const;

  Coefficient& operator*=(const Coefficient& other);
  Coefficient& operator+=(const Coefficient& other);

  friend Coefficient operator*(Coefficient lhs, const Coefficient& rhs) { return lhs *= rhs; }
  friend Coefficient operator+(Coefficient lhs, const Coefficient& rhs) { return lhs += rhs; }

  friend bool operator==(const Coefficient& a, const Coefficient& b) {
    return a.pow2_ == b.pow2_ && a.mantissa_ == b.mantissa_;
  }
  friend std::strong_ordering operator<=>(const Coefficient& a, const Coefficient& b);

 private:
  void normalize();

  mpq_class mantissa_{0};
  mpz_class pow2_{0};
};

/// Sign of a - b, decided from bit lengths when the binary exponents are far
/// apart and by exact shifted comparison otherwise.
int compare(const Coefficient& a, const Coefficient& b);

/// Parses INT, INT/INT, 2^INT or INT/INT*2^INT (INT*2^INT is also accepted).
/// Throws ParseError on anything else, including negative values.
Coefficient parse_coefficient(std::string_view text);

/// Renders in the grammar accepted by parse_coefficient; the output is
/// canonical, so parse/render round-trips exactly.
std::string to_string(const Coefficient& c);

/// Parses a possibly negative rational "INT" or "INT/INT".
mpq_class parse_rational(std::string_view text);

std::string to_string(const mpq_class& q);

}  // namespace lcsparse
