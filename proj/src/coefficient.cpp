#include "lcsparse/coefficient.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "lcsparse/errors.hpp"

namespace lcsparse {

namespace {

// Values whose binary exponent is at most this far from zero render as a
// plain rational.
constexpr long kPlainRenderWindow = 64;

long bit_length(const mpz_class& z) {
  return sgn(z) == 0 ? 0 : static_cast<long>(mpz_sizeinbase(z.get_mpz_t(), 2));
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(),
                                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

mpz_class parse_integer(std::string_view s, bool allow_sign) {
  s = trim(s);
  std::string_view digits = s;
  bool negative = false;
  if (allow_sign && !digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (!is_digits(digits)) throw ParseError("malformed integer '" + std::string(s) + "'");
  mpz_class z(std::string(digits), 10);
  return negative ? mpz_class(-z) : z;
}

mpq_class parse_rational_impl(std::string_view s, bool allow_sign) {
  s = trim(s);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return mpq_class(parse_integer(s, allow_sign));
  mpz_class num = parse_integer(s.substr(0, slash), allow_sign);
  mpz_class den = parse_integer(s.substr(slash + 1), false);
  if (sgn(den) == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

Coefficient::Coefficient(long value) : mantissa_(value) {
  if (value < 0) throw PreconditionFailed("coefficients must be nonnegative");
  normalize();
}

Coefficient::Coefficient(const mpz_class& value) : mantissa_(value) {
  if (sgn(value) < 0) throw PreconditionFailed("coefficients must be nonnegative");
  normalize();
}

Coefficient::Coefficient(const mpq_class& value) : mantissa_(value) {
  if (sgn(value) < 0) throw PreconditionFailed("coefficients must be nonnegative");
  mantissa_.canonicalize();
  normalize();
}

Coefficient::Coefficient(const mpq_class& mantissa, const mpz_class& pow2)
    : mantissa_(mantissa), pow2_(pow2) {
  if (sgn(mantissa) < 0) throw PreconditionFailed("coefficients must be nonnegative");
  mantissa_.canonicalize();
  normalize();
}

Coefficient Coefficient::power_of_two(const mpz_class& exponent) { return Coefficient(mpq_class(1), exponent); }

void Coefficient::normalize() {
  if (sgn(mantissa_) == 0) {
    pow2_ = 0;
    return;
  }
  mpz_ptr num = mpq_numref(mantissa_.get_mpq_t());
  mpz_ptr den = mpq_denref(mantissa_.get_mpq_t());
  mp_bitcnt_t tz_num = mpz_scan1(num, 0);
  if (tz_num > 0) {
    mpz_tdiv_q_2exp(num, num, tz_num);
    pow2_ += static_cast<unsigned long>(tz_num);
  }
  mp_bitcnt_t tz_den = mpz_scan1(den, 0);
  if (tz_den > 0) {
    mpz_tdiv_q_2exp(den, den, tz_den);
    pow2_ -= static_cast<unsigned long>(tz_den);
  }
}

mpq_class Coefficient::to_rational(const Limits& limits) const {
  if (is_zero()) return 0;
  if (abs(pow2_) > limits.max_bits) throw ResourceLimit("binary exponent too large to materialize");
  mpq_class out = mantissa_;
  unsigned long shift = mpz_class(abs(pow2_)).get_ui();
  if (sgn(pow2_) > 0) {
    mpq_mul_2exp(out.get_mpq_t(), out.get_mpq_t(), shift);
  } else if (sgn(pow2_) < 0) {
    mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), shift);
  }
  return out;
}

double Coefficient::log2_approx() const {
  if (is_zero()) return -INFINITY;
  long exp_num = 0;
  long exp_den = 0;
  double num = mpz_get_d_2exp(&exp_num, mantissa_.get_num_mpz_t());
  double den = mpz_get_d_2exp(&exp_den, mantissa_.get_den_mpz_t());
  return std::log2(num / den) + static_cast<double>(exp_num - exp_den) + pow2_.get_d();
}

Coefficient Coefficient::pow(std::uint64_t exponent, const Limits& limits) const {
  if (exponent == 0) return Coefficient(1);
  if (is_zero()) return {};
  long bits = std::max(bit_length(mantissa_.get_num()), bit_length(mantissa_.get_den()));
  if (static_cast<double>(bits) * static_cast<double>(exponent) > static_cast<double>(limits.max_bits)) {
    throw ExponentOverflow("power would exceed the configured bit cap");
  }
  Coefficient out;
  mpz_pow_ui(mpq_numref(out.mantissa_.get_mpq_t()), mantissa_.get_num_mpz_t(), exponent);
  mpz_pow_ui(mpq_denref(out.mantissa_.get_mpq_t()), mantissa_.get_den_mpz_t(), exponent);
  out.pow2_ = pow2_ * mpz_class(std::to_string(exponent));
  return out;
}

Coefficient& Coefficient::operator*=(const Coefficient& other) {
  if (is_zero() || other.is_zero()) {
    *this = Coefficient();
    return *this;
  }
  mantissa_ *= other.mantissa_;
  pow2_ += other.pow2_;
  // Odd times odd stays odd; no renormalization needed.
  return *this;
}

Coefficient& Coefficient::operator+=(const Coefficient& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) {
    *this = other;
    return *this;
  }
  const Coefficient& low = pow2_ <= other.pow2_ ? *this : other;
  const Coefficient& high = pow2_ <= other.pow2_ ? other : *this;
  mpz_class gap = high.pow2_ - low.pow2_;
  if (gap > Limits{}.max_bits) throw ResourceLimit("coefficient sum spans too many binary orders");
  mpq_class shifted = high.mantissa_;
  mpq_mul_2exp(shifted.get_mpq_t(), shifted.get_mpq_t(), gap.get_ui());
  mpq_class sum = low.mantissa_ + shifted;
  mpz_class base = low.pow2_;
  mantissa_ = sum;
  pow2_ = base;
  normalize();
  return *this;
}

int compare(const Coefficient& a, const Coefficient& b) {
  if (a.is_zero() || b.is_zero()) {
    if (a.is_zero() && b.is_zero()) return 0;
    return a.is_zero() ? -1 : 1;
  }
  // log2(m) lies in [bits(num) - bits(den) - 1, bits(num) - bits(den) + 1).
  mpz_class span_a = a.pow2() + (bit_length(a.mantissa().get_num()) - bit_length(a.mantissa().get_den()));
  mpz_class span_b = b.pow2() + (bit_length(b.mantissa().get_num()) - bit_length(b.mantissa().get_den()));
  if (span_a - 1 >= span_b + 1) return 1;
  if (span_b - 1 >= span_a + 1) return -1;
  mpq_class lhs = a.mantissa();
  mpq_class rhs = b.mantissa();
  mpz_class diff = a.pow2() - b.pow2();
  if (sgn(diff) > 0) {
    mpq_mul_2exp(lhs.get_mpq_t(), lhs.get_mpq_t(), diff.get_ui());
  } else if (sgn(diff) < 0) {
    mpz_class neg = -diff;
    mpq_mul_2exp(rhs.get_mpq_t(), rhs.get_mpq_t(), neg.get_ui());
  }
  return cmp(lhs, rhs) < 0 ? -1 : (cmp(lhs, rhs) > 0 ? 1 : 0);
}

std::strong_ordering operator<=>(const Coefficient& a, const Coefficient& b) {
  int c = compare(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Coefficient parse_coefficient(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw ParseError("empty coefficient");
  auto star = s.find('*');
  std::string_view mant = s;
  std::string_view power;
  if (star != std::string_view::npos) {
    mant = s.substr(0, star);
    power = trim(s.substr(star + 1));
    if (power.substr(0, 2) != "2^") throw ParseError("expected 2^INT after '*' in '" + std::string(s) + "'");
  } else if (s.substr(0, 2) == "2^") {
    mant = "1";
    power = s;
  }
  mpz_class pow2 = power.empty() ? mpz_class(0) : parse_integer(power.substr(2), true);
  return Coefficient(parse_rational_impl(mant, false), pow2);
}

std::string to_string(const mpq_class& q) { return q.get_str(10); }

std::string to_string(const Coefficient& c) {
  if (c.is_zero()) return "0";
  if (c.mantissa() == 1) {
    if (c.pow2() == 0) return "1";
    return "2^" + c.pow2().get_str(10);
  }
  if (abs(c.pow2()) <= kPlainRenderWindow) return to_string(c.to_rational());
  return c.mantissa().get_num().get_str(10) + "/" + c.mantissa().get_den().get_str(10) + "*2^" +
         c.pow2().get_str(10);
}

mpq_class parse_rational(std::string_view text) { return parse_rational_impl(text, true); }

}  // namespace lcsparse
