#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace pifrac {

/// Stored decimal digits per fraction in the table file format.
inline constexpr int kStoredDecimalDigits = 30;

/// Exact rational value in [0, 1). Built tables carry denominator 16^w,
/// loaded tables 10^30; the denominator is preserved as constructed so
/// sliding-window comparisons stay exact.
class Fraction {
public:
  Fraction() : num_(0), den_(1) {}
  Fraction(mpz_class numerator, mpz_class denominator);

  /// Value of "0." followed by the given hex digits. parse_error on any
  /// character outside 0-9, A-F, a-f; std::invalid_argument on empty input.
  static Fraction from_hex_digits(std::string_view digits);

  /// Parses the persisted form: "0." followed by exactly 30 decimal digits.
  static Fraction from_decimal_text(std::string_view text);

  const mpz_class& numerator() const { return num_; }
  const mpz_class& denominator() const { return den_; }

  double to_double() const;

  /// First `digits` decimal digits of the exact value (truncated), as
  /// "0.<digits>".
  std::string decimal_string(int digits = kStoredDecimalDigits) const;

  /// frac(16 * x), exact.
  Fraction times16_mod1() const;

  static Fraction abs_difference(const Fraction& a, const Fraction& b);

  /// value < p / q, exact.
  bool less_than(const mpz_class& p, const mpz_class& q) const;

  bool operator==(const Fraction& other) const;

private:
  mpz_class num_;
  mpz_class den_;
};

}  // namespace pifrac
