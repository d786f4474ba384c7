#include "pifrac/fraction.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "pifrac/errors.hpp"

namespace pifrac {

namespace {

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  return -1;
}

// Correctly rounded num/den for 0 <= num < den (mpq_get_d truncates, which
// would put exact decimals like 1/10 on the wrong side of the double grid).
double rational_to_double(const mpz_class& num, const mpz_class& den) {
  if (num == 0) return 0.0;
  const long num_bits = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2));
  const long den_bits = static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
  const long shift = den_bits - num_bits + 55;  // quotient gets 54-56 bits

  mpz_class scaled = num;
  scaled <<= shift;
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());

  std::uint64_t quotient = 0;
  mpz_export(&quotient, nullptr, -1, sizeof quotient, 0, 0, q.get_mpz_t());
  const int drop = std::bit_width(quotient) - 53;
  const std::uint64_t keep = quotient >> drop;
  const std::uint64_t dropped = quotient & ((std::uint64_t{1} << drop) - 1);
  const std::uint64_t half = std::uint64_t{1} << (drop - 1);
  const bool sticky = r != 0 || (dropped & (half - 1)) != 0;

  std::uint64_t mantissa = keep;
  if (dropped > half || (dropped == half && (sticky || (keep & 1)))) {
    ++mantissa;
  }
  return std::ldexp(static_cast<double>(mantissa), static_cast<int>(drop - shift));
}

}  // namespace

Fraction::Fraction(mpz_class numerator, mpz_class denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (sgn(den_) <= 0) throw std::invalid_argument("Fraction: denominator must be positive");
  if (sgn(num_) < 0 || num_ >= den_)
    throw std::invalid_argument("Fraction: value must lie in [0, 1)");
}

Fraction Fraction::from_hex_digits(std::string_view digits) {
  if (digits.empty())
    throw std::invalid_argument("from_hex_digits: block must be nonempty");
  mpz_class num = 0;
  for (char c : digits) {
    const int v = hex_value(c);
    if (v < 0)
      throw parse_error(std::string("from_hex_digits: invalid hex character '") + c + "'");
    num <<= 4;
    num += v;
  }
  mpz_class den = 1;
  den <<= 4 * digits.size();
  return Fraction(std::move(num), std::move(den));
}

Fraction Fraction::from_decimal_text(std::string_view text) {
  if (text.size() != 2 + kStoredDecimalDigits || text[0] != '0' || text[1] != '.')
    throw parse_error("from_decimal_text: expected \"0.\" followed by exactly 30 digits");
  mpz_class num = 0;
  for (char c : text.substr(2)) {
    if (c < '0' || c > '9')
      throw parse_error(std::string("from_decimal_text: invalid digit '") + c + "'");
    num *= 10;
    num += c - '0';
  }
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, kStoredDecimalDigits);
  return Fraction(std::move(num), std::move(den));
}

double Fraction::to_double() const { return rational_to_double(num_, den_); }

std::string Fraction::decimal_string(int digits) const {
  if (digits < 1) throw std::invalid_argument("decimal_string: digits must be >= 1");
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  mpz_class scaled = num_ * scale / den_;  // truncation toward zero
  std::string body = scaled.get_str();
  if (body.size() < static_cast<std::size_t>(digits)) {
    body.insert(0, static_cast<std::size_t>(digits) - body.size(), '0');
  }
  return "0." + body;
}

Fraction Fraction::times16_mod1() const {
  mpz_class num = num_ * 16 % den_;
  return Fraction(std::move(num), den_);
}

Fraction Fraction::abs_difference(const Fraction& a, const Fraction& b) {
  mpz_class num = a.num_ * b.den_ - b.num_ * a.den_;
  if (sgn(num) < 0) num = -num;
  return Fraction(std::move(num), a.den_ * b.den_);
}

bool Fraction::less_than(const mpz_class& p, const mpz_class& q) const {
  return num_ * q < p * den_;
}

bool Fraction::operator==(const Fraction& other) const {
  return num_ * other.den_ == other.num_ * den_;
}

}  // namespace pifrac
