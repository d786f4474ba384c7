#include "pifrac/bbp.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <stdexcept>

#include "pifrac/errors.hpp"

namespace pifrac::bbp {

namespace {

void require(bool ok, const char* message) {
  if (!ok) throw std::invalid_argument(message);
}

// Upper bound on the bits of accumulated truncation error in the combined
// series at offset d: each of the ~(d + precision/4 + 2) terms per series
// is floored, and the four series enter with total weight 4+2+1+1 = 8.
int error_bits(std::uint64_t digit_offset, int precision_bits) {
  const std::uint64_t terms =
      digit_offset + static_cast<std::uint64_t>(precision_bits) / 4 + 3;
  return std::bit_width(std::uint64_t{8} * terms);
}

}  // namespace

FixedPointFraction::FixedPointFraction(mpz_class numerator, int precision_bits)
    : numerator_(std::move(numerator)), precision_bits_(precision_bits) {
  require(precision_bits_ >= kMinPrecisionBits,
          "FixedPointFraction: precision_bits must be >= 192");
  require(sgn(numerator_) >= 0, "FixedPointFraction: numerator must be >= 0");
  require(mpz_sizeinbase(numerator_.get_mpz_t(), 2) <=
                  static_cast<std::size_t>(precision_bits_) ||
              numerator_ == 0,
          "FixedPointFraction: numerator must be < 2^precision_bits");
  if (numerator_ != 0 &&
      mpz_sizeinbase(numerator_.get_mpz_t(), 2) ==
          static_cast<std::size_t>(precision_bits_)) {
    // sizeinbase == bits still admits 2^bits - 1; only exact 2^bits is out.
    mpz_class limit = 1;
    limit <<= precision_bits_;
    require(numerator_ < limit,
            "FixedPointFraction: numerator must be < 2^precision_bits");
  }
}

FixedPointFraction FixedPointFraction::zero(int precision_bits) {
  return FixedPointFraction(mpz_class(0), precision_bits);
}

double FixedPointFraction::to_double() const {
  return std::ldexp(numerator_.get_d(), -precision_bits_);
}

std::string FixedPointFraction::hex_digits(int count) const {
  require(count >= 0, "hex_digits: count must be >= 0");
  if (count == 0) return {};
  require(4 * count <= precision_bits_,
          "hex_digits: count exceeds stored precision");
  mpz_class top = numerator_ >> (precision_bits_ - 4 * count);
  std::string text = top.get_str(16);
  for (char& c : text) c = static_cast<char>(std::toupper(c));
  if (text.size() < static_cast<std::size_t>(count)) {
    text.insert(0, static_cast<std::size_t>(count) - text.size(), '0');
  }
  return text;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exponent,
                      std::uint64_t modulus) {
  if (modulus == 0) throw std::domain_error("mod_pow: modulus must be >= 1");
  if (modulus == 1) return 0;
  unsigned __int128 result = 1;
  unsigned __int128 b = base % modulus;
  while (exponent > 0) {
    if (exponent & 1) result = result * b % modulus;
    b = b * b % modulus;
    exponent >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

FixedPointFraction bbp_fractional_tail(std::uint64_t digit_offset, int j,
                                       int precision_bits) {
  require(j == 1 || j == 4 || j == 5 || j == 6,
          "bbp_fractional_tail: j must be one of {1,4,5,6}");
  require(precision_bits >= kMinPrecisionBits,
          "bbp_fractional_tail: precision_bits must be >= 192");

  mpz_class acc = 0;
  mpz_class mask = 1;
  mask <<= precision_bits;
  mask -= 1;

  // Head k <= d: frac(16^(d-k)/(8k+j)) = (16^(d-k) mod (8k+j)) / (8k+j).
  mpz_class term;
  for (std::uint64_t k = 0; k <= digit_offset; ++k) {
    const std::uint64_t m = 8 * k + static_cast<std::uint64_t>(j);
    const std::uint64_t r = mod_pow(16, digit_offset - k, m);
    term = r;
    term <<= precision_bits;
    mpz_tdiv_q_ui(term.get_mpz_t(), term.get_mpz_t(), m);
    acc += term;
    acc &= mask;
  }

  // Tail k > d: 16^(d-k)/(8k+j) = 2^-4(k-d) / (8k+j), truncated once the
  // term falls below 2^-(precision_bits+8).
  for (std::uint64_t k = digit_offset + 1;; ++k) {
    const std::uint64_t shift = 4 * (k - digit_offset);
    if (shift > static_cast<std::uint64_t>(precision_bits) + 8) break;
    if (shift > static_cast<std::uint64_t>(precision_bits)) continue;
    term = 1;
    term <<= precision_bits - static_cast<int>(shift);
    mpz_tdiv_q_ui(term.get_mpz_t(), term.get_mpz_t(),
                  8 * k + static_cast<std::uint64_t>(j));
    if (term == 0) break;
    acc += term;
    acc &= mask;
  }

  return FixedPointFraction(std::move(acc), precision_bits);
}

FixedPointFraction pi_fraction_at_offset(std::uint64_t digit_offset,
                                         int precision_bits) {
  const FixedPointFraction s1 = bbp_fractional_tail(digit_offset, 1, precision_bits);
  const FixedPointFraction s4 = bbp_fractional_tail(digit_offset, 4, precision_bits);
  const FixedPointFraction s5 = bbp_fractional_tail(digit_offset, 5, precision_bits);
  const FixedPointFraction s6 = bbp_fractional_tail(digit_offset, 6, precision_bits);

  mpz_class combined = 4 * s1.numerator() - 2 * s4.numerator() -
                       s5.numerator() - s6.numerator();
  // Reduce into [0, 2^precision_bits): floor-division remainder is
  // non-negative for a positive power-of-two modulus.
  mpz_fdiv_r_2exp(combined.get_mpz_t(), combined.get_mpz_t(),
                  static_cast<mp_bitcnt_t>(precision_bits));
  return FixedPointFraction(std::move(combined), precision_bits);
}

int certified_digits_per_eval(std::uint64_t digit_offset, int precision_bits) {
  const int spare = precision_bits - kGuardBits -
                    error_bits(digit_offset, precision_bits);
  return spare < 0 ? 0 : spare / 4;
}

HexBlock hex_digits_at(std::uint64_t position, std::uint64_t count,
                       const ExtractionOptions& options) {
  require(position >= 1, "hex_digits_at: position must be >= 1");
  require(options.precision_bits >= kMinPrecisionBits,
          "hex_digits_at: precision_bits must be >= 192");
  require(options.digits_per_anchor >= 1,
          "hex_digits_at: digits_per_anchor must be >= 1");

  HexBlock block;
  block.start_position = position;
  if (count == 0) return block;
  block.digits.reserve(count);

  std::uint64_t cursor = position;
  std::uint64_t remaining = count;
  while (remaining > 0) {
    const std::uint64_t offset = cursor - 1;
    const int certified =
        certified_digits_per_eval(offset, options.precision_bits);
    if (certified < 1) {
      throw accuracy_error(
          "hex_digits_at: position too large for the configured precision");
    }
    std::uint64_t emit = std::min<std::uint64_t>(
        remaining,
        std::min<std::uint64_t>(static_cast<std::uint64_t>(certified),
                                static_cast<std::uint64_t>(options.digits_per_anchor)));
    if (!options.reanchor && emit < remaining) {
      throw accuracy_error(
          "hex_digits_at: request exceeds one evaluation's certified digits "
          "and re-anchoring is disabled");
    }
    const FixedPointFraction value =
        pi_fraction_at_offset(offset, options.precision_bits);
    block.digits += value.hex_digits(static_cast<int>(emit));
    cursor += emit;
    remaining -= emit;
  }
  return block;
}

}  // namespace pifrac::bbp
