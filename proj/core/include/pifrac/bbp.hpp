#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace pifrac::bbp {

// Hexadecimal digits of pi are extracted through the identity
//
//   pi = sum_k 16^-k [ 4/(8k+1) - 2/(8k+4) - 1/(8k+5) - 1/(8k+6) ]
//
// shifted by 16^d: the head (k <= d) is summed modulo 1 with modular
// exponentiation, the convergent tail is truncated once terms drop below
// 2^-(precision_bits+8). All arithmetic is exact fixed point, so identical
// inputs produce identical digits on every platform and thread schedule.

/// Minimum fractional bits carried by a series accumulator.
inline constexpr int kMinPrecisionBits = 192;

/// Digits emitted from a single series evaluation before re-anchoring.
inline constexpr int kDefaultDigitsPerAnchor = 24;

/// Guard bits that must separate emitted digits from accumulated error.
inline constexpr int kGuardBits = 32;

struct ExtractionOptions {
  int precision_bits = kMinPrecisionBits;
  int digits_per_anchor = kDefaultDigitsPerAnchor;
  // When false, requests that exceed one anchor's certified digits raise
  // accuracy_error instead of silently re-anchoring.
  bool reanchor = true;
};

/// A run of hex digits of pi. Position 1 is the first digit after the
/// radix point, so hex_digits_at(1, 4).digits == "243F".
struct HexBlock {
  std::uint64_t start_position = 1;
  std::string digits;  // uppercase 0-9A-F
};

/// Exact value in [0,1) stored as numerator / 2^precision_bits.
class FixedPointFraction {
public:
  FixedPointFraction(mpz_class numerator, int precision_bits);

  static FixedPointFraction zero(int precision_bits);

  const mpz_class& numerator() const { return numerator_; }
  int precision_bits() const { return precision_bits_; }

  double to_double() const;

  /// The leading `count` hex digits of the fractional expansion.
  std::string hex_digits(int count) const;

private:
  mpz_class numerator_;
  int precision_bits_;
};

/// base^exponent mod modulus without intermediate overflow for any
/// modulus below 2^63. modulus == 0 raises std::domain_error.
std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exponent,
                      std::uint64_t modulus);

/// frac( sum_k 16^(d-k) / (8k+j) ) for j in {1,4,5,6}, to precision_bits.
FixedPointFraction bbp_fractional_tail(std::uint64_t digit_offset, int j,
                                       int precision_bits = kMinPrecisionBits);

/// frac(4*S1 - 2*S4 - S5 - S6) at the given offset: the value whose hex
/// expansion is the digits of pi starting at position digit_offset + 1.
FixedPointFraction pi_fraction_at_offset(std::uint64_t digit_offset,
                                         int precision_bits = kMinPrecisionBits);

/// Largest digit count one series evaluation at `digit_offset` can certify
/// while keeping kGuardBits guard bits under `precision_bits`.
int certified_digits_per_eval(std::uint64_t digit_offset, int precision_bits);

/// Exactly `count` correct hex digits of pi starting at 1-based `position`.
/// Re-anchors with a fresh series evaluation every digits_per_anchor digits;
/// with re-anchoring disabled, raises accuracy_error for requests beyond
/// what a single evaluation certifies.
HexBlock hex_digits_at(std::uint64_t position, std::uint64_t count,
                       const ExtractionOptions& options = {});

}  // namespace pifrac::bbp
