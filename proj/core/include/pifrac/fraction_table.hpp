#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "pifrac/bbp.hpp"
#include "pifrac/fraction.hpp"

namespace pifrac {

/// Default hex digits per fraction window.
inline constexpr int kDefaultWindowDigits = 24;

/// Ordered, immutable sequence of pi fractions, 1-based like the data files
/// it persists to. Fraction i is the value of the window_digits hex digits
/// of pi starting at hex position start_position + i - 1.
class PiFractionTable {
public:
  PiFractionTable(std::vector<mpz_class> numerators, mpz_class denominator,
                  int window_digits, std::uint64_t start_position);

  std::uint64_t count() const { return numerators_.size(); }
  int window_digits() const { return window_digits_; }
  std::uint64_t start_position() const { return start_position_; }

  /// Exact value of fraction i (1-based). std::out_of_range past count().
  Fraction fraction(std::uint64_t i) const;

  /// Cached double of fraction i (1-based); the sampling hot path.
  double value(std::uint64_t i) const { return values_.at(i - 1); }

  const mpz_class& denominator() const { return denominator_; }

private:
  std::vector<mpz_class> numerators_;
  mpz_class denominator_;
  std::vector<double> values_;
  int window_digits_;
  std::uint64_t start_position_;
};

struct BuildOptions {
  int window_digits = kDefaultWindowDigits;
  std::uint64_t start_position = 1;
  unsigned threads = 1;  // digit extraction parallelism; result is identical
  bbp::ExtractionOptions bbp;
};

/// The value of a hex digit block as a fraction in [0, 1).
Fraction frac_from_hex(const bbp::HexBlock& block);

/// Builds `count` fractions from sliding windows over count+window-1
/// freshly extracted hex digits of pi.
PiFractionTable build_table(std::uint64_t count, const BuildOptions& options = {});

/// Text format: line 1 is the fraction count, then one fraction per line as
/// "0." plus exactly 30 decimal digits. LF line endings.
void save_table(const PiFractionTable& table, const std::filesystem::path& destination);
void save_table(const PiFractionTable& table, std::ostream& out);

/// io_error when the file is missing, parse_error on a malformed line or a
/// header count that disagrees with the body.
PiFractionTable load_table(const std::filesystem::path& source);
PiFractionTable load_table(std::istream& in);

struct DistributionStats {
  int bin_count = 0;
  std::vector<std::uint64_t> pdf_counts;  // occupancy of [(b-1)/B, b/B)
  std::vector<double> cdf;                // running sum of pdf/total
  double mean = 0.0;
  std::uint64_t total_points = 0;
};

DistributionStats distribution_stats(const PiFractionTable& table, int bin_count = 1000);

/// sum_b (observed_b - expected)^2 / expected with expected = total / bins.
double chi_square_from_counts(std::span<const std::uint64_t> counts);

/// Table-level uniformity statistic. Requires count >= 10 * bin_count
/// (std::domain_error otherwise).
double chi_square_uniformity(const PiFractionTable& table, int bin_count);

struct StatsReportOptions {
  std::string timestamp = "-";  // wall clock only by explicit opt-in
};

/// PDF/CDF report: header block (creation stamp, count, mean), the column
/// header "Norm Bin#  PDF  CDF", then one row per bin with the normalized
/// upper bin edge, the pdf count normalized by average points per bin, and
/// the cdf.
void save_stats_report(const DistributionStats& stats,
                       const std::filesystem::path& destination,
                       const StatsReportOptions& options = {});
void save_stats_report(const DistributionStats& stats, std::ostream& out,
                       const StatsReportOptions& options = {});

}  // namespace pifrac
