#include "pifrac/fraction_table.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "pifrac/errors.hpp"

namespace pifrac {

namespace {

void require(bool ok, const char* message) {
  if (!ok) throw std::invalid_argument(message);
}

double exact_to_double(const mpz_class& num, const mpz_class& den) {
  return Fraction(num, den).to_double();
}

}  // namespace

PiFractionTable::PiFractionTable(std::vector<mpz_class> numerators,
                                 mpz_class denominator, int window_digits,
                                 std::uint64_t start_position)
    : numerators_(std::move(numerators)),
      denominator_(std::move(denominator)),
      window_digits_(window_digits),
      start_position_(start_position) {
  require(!numerators_.empty(), "PiFractionTable: at least one fraction");
  require(window_digits_ >= 1, "PiFractionTable: window_digits must be >= 1");
  require(start_position_ >= 1, "PiFractionTable: start_position must be >= 1");
  values_.reserve(numerators_.size());
  for (const mpz_class& n : numerators_) {
    if (sgn(n) < 0 || n >= denominator_)
      throw std::invalid_argument("PiFractionTable: fraction outside [0, 1)");
    values_.push_back(exact_to_double(n, denominator_));
  }
}

Fraction PiFractionTable::fraction(std::uint64_t i) const {
  if (i < 1 || i > count())
    throw std::out_of_range("PiFractionTable::fraction: index out of range");
  return Fraction(numerators_[i - 1], denominator_);
}

Fraction frac_from_hex(const bbp::HexBlock& block) {
  return Fraction::from_hex_digits(block.digits);
}

PiFractionTable build_table(std::uint64_t count, const BuildOptions& options) {
  require(count >= 1, "build_table: count must be >= 1");
  require(options.window_digits >= 1, "build_table: window_digits must be >= 1");
  require(options.start_position >= 1, "build_table: start_position must be >= 1");

  const std::uint64_t digits_needed =
      count + static_cast<std::uint64_t>(options.window_digits) - 1;

  // Extract the digit run in deterministic chunks; threads only change who
  // computes a chunk, never its contents.
  std::string digits(digits_needed, '\0');
  const unsigned threads = std::max(1u, options.threads);
  const std::uint64_t chunk =
      std::max<std::uint64_t>(options.bbp.digits_per_anchor,
                              (digits_needed + threads - 1) / threads);
  std::vector<std::thread> workers;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (std::uint64_t begin = 0; begin < digits_needed; begin += chunk) {
    const std::uint64_t length = std::min(chunk, digits_needed - begin);
    auto task = [&, begin, length] {
      try {
        const bbp::HexBlock block = bbp::hex_digits_at(
            options.start_position + begin, length, options.bbp);
        std::copy(block.digits.begin(), block.digits.end(),
                  digits.begin() + static_cast<std::ptrdiff_t>(begin));
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    };
    if (threads == 1) {
      task();
    } else {
      workers.emplace_back(task);
    }
  }
  for (std::thread& t : workers) t.join();
  if (failure) std::rethrow_exception(failure);

  // Slide the window one digit at a time: drop the leading digit, append
  // the next one.
  mpz_class window_den = 1;
  window_den <<= 4 * options.window_digits;
  mpz_class drop_den = 1;
  drop_den <<= 4 * (options.window_digits - 1);

  std::vector<mpz_class> numerators;
  numerators.reserve(count);
  mpz_class current =
      Fraction::from_hex_digits(
          std::string_view(digits).substr(0, options.window_digits))
          .numerator();
  numerators.push_back(current);
  for (std::uint64_t i = 1; i < count; ++i) {
    const char next = digits[i + options.window_digits - 1];
    const int v = next <= '9' ? next - '0' : next - 'A' + 10;
    current %= drop_den;
    current <<= 4;
    current += v;
    numerators.push_back(current);
  }

  return PiFractionTable(std::move(numerators), std::move(window_den),
                         options.window_digits, options.start_position);
}

void save_table(const PiFractionTable& table, std::ostream& out) {
  out << table.count() << '\n';
  for (std::uint64_t i = 1; i <= table.count(); ++i) {
    out << table.fraction(i).decimal_string(kStoredDecimalDigits) << '\n';
  }
}

void save_table(const PiFractionTable& table, const std::filesystem::path& destination) {
  std::ofstream out(destination, std::ios::binary);
  if (!out) throw io_error("save_table: cannot open " + destination.string());
  save_table(table, out);
  out.flush();
  if (!out) throw io_error("save_table: write failed for " + destination.string());
}

PiFractionTable load_table(std::istream& in) {
  std::string line;
  if (!std::getline(in, line))
    throw parse_error("load_table: missing count header");
  std::uint64_t declared = 0;
  try {
    std::size_t used = 0;
    declared = std::stoull(line, &used);
    if (used != line.size()) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw parse_error("load_table: malformed count header \"" + line + "\"");
  }
  if (declared == 0) throw parse_error("load_table: count header must be >= 1");

  std::vector<mpz_class> numerators;
  numerators.reserve(declared);
  std::uint64_t seen = 0;
  while (std::getline(in, line)) {
    if (line.empty() && in.eof()) break;
    ++seen;
    if (seen > declared) break;
    numerators.push_back(Fraction::from_decimal_text(line).numerator());
  }
  if (seen != declared) {
    std::ostringstream msg;
    msg << "load_table: header declares " << declared << " fractions but body has "
        << seen << " lines";
    throw parse_error(msg.str());
  }

  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, kStoredDecimalDigits);
  return PiFractionTable(std::move(numerators), std::move(den),
                         kDefaultWindowDigits, 1);
}

PiFractionTable load_table(const std::filesystem::path& source) {
  std::ifstream in(source, std::ios::binary);
  if (!in) throw io_error("load_table: cannot open " + source.string());
  return load_table(in);
}

DistributionStats distribution_stats(const PiFractionTable& table, int bin_count) {
  require(bin_count >= 1, "distribution_stats: bin_count must be >= 1");

  DistributionStats stats;
  stats.bin_count = bin_count;
  stats.total_points = table.count();
  stats.pdf_counts.assign(static_cast<std::size_t>(bin_count), 0);

  // Exact binning: fraction n/d lands in bin floor(n*B/d); the last bin's
  // closed upper edge is automatic since every fraction is below 1.
  mpz_class scaled;
  mpz_class sum = 0;
  for (std::uint64_t i = 1; i <= table.count(); ++i) {
    const Fraction f = table.fraction(i);
    scaled = f.numerator() * bin_count;
    mpz_tdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), f.denominator().get_mpz_t());
    ++stats.pdf_counts[scaled.get_ui()];
    sum += f.numerator();
  }
  stats.mean = exact_to_double(sum, table.denominator() * table.count());

  stats.cdf.resize(static_cast<std::size_t>(bin_count));
  double running = 0.0;
  for (int b = 0; b < bin_count; ++b) {
    running += static_cast<double>(stats.pdf_counts[static_cast<std::size_t>(b)]) /
               static_cast<double>(stats.total_points);
    stats.cdf[static_cast<std::size_t>(b)] = running;
  }
  return stats;
}

double chi_square_from_counts(std::span<const std::uint64_t> counts) {
  require(!counts.empty(), "chi_square_from_counts: need at least one bin");
  std::uint64_t total = 0;
  for (std::uint64_t c : counts) total += c;
  const double expected = static_cast<double>(total) / static_cast<double>(counts.size());
  double statistic = 0.0;
  for (std::uint64_t c : counts) {
    const double d = static_cast<double>(c) - expected;
    statistic += d * d / expected;
  }
  return statistic;
}

double chi_square_uniformity(const PiFractionTable& table, int bin_count) {
  require(bin_count >= 1, "chi_square_uniformity: bin_count must be >= 1");
  if (table.count() < static_cast<std::uint64_t>(bin_count) * 10) {
    throw std::domain_error(
        "chi_square_uniformity: table must hold at least 10 fractions per bin");
  }
  const DistributionStats stats = distribution_stats(table, bin_count);
  return chi_square_from_counts(stats.pdf_counts);
}

void save_stats_report(const DistributionStats& stats, std::ostream& out,
                       const StatsReportOptions& options) {
  const double avg_per_bin = static_cast<double>(stats.total_points) /
                             static_cast<double>(stats.bin_count);
  char row[96];
  out << "Pi Fraction Statistical Data\n";
  out << "Created: " << options.timestamp << '\n';
  out << "Fractions: " << stats.total_points << '\n';
  std::snprintf(row, sizeof row, "Mean: %.15f\n", stats.mean);
  out << row;
  out << "Norm Bin#  PDF  CDF\n";
  for (int b = 0; b < stats.bin_count; ++b) {
    const std::size_t idx = static_cast<std::size_t>(b);
    std::snprintf(row, sizeof row, "%.5f %.5f %.5f\n",
                  static_cast<double>(b + 1) / stats.bin_count,
                  static_cast<double>(stats.pdf_counts[idx]) / avg_per_bin,
                  stats.cdf[idx]);
    out << row;
  }
}

void save_stats_report(const DistributionStats& stats,
                       const std::filesystem::path& destination,
                       const StatsReportOptions& options) {
  std::ofstream out(destination, std::ios::binary);
  if (!out) throw io_error("save_stats_report: cannot open " + destination.string());
  save_stats_report(stats, out, options);
  out.flush();
  if (!out) throw io_error("save_stats_report: write failed for " + destination.string());
}

}  // namespace pifrac
