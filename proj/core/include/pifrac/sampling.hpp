#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "pifrac/fraction_table.hpp"

namespace pifrac::sampling {

/// Cursor over an immutable fraction table. Draws advance the index by
/// `increment` and wrap to 1 once it passes the table count. Single-owner:
/// draws mutate the cursor and must not be shared across threads.
struct SamplerState {
  const PiFractionTable* table = nullptr;
  std::uint64_t index = 1;      // 1-based, always within [1, table->count()]
  std::uint64_t increment = 1;  // >= 1

  void validate() const;
};

/// a + (b-a) * fraction[index], bounds swapped when a > b; advances the cursor.
double next_uniform(SamplerState& state, double a, double b);

/// Pure indexed draw: a + (b-a) * fraction[((k-1) mod count) + 1], k >= 1.
double indexed_uniform(const PiFractionTable& table, std::uint64_t k, double a,
                       double b);

/// Uniform integer in [n, m] (swapped if n > m): n + floor((m-n+1) * u).
long long integer_in(SamplerState& state, long long n, long long m);
long long integer_in(const PiFractionTable& table, std::uint64_t k, long long n,
                     long long m);

/// Digit reversal of `index` in `base`, placed after the radix point.
double radical_inverse(std::uint64_t index, std::uint64_t base);

/// The n-th prime (1-based): nth_prime(1) == 2.
std::uint64_t nth_prime(int n);

/// Coordinate i of the Halton point is radical_inverse(index, p_i) with p_i
/// the i-th prime.
std::vector<double> halton_point(std::uint64_t index, int dims);

/// Reproducible 64-bit mixing generator for the pseudorandom comparison
/// source (splitmix64).
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next_uint64();
  double next_double();  // in [0, 1)

private:
  std::uint64_t state_;
};

inline constexpr std::uint64_t kDefaultPrngSeed = 1;

enum class Source { pi_fraction, halton, van_der_corput, prng };

Source source_from_name(std::string_view name);  // std::domain_error on unknown
std::string_view source_name(Source source);

struct ScatterSpec {
  int dims = 30;
  int points = 1000;
  int dim_a = 27;
  int dim_b = 28;
  Source source = Source::pi_fraction;

  void validate() const;
};

/// points x dims matrix filled row-major: the coordinates of point p are
/// drawn consecutively before point p+1.
struct SampleMatrix {
  int points = 0;
  int dims = 0;
  std::vector<double> data;  // row-major
  bool table_overlap = false;  // pi-fraction source consumed past the table

  double at(int point, int dim) const {  // 1-based
    return data[static_cast<std::size_t>(point - 1) * dims + (dim - 1)];
  }
  std::vector<double> column(int dim) const;
};

SampleMatrix sample_matrix(const ScatterSpec& spec, SamplerState& state,
                           std::uint64_t prng_seed = kDefaultPrngSeed);

/// Sample Pearson correlation coefficient. std::domain_error when either
/// input has zero variance.
double pearson(std::span<const double> xs, std::span<const double> ys);

/// Fraction of index pairs with y within `tolerance` of frac(b * x), i.e.
/// min over integers k of |y - (b*x - k)| < tolerance.
double branch_alignment(std::span<const double> xs, std::span<const double> ys,
                        int branch_factor, double tolerance);

/// One line per point: the dim_a and dim_b coordinates, fixed format with
/// five decimals, single space separator, LF endings.
void write_scatter_data(const SampleMatrix& matrix, int dim_a, int dim_b,
                        std::ostream& out);

/// Title block matching the interactive test program's plot captions.
std::string scatter_title(const ScatterSpec& spec, std::uint64_t start_index,
                          std::uint64_t increment);

/// Command file for an external plotting tool (grid, title, axis labels in
/// the "x27" style, points plot of the data file).
std::string plot_script(const ScatterSpec& spec, std::string_view data_filename,
                        std::string_view title);

struct ScatterExportOptions {
  bool emit_plot_script = false;
  std::filesystem::path script_path;  // defaults to data path + ".gp"
  std::uint64_t prng_seed = kDefaultPrngSeed;
};

/// Samples the matrix and writes the scatter data file (and optional plot
/// script). Returns the sampled matrix.
SampleMatrix scatter_export(const ScatterSpec& spec, SamplerState& state,
                            const std::filesystem::path& data_path,
                            const ScatterExportOptions& options = {});

}  // namespace pifrac::sampling
