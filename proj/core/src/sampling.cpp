#include "pifrac/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "pifrac/errors.hpp"

namespace pifrac::sampling {

namespace {

void require(bool ok, const char* message) {
  if (!ok) throw std::invalid_argument(message);
}

std::uint64_t wrap_explicit_index(const PiFractionTable& table, std::uint64_t k) {
  return (k - 1) % table.count() + 1;
}

void advance_cursor(SamplerState& state) {
  state.index += state.increment;
  if (state.index > state.table->count()) state.index = 1;
}

long long integer_from_unit(double u, long long n, long long m) {
  if (n > m) std::swap(n, m);
  const double span = static_cast<double>(m - n + 1);
  long long value = n + static_cast<long long>(std::floor(span * u));
  return std::min(value, m);  // u is below 1 but rounding can touch the edge
}

}  // namespace

void SamplerState::validate() const {
  require(table != nullptr, "SamplerState: table must be set");
  require(increment >= 1, "SamplerState: increment must be >= 1");
  require(index >= 1 && index <= table->count(),
          "SamplerState: index must lie in [1, table.count]");
}

double next_uniform(SamplerState& state, double a, double b) {
  state.validate();
  if (a > b) std::swap(a, b);
  const double value = a + (b - a) * state.table->value(state.index);
  advance_cursor(state);
  return value;
}

double indexed_uniform(const PiFractionTable& table, std::uint64_t k, double a,
                       double b) {
  require(k >= 1, "indexed_uniform: k must be >= 1");
  return a + (b - a) * table.value(wrap_explicit_index(table, k));
}

long long integer_in(SamplerState& state, long long n, long long m) {
  state.validate();
  const double u = state.table->value(state.index);
  advance_cursor(state);
  return integer_from_unit(u, n, m);
}

long long integer_in(const PiFractionTable& table, std::uint64_t k, long long n,
                     long long m) {
  require(k >= 1, "integer_in: k must be >= 1");
  return integer_from_unit(table.value(wrap_explicit_index(table, k)), n, m);
}

double radical_inverse(std::uint64_t index, std::uint64_t base) {
  require(index >= 1, "radical_inverse: index must be >= 1");
  require(base >= 2, "radical_inverse: base must be >= 2");
  double result = 0.0;
  double scale = 1.0 / static_cast<double>(base);
  while (index > 0) {
    result += static_cast<double>(index % base) * scale;
    index /= base;
    scale /= static_cast<double>(base);
  }
  return result;
}

std::uint64_t nth_prime(int n) {
  require(n >= 1, "nth_prime: n must be >= 1");
  static const std::vector<std::uint64_t> primes = [] {
    // Sieve comfortably past the 200th prime (1223).
    constexpr int kLimit = 1300;
    std::vector<bool> composite(kLimit + 1, false);
    std::vector<std::uint64_t> found;
    for (int p = 2; p <= kLimit; ++p) {
      if (composite[p]) continue;
      found.push_back(static_cast<std::uint64_t>(p));
      for (int q = p * p; q <= kLimit; q += p) composite[q] = true;
    }
    return found;
  }();
  require(static_cast<std::size_t>(n) <= primes.size(),
          "nth_prime: n beyond the sieved range");
  return primes[static_cast<std::size_t>(n - 1)];
}

std::vector<double> halton_point(std::uint64_t index, int dims) {
  require(dims >= 1, "halton_point: dims must be >= 1");
  std::vector<double> point;
  point.reserve(static_cast<std::size_t>(dims));
  for (int i = 1; i <= dims; ++i) {
    point.push_back(radical_inverse(index, nth_prime(i)));
  }
  return point;
}

std::uint64_t SplitMix64::next_uint64() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double SplitMix64::next_double() {
  return static_cast<double>(next_uint64() >> 11) * 0x1.0p-53;
}

Source source_from_name(std::string_view name) {
  if (name == "pifrac") return Source::pi_fraction;
  if (name == "halton") return Source::halton;
  if (name == "vdc") return Source::van_der_corput;
  if (name == "prng") return Source::prng;
  throw std::domain_error("unknown sample source \"" + std::string(name) + "\"");
}

std::string_view source_name(Source source) {
  switch (source) {
    case Source::pi_fraction: return "pifrac";
    case Source::halton: return "halton";
    case Source::van_der_corput: return "vdc";
    case Source::prng: return "prng";
  }
  return "?";
}

void ScatterSpec::validate() const {
  require(dims >= 1, "ScatterSpec: dims must be >= 1");
  require(points >= 1, "ScatterSpec: points must be >= 1");
  require(dim_a >= 1 && dim_a <= dims, "ScatterSpec: dim_a must lie in [1, dims]");
  require(dim_b >= 1 && dim_b <= dims, "ScatterSpec: dim_b must lie in [1, dims]");
}

std::vector<double> SampleMatrix::column(int dim) const {
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(points));
  for (int p = 1; p <= points; ++p) values.push_back(at(p, dim));
  return values;
}

SampleMatrix sample_matrix(const ScatterSpec& spec, SamplerState& state,
                           std::uint64_t prng_seed) {
  spec.validate();
  SampleMatrix matrix;
  matrix.points = spec.points;
  matrix.dims = spec.dims;
  matrix.data.reserve(static_cast<std::size_t>(spec.points) * spec.dims);

  const std::uint64_t draws =
      static_cast<std::uint64_t>(spec.points) * static_cast<std::uint64_t>(spec.dims);

  switch (spec.source) {
    case Source::pi_fraction: {
      state.validate();
      matrix.table_overlap = draws > state.table->count();
      for (std::uint64_t d = 0; d < draws; ++d) {
        matrix.data.push_back(next_uniform(state, 0.0, 1.0));
      }
      break;
    }
    case Source::van_der_corput: {
      std::uint64_t n = state.index;
      for (std::uint64_t d = 0; d < draws; ++d) {
        matrix.data.push_back(radical_inverse(n, 2));
        n += state.increment;
      }
      break;
    }
    case Source::halton: {
      for (int p = 0; p < spec.points; ++p) {
        const std::uint64_t index =
            state.index + static_cast<std::uint64_t>(p) * state.increment;
        for (int i = 1; i <= spec.dims; ++i) {
          matrix.data.push_back(radical_inverse(index, nth_prime(i)));
        }
      }
      break;
    }
    case Source::prng: {
      SplitMix64 rng(prng_seed);
      for (std::uint64_t d = 0; d < draws; ++d) {
        matrix.data.push_back(rng.next_double());
      }
      break;
    }
  }
  return matrix;
}

double pearson(std::span<const double> xs, std::span<const double> ys) {
  require(xs.size() == ys.size(), "pearson: inputs must have equal length");
  require(xs.size() >= 2, "pearson: need at least two samples");
  const double n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw std::domain_error("pearson: correlation undefined for zero variance");
  }
  return sxy / std::sqrt(sxx * syy);
}

double branch_alignment(std::span<const double> xs, std::span<const double> ys,
                        int branch_factor, double tolerance) {
  require(xs.size() == ys.size(), "branch_alignment: inputs must have equal length");
  require(!xs.empty(), "branch_alignment: need at least one pair");
  require(branch_factor >= 2, "branch_alignment: branch_factor must be >= 2");
  require(tolerance >= 0.0, "branch_alignment: tolerance must be >= 0");
  std::size_t aligned = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = branch_factor * xs[i] - ys[i];
    if (std::abs(r - std::round(r)) < tolerance) ++aligned;
  }
  return static_cast<double>(aligned) / static_cast<double>(xs.size());
}

void write_scatter_data(const SampleMatrix& matrix, int dim_a, int dim_b,
                        std::ostream& out) {
  require(dim_a >= 1 && dim_a <= matrix.dims, "write_scatter_data: dim_a range");
  require(dim_b >= 1 && dim_b <= matrix.dims, "write_scatter_data: dim_b range");
  char line[40];
  for (int p = 1; p <= matrix.points; ++p) {
    std::snprintf(line, sizeof line, "%.5f %.5f\n", matrix.at(p, dim_a),
                  matrix.at(p, dim_b));
    out << line;
  }
}

std::string scatter_title(const ScatterSpec& spec, std::uint64_t start_index,
                          std::uint64_t increment) {
  std::string label;
  switch (spec.source) {
    case Source::pi_fraction: label = "PI FRACTION"; break;
    case Source::halton: label = "HALTON"; break;
    case Source::van_der_corput: label = "VAN DER CORPUT"; break;
    case Source::prng: label = "PSEUDORANDOM"; break;
  }
  std::ostringstream title;
  title << label << " POINTS IN " << spec.dims << " DIMENSIONS, " << spec.points
        << " POINTS.\\n"
        << "Plot of dimensions " << spec.dim_a << " and " << spec.dim_b << ".\\n"
        << "[Index initialized to " << start_index << " with index increment of "
        << increment << "]";
  return title.str();
}

std::string plot_script(const ScatterSpec& spec, std::string_view data_filename,
                        std::string_view title) {
  std::ostringstream script;
  script << "set grid xtics 5\n"
         << "set grid ytics 5\n"
         << "set grid mxtics\n"
         << "set grid mytics\n"
         << "show grid\n"
         << "set title \"" << title << "\"\n"
         << "set xlabel \"x" << spec.dim_a << "\"\n"
         << "set ylabel \"x" << spec.dim_b << "\"\n"
         << "plot \"" << data_filename << "\" notitle with points pointsize 1 linewidth 2\n";
  return script.str();
}

SampleMatrix scatter_export(const ScatterSpec& spec, SamplerState& state,
                            const std::filesystem::path& data_path,
                            const ScatterExportOptions& options) {
  const std::uint64_t start_index = state.index;
  const std::uint64_t increment = state.increment;
  SampleMatrix matrix = sample_matrix(spec, state, options.prng_seed);

  std::ofstream out(data_path, std::ios::binary);
  if (!out) throw io_error("scatter_export: cannot open " + data_path.string());
  write_scatter_data(matrix, spec.dim_a, spec.dim_b, out);
  out.flush();
  if (!out) throw io_error("scatter_export: write failed for " + data_path.string());

  if (options.emit_plot_script) {
    std::filesystem::path script_path = options.script_path;
    if (script_path.empty()) {
      script_path = data_path;
      script_path += ".gp";
    }
    std::ofstream script(script_path, std::ios::binary);
    if (!script) throw io_error("scatter_export: cannot open " + script_path.string());
    script << plot_script(spec, data_path.filename().string(),
                          scatter_title(spec, start_index, increment));
    script.flush();
    if (!script) throw io_error("scatter_export: write failed for " + script_path.string());
  }
  return matrix;
}

}  // namespace pifrac::sampling
