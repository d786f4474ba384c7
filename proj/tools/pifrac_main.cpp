// pifrac: deterministic sampling and optimization toolkit driven by pi
// fractions. Subcommands: digits, gen, stats, scatter, gasr, bench.

#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pifrac/bbp.hpp"
#include "pifrac/benchmarks.hpp"
#include "pifrac/errors.hpp"
#include "pifrac/fraction_table.hpp"
#include "pifrac/gasr.hpp"
#include "pifrac/sampling.hpp"

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitFile = 3;
constexpr int kExitAccuracy = 4;

// Flat key = value manifest written alongside each command's outputs.
class Manifest {
public:
  Manifest(std::string command) : command_(std::move(command)), start_(Clock::now()) {}

  void parameter(const std::string& key, const std::string& value) {
    parameters_.emplace_back(key, value);
  }
  template <typename T>
  void parameter(const std::string& key, const T& value) {
    std::ostringstream text;
    text << value;
    parameters_.emplace_back(key, text.str());
  }
  void output(const fs::path& path) { outputs_.push_back(path.string()); }
  void clock_used() { clock_used_ = true; }

  void write(const fs::path& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw pifrac::io_error("cannot open manifest " + path.string());
    out << "command = " << command_ << '\n';
    for (const auto& [key, value] : parameters_) {
      out << "parameter." << key << " = " << value << '\n';
    }
    for (std::size_t i = 0; i < outputs_.size(); ++i) {
      out << "output." << i << " = " << outputs_[i] << '\n';
    }
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start_);
    out << "timing_ms = " << elapsed.count() << '\n';
    out << "clock_used = " << (clock_used_ ? "yes" : "no") << '\n';
  }

private:
  std::string command_;
  Clock::time_point start_;
  std::vector<std::pair<std::string, std::string>> parameters_;
  std::vector<std::string> outputs_;
  bool clock_used_ = false;
};

fs::path manifest_path(const fs::path& out) {
  fs::path p = out;
  p += ".manifest";
  return p;
}

std::string wall_clock_stamp() {
  const std::time_t now = std::time(nullptr);
  char text[64];
  std::strftime(text, sizeof text, "%Y-%m-%d %H:%M:%S", std::localtime(&now));
  return text;
}

// Published single-run reference results for the six-function suite
// (best fitness and evaluation counts at 10/20/30 dimensions), printed
// beside fresh runs as clearly-labeled literature values.
struct ReferenceResult {
  double best_fitness;
  long long evaluations;
};

std::optional<ReferenceResult> reference_result(pifrac::benchmarks::FunctionId id,
                                                int dims) {
  using pifrac::benchmarks::FunctionId;
  static const std::map<std::pair<FunctionId, int>, ReferenceResult> table = {
      {{FunctionId::ackley, 10}, {-5.762878e-4, 656308}},
      {{FunctionId::ackley, 20}, {-1.161337e-2, 328243}},
      {{FunctionId::ackley, 30}, {-6.988124e-3, 457978}},
      {{FunctionId::cosine_mixture, 10}, {0.9999997, 457978}},
      {{FunctionId::cosine_mixture, 20}, {1.9999993, 457978}},
      {{FunctionId::cosine_mixture, 30}, {2.9999981, 394558}},
      {{FunctionId::exponential, 10}, {0.9999999, 361090}},
      {{FunctionId::exponential, 20}, {0.9999999, 294763}},
      {{FunctionId::exponential, 30}, {0.9999999, 328243}},
      {{FunctionId::griewank, 10}, {-0.004429, 492372}},
      {{FunctionId::griewank, 20}, {-0.015874, 361090}},
      {{FunctionId::griewank, 30}, {-0.002139, 457978}},
      {{FunctionId::rastrigin, 10}, {-1.057361e-4, 425640}},
      {{FunctionId::rastrigin, 20}, {-1.203252e-3, 394558}},
      {{FunctionId::rastrigin, 30}, {-9.932735e-5, 492372}},
      {{FunctionId::schwefel, 10}, {-7.753379e-4, 457978}},
      {{FunctionId::schwefel, 20}, {-7.666976e-4, 394558}},
      {{FunctionId::schwefel, 30}, {-9.400238e-3, 294763}},
  };
  const auto it = table.find({id, dims});
  if (it == table.end()) return std::nullopt;
  return it->second;
}

struct GaFlags {
  int population = 2500;
  int generations = 100;
  double crossover_probability = 0.8;
  double mutation_probability = 0.02;
  double w = 0.5;
  double alpha = 2.0;
  double tol = 1e-5;
  bool no_early_termination = false;
  std::uint64_t index_offset = 0;
  bool rastrigin_wide = false;
  bool griewank_shifted = false;
};

void add_ga_flags(CLI::App* cmd, GaFlags& flags) {
  cmd->add_option("--population", flags.population, "Chromosomes per generation (even)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--generations", flags.generations, "Generation count")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--crossover-probability", flags.crossover_probability,
                  "Crossover gate probability")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--mutation-probability", flags.mutation_probability,
                  "Mutation gate probability")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--w", flags.w, "Crossover/mutation weight");
  cmd->add_option("--alpha", flags.alpha, "Mutation schedule shape parameter");
  cmd->add_option("--tol", flags.tol, "Early-termination tolerance");
  cmd->add_flag("--no-early-termination", flags.no_early_termination,
                "Always run every generation");
  cmd->add_option("--index-offset", flags.index_offset,
                  "Offset added to every fraction index scheme");
  cmd->add_flag("--rastrigin-wide-bounds", flags.rastrigin_wide,
                "Rastrigin bounds +-10 instead of +-5.12");
  cmd->add_flag("--griewank-shifted", flags.griewank_shifted,
                "Shift every griewank coordinate by 100");
}

pifrac::gasr::GasrConfig make_config(const GaFlags& flags,
                                     const pifrac::benchmarks::BenchmarkSpec& spec,
                                     const pifrac::PiFractionTable& table,
                                     std::uint64_t index_offset) {
  pifrac::gasr::GasrConfig config;
  config.population = flags.population;
  config.generations = flags.generations;
  config.crossover_probability = flags.crossover_probability;
  config.mutation_probability = flags.mutation_probability;
  config.w = flags.w;
  config.alpha = flags.alpha;
  config.tol = flags.tol;
  config.early_termination = !flags.no_early_termination;
  config.index_offset = index_offset;
  config.spec = spec;
  config.table = &table;
  return config;
}

int resolve_dims(pifrac::benchmarks::FunctionId id, int requested) {
  using pifrac::benchmarks::FunctionId;
  if (requested > 0) return requested;
  switch (id) {
    case FunctionId::colville: return 4;
    case FunctionId::goldstein_price:
    case FunctionId::sgo: return 2;
    case FunctionId::parrott_f4: return 1;
    default: return 30;
  }
}

std::string function_label(const pifrac::benchmarks::BenchmarkSpec& spec) {
  std::ostringstream label;
  label << spec.dims << "D " << pifrac::benchmarks::function_name(spec.id);
  return label.str();
}

// ---------------------------------------------------------------------------

int cmd_digits(std::uint64_t position, std::uint64_t count, int precision_bits,
               int digits_per_anchor, bool no_reanchor) {
  pifrac::bbp::ExtractionOptions options;
  options.precision_bits = precision_bits;
  options.digits_per_anchor = digits_per_anchor;
  options.reanchor = !no_reanchor;
  const pifrac::bbp::HexBlock block =
      pifrac::bbp::hex_digits_at(position, count, options);
  std::cout << block.digits << '\n';
  return kExitOk;
}

int cmd_gen(std::uint64_t count, int window, std::uint64_t start, unsigned threads,
            const fs::path& out) {
  Manifest manifest("gen");
  manifest.parameter("count", count);
  manifest.parameter("window", window);
  manifest.parameter("start", start);
  manifest.parameter("threads", threads);

  pifrac::BuildOptions options;
  options.window_digits = window;
  options.start_position = start;
  options.threads = threads;
  const pifrac::PiFractionTable table = pifrac::build_table(count, options);
  pifrac::save_table(table, out);
  manifest.output(out);
  manifest.write(manifest_path(out));
  std::cout << "wrote " << table.count() << " fractions to " << out.string() << '\n';
  return kExitOk;
}

int cmd_stats(const fs::path& table_file, int bins, const fs::path& out,
              bool timestamp) {
  Manifest manifest("stats");
  manifest.parameter("table", table_file.string());
  manifest.parameter("bins", bins);

  const pifrac::PiFractionTable table = pifrac::load_table(table_file);
  const pifrac::DistributionStats stats = pifrac::distribution_stats(table, bins);

  pifrac::StatsReportOptions report;
  if (timestamp) {
    report.timestamp = wall_clock_stamp();
    manifest.clock_used();
  }
  pifrac::save_stats_report(stats, out, report);
  manifest.output(out);
  manifest.write(manifest_path(out));

  std::printf("fractions %llu  mean %.15f  bins %d\n",
              static_cast<unsigned long long>(stats.total_points), stats.mean, bins);
  return kExitOk;
}

int cmd_scatter(const std::string& source_name, int dims, int points, int dim_a,
                int dim_b, std::uint64_t start_index, bool clock_index,
                std::uint64_t increment, const fs::path& table_file,
                std::uint64_t seed, const fs::path& out,
                const fs::path& plot_script) {
  Manifest manifest("scatter");
  manifest.parameter("source", source_name);
  manifest.parameter("dims", dims);
  manifest.parameter("points", points);
  manifest.parameter("increment", increment);
  manifest.parameter("seed", seed);

  pifrac::sampling::ScatterSpec spec;
  spec.source = pifrac::sampling::source_from_name(source_name);
  spec.dims = dims;
  spec.points = points;
  spec.dim_a = dim_a > 0 ? dim_a : std::max(1, dims - 1);
  spec.dim_b = dim_b > 0 ? dim_b : dims;
  manifest.parameter("dim-a", spec.dim_a);
  manifest.parameter("dim-b", spec.dim_b);

  std::optional<pifrac::PiFractionTable> table;
  pifrac::sampling::SamplerState state;
  state.index = start_index;
  state.increment = increment;
  if (spec.source == pifrac::sampling::Source::pi_fraction) {
    if (table_file.empty()) {
      throw std::invalid_argument("scatter: the pifrac source needs --table");
    }
    manifest.parameter("table", table_file.string());
    table.emplace(pifrac::load_table(table_file));
    state.table = &*table;
  }
  if (clock_index) {
    const std::uint64_t now = static_cast<std::uint64_t>(std::time(nullptr));
    const std::uint64_t span = table ? table->count() : 1000000;
    state.index = now % span + 1;
    manifest.clock_used();
  }
  manifest.parameter("start-index", state.index);

  pifrac::sampling::ScatterExportOptions options;
  options.prng_seed = seed;
  if (!plot_script.empty()) {
    options.emit_plot_script = true;
    options.script_path = plot_script;
  }

  const pifrac::sampling::SampleMatrix matrix =
      pifrac::sampling::scatter_export(spec, state, out, options);
  if (matrix.table_overlap) {
    std::cerr << "warning: " << points << " x " << dims
              << " draws exceed the table size; fractions repeat\n";
  }
  manifest.output(out);
  if (options.emit_plot_script) manifest.output(plot_script);
  manifest.write(manifest_path(out));
  std::cout << "wrote " << points << " points to " << out.string() << '\n';
  return kExitOk;
}

int cmd_gasr(const std::string& function, int dims_flag, const GaFlags& flags,
             const fs::path& table_file, int repeats, std::uint64_t offset_step,
             const fs::path& out) {
  Manifest manifest("gasr");
  manifest.parameter("function", function);
  manifest.parameter("table", table_file.string());
  manifest.parameter("population", flags.population);
  manifest.parameter("generations", flags.generations);
  manifest.parameter("index-offset", flags.index_offset);
  manifest.parameter("repeats", repeats);
  manifest.parameter("offset-step", offset_step);

  const auto id = pifrac::benchmarks::function_from_name(function);
  const int dims = resolve_dims(id, dims_flag);
  manifest.parameter("dims", dims);
  pifrac::benchmarks::SpecOptions spec_options;
  spec_options.rastrigin_wide_bounds = flags.rastrigin_wide;
  spec_options.griewank_shifted = flags.griewank_shifted;
  const auto spec = pifrac::benchmarks::default_spec(id, dims, spec_options);

  const pifrac::PiFractionTable table = pifrac::load_table(table_file);

  struct RunRecord {
    pifrac::gasr::GasrRunResult result;
    std::uint64_t offset;
    fs::path report;
  };
  std::vector<RunRecord> runs;
  for (int r = 1; r <= repeats; ++r) {
    const std::uint64_t offset =
        flags.index_offset + static_cast<std::uint64_t>(r - 1) * offset_step;
    const auto config = make_config(flags, spec, table, offset);
    pifrac::gasr::GasrRunResult result = pifrac::gasr::run(config);

    fs::path report = out;
    report += "_run" + std::to_string(r) + ".txt";
    pifrac::gasr::RunReportHeader header;
    header.run_id = function + "_" + std::to_string(dims) + "D_run" + std::to_string(r);
    header.function_label = function_label(spec);
    header.generations_configured = flags.generations;
    header.population = flags.population;
    std::ofstream report_out(report, std::ios::binary);
    if (!report_out) throw pifrac::io_error("cannot open " + report.string());
    pifrac::gasr::write_run_report(result, header, report_out);
    manifest.output(report);
    runs.push_back({std::move(result), offset, report});
  }

  const RunRecord* best = &runs.front();
  for (const RunRecord& r : runs) {
    if (r.result.best_fitness > best->result.best_fitness) best = &r;
  }

  fs::path summary = out;
  summary += "_summary.txt";
  {
    std::ofstream sum(summary, std::ios::binary);
    if (!sum) throw pifrac::io_error("cannot open " + summary.string());
    sum << "GASR summary: " << function_label(spec) << '\n';
    sum << "Population: " << flags.population
        << "  Generations: " << flags.generations << "  Repeats: " << repeats << '\n';
    sum << "Run  Index Offset  Best Fitness           Neval     Gens  Early\n";
    char row[128];
    for (std::size_t r = 0; r < runs.size(); ++r) {
      std::snprintf(row, sizeof row, "%3zu  %12llu  %.15e  %8llu  %4d  %s\n", r + 1,
                    static_cast<unsigned long long>(runs[r].offset),
                    runs[r].result.best_fitness,
                    static_cast<unsigned long long>(runs[r].result.evaluations),
                    runs[r].result.last_generation + 1,
                    runs[r].result.terminated_early ? "yes" : "no");
      sum << row;
    }
    std::snprintf(row, sizeof row, "Best-of: run %lld, best fitness = %.15e @ coords:\n",
                  static_cast<long long>(best - runs.data() + 1),
                  best->result.best_fitness);
    sum << row;
    for (int i = 1; i <= dims; ++i) {
      std::snprintf(row, sizeof row, "  i = %d: %.6f\n", i,
                    best->result.best_chromosome[static_cast<std::size_t>(i - 1)]);
      sum << row;
    }
  }
  manifest.output(summary);
  manifest.write(manifest_path(out));

  std::printf("%s: best fitness %.15e in %llu evaluations (%d generations)\n",
              function_label(spec).c_str(), best->result.best_fitness,
              static_cast<unsigned long long>(best->result.evaluations),
              best->result.last_generation + 1);
  return kExitOk;
}

int cmd_bench(int dims_flag, const GaFlags& flags, const fs::path& table_file,
              unsigned jobs, const fs::path& out) {
  Manifest manifest("bench");
  manifest.parameter("table", table_file.string());
  manifest.parameter("population", flags.population);
  manifest.parameter("generations", flags.generations);
  manifest.parameter("index-offset", flags.index_offset);
  manifest.parameter("jobs", jobs);

  const pifrac::PiFractionTable table = pifrac::load_table(table_file);
  const auto suite = pifrac::benchmarks::core_suite();

  struct SuiteRow {
    pifrac::benchmarks::BenchmarkSpec spec;
    pifrac::gasr::GasrRunResult result;
  };
  std::vector<SuiteRow> rows(suite.size());

  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto id = suite[i];
    const int dims = resolve_dims(id, dims_flag);
    manifest.parameter(std::string("dims.") +
                           std::string(pifrac::benchmarks::function_name(id)),
                       dims);
    pifrac::benchmarks::SpecOptions spec_options;
    spec_options.rastrigin_wide_bounds = flags.rastrigin_wide;
    spec_options.griewank_shifted = flags.griewank_shifted;
    rows[i].spec = pifrac::benchmarks::default_spec(id, dims, spec_options);
  }

  auto run_one = [&](std::size_t index) {
    const auto config =
        make_config(flags, rows[index].spec, table, flags.index_offset);
    rows[index].result = pifrac::gasr::run(config);
  };

  if (jobs <= 1) {
    for (std::size_t i = 0; i < rows.size(); ++i) run_one(i);
  } else {
    std::vector<std::future<void>> futures;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      futures.push_back(std::async(std::launch::async, run_one, i));
      if (futures.size() == jobs) {
        for (auto& f : futures) f.get();
        futures.clear();
      }
    }
    for (auto& f : futures) f.get();
  }

  {
    std::ofstream sum(out, std::ios::binary);
    if (!sum) throw pifrac::io_error("cannot open " + out.string());
    sum << "GASR benchmark suite\n";
    sum << "Population: " << flags.population << "  Generations: " << flags.generations
        << "  Index offset: " << flags.index_offset << '\n';
    sum << "Reference columns are published literature values for single runs "
           "of the same suite.\n\n";
    sum << "Function         Dims  Best Fitness    Neval     Gens  Lit Best        Lit Neval\n";
    char row[160];
    for (const SuiteRow& r : rows) {
      const auto ref = reference_result(r.spec.id, r.spec.dims);
      std::string lit_best = "-";
      std::string lit_neval = "-";
      if (ref) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.6e", ref->best_fitness);
        lit_best = buf;
        lit_neval = std::to_string(ref->evaluations);
      }
      std::snprintf(row, sizeof row, "%-16s %4d  %.6e  %8llu  %4d  %-14s  %s\n",
                    std::string(pifrac::benchmarks::function_name(r.spec.id)).c_str(),
                    r.spec.dims, r.result.best_fitness,
                    static_cast<unsigned long long>(r.result.evaluations),
                    r.result.last_generation + 1, lit_best.c_str(), lit_neval.c_str());
      sum << row;
    }
  }
  manifest.output(out);
  manifest.write(manifest_path(out));
  std::cout << "wrote suite summary to " << out.string() << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deterministic pi-fraction sampling and GASR optimization toolkit"};
  app.require_subcommand(1);

  // digits
  auto* digits = app.add_subcommand("digits", "Print hex digits of pi");
  std::uint64_t position = 1;
  std::int64_t count = 0;
  int precision_bits = pifrac::bbp::kMinPrecisionBits;
  int digits_per_anchor = pifrac::bbp::kDefaultDigitsPerAnchor;
  bool no_reanchor = false;
  digits->add_option("--position", position, "1-based index of the first digit")
      ->required()
      ->check(CLI::PositiveNumber);
  digits->add_option("--count", count, "Number of digits")
      ->required()
      ->check(CLI::NonNegativeNumber);
  digits->add_option("--precision-bits", precision_bits, "Fixed-point fractional bits");
  digits->add_option("--digits-per-anchor", digits_per_anchor,
                     "Digits emitted per series evaluation");
  digits->add_flag("--no-reanchor", no_reanchor,
                   "Fail instead of re-anchoring past one evaluation");

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a fraction table file");
  std::uint64_t gen_count = 1;
  int gen_window = pifrac::kDefaultWindowDigits;
  std::uint64_t gen_start = 1;
  unsigned gen_threads = 1;
  fs::path gen_out;
  gen->add_option("--count", gen_count, "Fractions to generate")
      ->required()
      ->check(CLI::PositiveNumber);
  gen->add_option("--window", gen_window, "Hex digits per fraction")
      ->check(CLI::PositiveNumber);
  gen->add_option("--start", gen_start, "Hex position of fraction 1")
      ->check(CLI::PositiveNumber);
  gen->add_option("--threads", gen_threads, "Digit extraction threads")
      ->check(CLI::PositiveNumber);
  gen->add_option("--out", gen_out, "Output table file")->required();

  // stats
  auto* stats = app.add_subcommand("stats", "PDF/CDF report for a table");
  fs::path stats_table, stats_out;
  int stats_bins = 1000;
  bool stats_timestamp = false;
  stats->add_option("--table", stats_table, "Fraction table file")->required();
  stats->add_option("--bins", stats_bins, "Histogram bins")->check(CLI::PositiveNumber);
  stats->add_option("--out", stats_out, "Output report file")->required();
  stats->add_flag("--timestamp", stats_timestamp,
                  "Stamp the report with the wall clock");

  // scatter
  auto* scatter = app.add_subcommand("scatter", "Export a bidimensional scatter");
  std::string scatter_source = "pifrac";
  int scatter_dims = 30, scatter_points = 1000, scatter_dim_a = 0, scatter_dim_b = 0;
  std::uint64_t scatter_start = 1, scatter_increment = 1, scatter_seed =
      pifrac::sampling::kDefaultPrngSeed;
  fs::path scatter_table, scatter_out, scatter_plot;
  scatter->add_option("--source", scatter_source, "pifrac | halton | vdc | prng");
  scatter->add_option("--dims", scatter_dims, "Dimensions")->check(CLI::PositiveNumber);
  scatter->add_option("--points", scatter_points, "Points")->check(CLI::PositiveNumber);
  scatter->add_option("--dim-a", scatter_dim_a, "First plotted dimension (default dims-1)");
  scatter->add_option("--dim-b", scatter_dim_b, "Second plotted dimension (default dims)");
  scatter->add_option("--start-index", scatter_start, "Starting fraction index")
      ->check(CLI::PositiveNumber);
  bool scatter_clock_index = false;
  scatter->add_flag("--clock-index", scatter_clock_index,
                    "Initialize the start index from the wall clock");
  scatter->add_option("--increment", scatter_increment, "Index increment")
      ->check(CLI::PositiveNumber);
  scatter->add_option("--table", scatter_table, "Fraction table (pifrac source)");
  scatter->add_option("--seed", scatter_seed, "Seed for the prng source");
  scatter->add_option("--out", scatter_out, "Output data file")->required();
  scatter->add_option("--plot-script", scatter_plot, "Also write a plot command file");

  // gasr
  auto* gasr_cmd = app.add_subcommand("gasr", "Run the genetic algorithm");
  std::string gasr_function;
  int gasr_dims = 0;
  GaFlags gasr_flags;
  fs::path gasr_table, gasr_out;
  int gasr_repeats = 1;
  std::uint64_t gasr_offset_step = 100003;
  gasr_cmd->add_option("--function", gasr_function, "Objective function name")->required();
  gasr_cmd->add_option("--dims", gasr_dims, "Dimensionality (default per function)");
  gasr_cmd->add_option("--table", gasr_table, "Fraction table file")->required();
  gasr_cmd->add_option("--repeats", gasr_repeats, "Independent runs with stepped offsets")
      ->check(CLI::PositiveNumber);
  gasr_cmd->add_option("--offset-step", gasr_offset_step,
                       "Index offset step between repeats");
  gasr_cmd->add_option("--out", gasr_out, "Output path prefix")->required();
  add_ga_flags(gasr_cmd, gasr_flags);

  // bench
  auto* bench = app.add_subcommand("bench", "Run the six-function suite");
  int bench_dims = 10;
  GaFlags bench_flags;
  bench_flags.population = 200;
  fs::path bench_table, bench_out;
  unsigned bench_jobs = 1;
  bench->add_option("--dims", bench_dims, "Dimensionality for the n-D functions")
      ->check(CLI::PositiveNumber);
  bench->add_option("--table", bench_table, "Fraction table file")->required();
  bench->add_option("--jobs", bench_jobs, "Functions run in parallel")
      ->check(CLI::PositiveNumber);
  bench->add_option("--out", bench_out, "Output summary file")->required();
  add_ga_flags(bench, bench_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (digits->parsed()) {
      return cmd_digits(position, static_cast<std::uint64_t>(count), precision_bits,
                        digits_per_anchor, no_reanchor);
    }
    if (gen->parsed()) {
      return cmd_gen(gen_count, gen_window, gen_start, gen_threads, gen_out);
    }
    if (stats->parsed()) {
      return cmd_stats(stats_table, stats_bins, stats_out, stats_timestamp);
    }
    if (scatter->parsed()) {
      return cmd_scatter(scatter_source, scatter_dims, scatter_points, scatter_dim_a,
                         scatter_dim_b, scatter_start, scatter_clock_index,
                         scatter_increment, scatter_table, scatter_seed,
                         scatter_out, scatter_plot);
    }
    if (gasr_cmd->parsed()) {
      return cmd_gasr(gasr_function, gasr_dims, gasr_flags, gasr_table, gasr_repeats,
                      gasr_offset_step, gasr_out);
    }
    if (bench->parsed()) {
      return cmd_bench(bench_dims, bench_flags, bench_table, bench_jobs, bench_out);
    }
  } catch (const pifrac::accuracy_error& e) {
    std::cerr << "accuracy error: " << e.what() << '\n';
    return kExitAccuracy;
  } catch (const pifrac::io_error& e) {
    std::cerr << "file error: " << e.what() << '\n';
    return kExitFile;
  } catch (const pifrac::parse_error& e) {
    std::cerr << "file error: " << e.what() << '\n';
    return kExitFile;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}
