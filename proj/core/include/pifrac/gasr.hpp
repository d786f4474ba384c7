#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pifrac/benchmarks.hpp"
#include "pifrac/fraction_table.hpp"

namespace pifrac::gasr {

// Real-coded genetic algorithm with sibling rivalry: every random decision
// draws a pi fraction through a fixed explicit-index scheme, so a run is a
// pure function of its configuration and the same setup reproduces the same
// trajectory bit for bit.
//
// Index schemes (offset by config.index_offset, wrapped modulo the table):
//   initialization      gene (c, i)   -> c * i
//   crossover gate      pair c, gen g -> c + g
//   parent selection    base k = c    -> draws at k and k + 2, k advancing on
//                                        collision
//   mutation gate       pair c, gen g -> c + g (the same draw as the gate)
//   mutated gene pick   chromo c      -> c + g
//   elitism slot        gen g         -> g

struct GasrConfig {
  int population = 2500;  // must be even: the crossover loop works in pairs
  int generations = 100;
  double crossover_probability = 0.8;
  double mutation_probability = 0.02;
  double w = 0.5;        // crossover/mutation weight
  double alpha = 2.0;    // mutation schedule shape parameter
  double tol = 1e-5;     // early-termination tolerance
  bool early_termination = true;
  std::uint64_t index_offset = 0;  // added to every index scheme
  benchmarks::BenchmarkSpec spec;
  const PiFractionTable* table = nullptr;

  void validate() const;
};

struct Population {
  int generation_number = 0;
  int population = 0;
  int dims = 0;
  std::vector<double> genes;    // population x dims, row-major, rows 1-based
  std::vector<double> fitness;  // 1-based via chromo index

  std::span<double> chromosome(int c) {
    return {genes.data() + static_cast<std::size_t>(c - 1) * dims,
            static_cast<std::size_t>(dims)};
  }
  std::span<const double> chromosome(int c) const {
    return {genes.data() + static_cast<std::size_t>(c - 1) * dims,
            static_cast<std::size_t>(dims)};
  }
  double fitness_of(int c) const { return fitness[static_cast<std::size_t>(c - 1)]; }
};

struct GasrRunResult {
  double best_fitness = 0.0;
  std::vector<double> best_chromosome;
  int best_generation = 0;
  std::uint64_t evaluations = 0;
  std::vector<double> trace;  // best fitness observed through generation g
  bool terminated_early = false;
  int last_generation = 0;
};

using Objective = std::function<double(std::span<const double>)>;

/// Generation 0: gene (c, i) = indexed draw at c * i scaled into [lower_i,
/// upper_i]; all fitnesses evaluated.
Population init_population(const GasrConfig& config, const Objective& objective);

/// Two distinct parent indices for the pair starting at chromosome
/// `pair_base_index`. degenerate_table_error when the table cannot yield a
/// distinct pair within table.count retries.
std::pair<int, int> select_parents(const GasrConfig& config, int pair_base_index);

/// Sibling-rivalry crossover: per gene, with MAXI/MINI the parent max/min
/// and SUM2 their average,
///   b1 = (1-w) MAXI + w SUM2       b2 = (1-w) MINI + w SUM2
///   b3 = (1-w) upper + w MAXI      b4 = (1-w) lower + w MINI
std::array<std::vector<double>, 4> crossover_children(
    std::span<const double> parent_s, std::span<const double> parent_t,
    const GasrConfig& config);

/// Child indices (0-based) ordered best to worst, ties kept in b1..b4 order.
std::array<int, 4> rank_children(const std::array<double, 4>& child_fitness);

/// Best child fills slot `pair_slot`, second best fills `pair_slot` + 1.
void place_best_children(Population& generation, int pair_slot,
                         const std::array<std::vector<double>, 4>& children,
                         const std::array<double, 4>& child_fitness);

/// Replaces one gene, selected by the draw at `index_base`, with the
/// schedule-shrunk window midpoint:
///   Mu = 1 - (g/G)^((1 - g/G)^alpha)
///   XkU = min(Xk + Mu (upper-lower)/2, upper), XkL = max(Xk - ..., lower)
///   Xk* = XkL + w (XkU - XkL)
void mutate_chromosome(std::span<double> chromosome, const GasrConfig& config,
                       int generation, std::uint64_t index_base);

/// Overwrites the slot drawn at index g with the best chromosome observed
/// through generation g - 1.
void elitism_insert(Population& generation, std::span<const double> best_previous,
                    const GasrConfig& config, int generation_number);

/// Stop exactly when g > 20, g divisible by 5, and trace[g] - trace[g-19]
/// is within tol.
bool early_termination_check(std::span<const double> trace, int generation,
                             double tol);

/// Full run against the configured benchmark objective.
GasrRunResult run(const GasrConfig& config);

/// Full run against a caller-supplied objective (fitness to maximize).
GasrRunResult run(const GasrConfig& config, const Objective& objective);

struct RunReportHeader {
  std::string run_id;
  std::string function_label;  // e.g. "10D exponential"
  int generations_configured = 0;
  int population = 0;
};

/// Report: header block (function and dims, run id, generations, population,
/// evaluations, generations required), then one "Gen #  Best Fitness" row
/// per generation.
void write_run_report(const GasrRunResult& result, const RunReportHeader& header,
                      std::ostream& out);

}  // namespace pifrac::gasr
