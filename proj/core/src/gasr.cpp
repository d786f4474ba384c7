#include "pifrac/gasr.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "pifrac/errors.hpp"
#include "pifrac/sampling.hpp"

namespace pifrac::gasr {

namespace {

void require(bool ok, const char* message) {
  if (!ok) throw std::invalid_argument(message);
}

double unit_draw(const GasrConfig& config, std::uint64_t k) {
  return sampling::indexed_uniform(*config.table, config.index_offset + k, 0.0, 1.0);
}

long long integer_draw(const GasrConfig& config, std::uint64_t k, long long n,
                       long long m) {
  return sampling::integer_in(*config.table, config.index_offset + k, n, m);
}

}  // namespace

void GasrConfig::validate() const {
  require(population >= 2, "GasrConfig: population must be >= 2");
  require(population % 2 == 0, "GasrConfig: population must be even");
  require(generations >= 1, "GasrConfig: generations must be >= 1");
  require(crossover_probability >= 0.0 && crossover_probability <= 1.0,
          "GasrConfig: crossover_probability must lie in [0, 1]");
  require(mutation_probability >= 0.0 && mutation_probability <= 1.0,
          "GasrConfig: mutation_probability must lie in [0, 1]");
  require(alpha > 0.0, "GasrConfig: alpha must be > 0");
  require(tol >= 0.0, "GasrConfig: tol must be >= 0");
  require(table != nullptr, "GasrConfig: table must be set");
  require(spec.dims >= 1, "GasrConfig: benchmark spec must be resolved");
  require(spec.lower.size() == static_cast<std::size_t>(spec.dims) &&
              spec.upper.size() == static_cast<std::size_t>(spec.dims),
          "GasrConfig: bounds must match the spec dimensionality");
}

Population init_population(const GasrConfig& config, const Objective& objective) {
  Population gen0;
  gen0.generation_number = 0;
  gen0.population = config.population;
  gen0.dims = config.spec.dims;
  gen0.genes.resize(static_cast<std::size_t>(config.population) * config.spec.dims);
  gen0.fitness.resize(static_cast<std::size_t>(config.population));

  for (int c = 1; c <= config.population; ++c) {
    std::span<double> chromo = gen0.chromosome(c);
    for (int i = 1; i <= config.spec.dims; ++i) {
      const std::uint64_t k =
          static_cast<std::uint64_t>(c) * static_cast<std::uint64_t>(i);
      chromo[static_cast<std::size_t>(i - 1)] = sampling::indexed_uniform(
          *config.table, config.index_offset + k, config.spec.lower[i - 1],
          config.spec.upper[i - 1]);
    }
  }
  for (int c = 1; c <= config.population; ++c) {
    gen0.fitness[static_cast<std::size_t>(c - 1)] = objective(gen0.chromosome(c));
  }
  return gen0;
}

std::pair<int, int> select_parents(const GasrConfig& config, int pair_base_index) {
  require(config.population >= 2, "select_parents: population must be >= 2");
  std::uint64_t k = static_cast<std::uint64_t>(pair_base_index);
  const std::uint64_t retries = config.table->count();
  for (std::uint64_t attempt = 0; attempt <= retries; ++attempt) {
    const long long s = integer_draw(config, k, 1, config.population);
    const long long t = integer_draw(config, k + 2, 1, config.population);
    if (s != t) return {static_cast<int>(s), static_cast<int>(t)};
    ++k;
  }
  throw degenerate_table_error(
      "select_parents: no distinct parent pair within table.count retries");
}

std::array<std::vector<double>, 4> crossover_children(
    std::span<const double> parent_s, std::span<const double> parent_t,
    const GasrConfig& config) {
  require(parent_s.size() == parent_t.size(),
          "crossover_children: parents must have equal dimensionality");
  const std::size_t dims = parent_s.size();
  const double w = config.w;

  std::array<std::vector<double>, 4> children;
  for (auto& child : children) child.resize(dims);
  for (std::size_t i = 0; i < dims; ++i) {
    const double maxi = std::max(parent_s[i], parent_t[i]);
    const double mini = std::min(parent_s[i], parent_t[i]);
    const double sum2 = (parent_s[i] + parent_t[i]) / 2.0;
    children[0][i] = (1.0 - w) * maxi + w * sum2;
    children[1][i] = (1.0 - w) * mini + w * sum2;
    children[2][i] = (1.0 - w) * config.spec.upper[i] + w * maxi;
    children[3][i] = (1.0 - w) * config.spec.lower[i] + w * mini;
  }
  return children;
}

std::array<int, 4> rank_children(const std::array<double, 4>& child_fitness) {
  std::array<int, 4> order{0, 1, 2, 3};
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return child_fitness[static_cast<std::size_t>(a)] >
           child_fitness[static_cast<std::size_t>(b)];
  });
  return order;
}

void place_best_children(Population& generation, int pair_slot,
                         const std::array<std::vector<double>, 4>& children,
                         const std::array<double, 4>& child_fitness) {
  const std::array<int, 4> order = rank_children(child_fitness);
  const std::vector<double>& best = children[static_cast<std::size_t>(order[0])];
  const std::vector<double>& second = children[static_cast<std::size_t>(order[1])];
  std::copy(best.begin(), best.end(), generation.chromosome(pair_slot).begin());
  std::copy(second.begin(), second.end(),
            generation.chromosome(pair_slot + 1).begin());
}

void mutate_chromosome(std::span<double> chromosome, const GasrConfig& config,
                       int generation, std::uint64_t index_base) {
  const int dims = static_cast<int>(chromosome.size());
  const int gene =
      static_cast<int>(integer_draw(config, index_base, 1, dims));
  const double lower = config.spec.lower[static_cast<std::size_t>(gene - 1)];
  const double upper = config.spec.upper[static_cast<std::size_t>(gene - 1)];
  const double xk = chromosome[static_cast<std::size_t>(gene - 1)];

  const double ratio =
      static_cast<double>(generation) / static_cast<double>(config.generations);
  const double mu = 1.0 - std::pow(ratio, std::pow(1.0 - ratio, config.alpha));
  const double half_reach = mu * (upper - lower) / 2.0;
  const double xk_upper = std::min(xk + half_reach, upper);
  const double xk_lower = std::max(xk - half_reach, lower);
  chromosome[static_cast<std::size_t>(gene - 1)] =
      xk_lower + config.w * (xk_upper - xk_lower);
}

void elitism_insert(Population& generation, std::span<const double> best_previous,
                    const GasrConfig& config, int generation_number) {
  const int slot = static_cast<int>(integer_draw(
      config, static_cast<std::uint64_t>(generation_number), 1,
      generation.population));
  std::copy(best_previous.begin(), best_previous.end(),
            generation.chromosome(slot).begin());
}

bool early_termination_check(std::span<const double> trace, int generation,
                             double tol) {
  require(generation >= 1 && trace.size() > static_cast<std::size_t>(generation),
          "early_termination_check: trace must be defined through the generation");
  if (generation <= 20 || generation % 5 != 0) return false;
  return trace[static_cast<std::size_t>(generation)] -
             trace[static_cast<std::size_t>(generation - 19)] <=
         tol;
}

GasrRunResult run(const GasrConfig& config) {
  return run(config, [&config](std::span<const double> x) {
    return benchmarks::evaluate(config.spec, x);
  });
}

GasrRunResult run(const GasrConfig& config, const Objective& objective) {
  config.validate();
  const int population = config.population;
  const int dims = config.spec.dims;

  GasrRunResult result;

  Population previous = init_population(config, objective);
  result.evaluations = static_cast<std::uint64_t>(population);

  double best_prev_fitness = previous.fitness_of(1);
  std::vector<double> best_prev_chromosome(previous.chromosome(1).begin(),
                                           previous.chromosome(1).end());
  result.best_fitness = best_prev_fitness;
  result.best_chromosome = best_prev_chromosome;
  result.best_generation = 0;
  for (int c = 1; c <= population; ++c) {
    const double f = previous.fitness_of(c);
    if (f >= best_prev_fitness) {
      best_prev_fitness = f;
      const auto chromo = previous.chromosome(c);
      best_prev_chromosome.assign(chromo.begin(), chromo.end());
    }
    if (f >= result.best_fitness) {
      result.best_fitness = f;
      const auto chromo = previous.chromosome(c);
      result.best_chromosome.assign(chromo.begin(), chromo.end());
      result.best_generation = 0;
    }
  }
  result.trace.push_back(best_prev_fitness);
  result.last_generation = 0;

  Population current = previous;

  std::array<double, 4> child_fitness{};
  for (int g = 1; g <= config.generations; ++g) {
    current.generation_number = g;
    // Pairs step in twos; a closed crossover gate leaves the pair as copied
    // from the previous generation.
    current.genes = previous.genes;

    for (int c = 1; c <= population - 1; c += 2) {
      const std::uint64_t gate_index =
          static_cast<std::uint64_t>(c) + static_cast<std::uint64_t>(g);
      if (unit_draw(config, gate_index) <= config.crossover_probability) {
        const auto [s, t] = select_parents(config, c);
        const auto children =
            crossover_children(previous.chromosome(s), previous.chromosome(t), config);
        for (std::size_t child = 0; child < 4; ++child) {
          child_fitness[child] = objective(children[child]);
        }
        result.evaluations += 4;
        place_best_children(current, c, children, child_fitness);
      }
      // The mutation gate re-reads the crossover gate's fraction.
      if (unit_draw(config, gate_index) <= config.mutation_probability) {
        mutate_chromosome(current.chromosome(c), config, g, gate_index);
        mutate_chromosome(current.chromosome(c + 1), config, g, gate_index + 1);
      }
    }

    elitism_insert(current, best_prev_chromosome, config, g);

    for (int c = 1; c <= population; ++c) {
      const double f = objective(current.chromosome(c));
      current.fitness[static_cast<std::size_t>(c - 1)] = f;
      ++result.evaluations;
      if (f >= best_prev_fitness) {
        best_prev_fitness = f;
        const auto chromo = current.chromosome(c);
        best_prev_chromosome.assign(chromo.begin(), chromo.end());
      }
      if (f >= result.best_fitness) {
        result.best_fitness = f;
        const auto chromo = current.chromosome(c);
        result.best_chromosome.assign(chromo.begin(), chromo.end());
        result.best_generation = g;
      }
    }

    result.trace.push_back(best_prev_fitness);
    result.last_generation = g;

    if (config.early_termination &&
        early_termination_check(result.trace, g, config.tol)) {
      result.terminated_early = true;
      break;
    }

    std::swap(previous, current);
  }

  return result;
}

void write_run_report(const GasrRunResult& result, const RunReportHeader& header,
                      std::ostream& out) {
  out << header.function_label << '\n';
  out << std::string(header.function_label.size(), '-') << '\n';
  out << "Run ID: " << header.run_id << '\n';
  out << "# Generations: " << header.generations_configured << '\n';
  out << "# Chromos: " << header.population << '\n';
  out << "# Eval this run: " << result.evaluations << '\n';
  out << "# Gen req'd: " << result.last_generation + 1 << '\n';
  out << '\n';
  out << "Gen #  Best Fitness\n";
  out << "-----\n";
  char row[64];
  for (std::size_t g = 0; g < result.trace.size(); ++g) {
    std::snprintf(row, sizeof row, "%5zu  %.15e\n", g, result.trace[g]);
    out << row;
  }
}

}  // namespace pifrac::gasr
