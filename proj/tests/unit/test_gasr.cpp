#include <doctest.h>

#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include "pifrac/errors.hpp"
#include "pifrac/fraction_table.hpp"
#include "pifrac/gasr.hpp"

using namespace pifrac;
using namespace pifrac::gasr;

namespace {

const PiFractionTable& fixture_table() {
  static const PiFractionTable table = load_table(PIFRAC_FIXTURE_TABLE);
  return table;
}

PiFractionTable tiny_table(const std::vector<double>& values) {
  std::vector<mpz_class> nums;
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, kStoredDecimalDigits);
  for (double v : values) {
    mpz_class n(static_cast<long>(v * 1e6));
    n *= mpz_class("1000000000000000000000000");
    nums.push_back(n);
  }
  return PiFractionTable(std::move(nums), std::move(den), kDefaultWindowDigits, 1);
}

GasrConfig base_config(const PiFractionTable& table, int population = 4,
                       int generations = 10) {
  GasrConfig config;
  config.population = population;
  config.generations = generations;
  config.spec = benchmarks::default_spec(benchmarks::FunctionId::exponential, 2);
  config.table = &table;
  return config;
}

}  // namespace

TEST_CASE("config validation") {
  GasrConfig config = base_config(fixture_table());
  CHECK_NOTHROW(config.validate());
  config.population = 5;
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);  // odd
  config.population = 0;
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);
  config = base_config(fixture_table());
  config.crossover_probability = 1.5;
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);
  config = base_config(fixture_table());
  config.table = nullptr;
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);
}

TEST_CASE("init_population uses the c*i index scheme") {
  GasrConfig config = base_config(fixture_table(), 4);
  config.spec = benchmarks::default_spec(benchmarks::FunctionId::exponential, 3);
  int evals = 0;
  const Population gen0 = init_population(config, [&](std::span<const double> x) {
    ++evals;
    return benchmarks::evaluate(config.spec, x);
  });
  CHECK(evals == 4);
  CHECK(gen0.generation_number == 0);

  // gene (1,1) draws fraction 1 scaled into [-1, 1].
  const double u1 = fixture_table().value(1);
  CHECK(gen0.chromosome(1)[0] == doctest::Approx(-1.0 + 2.0 * u1).epsilon(1e-15));
  // chromosome 2 gene 3 and chromosome 3 gene 2 share index 6.
  CHECK(gen0.chromosome(2)[2] == gen0.chromosome(3)[1]);
}

TEST_CASE("select_parents floor draws and retry") {
  // Fractions chosen so the first attempt collides and the second succeeds.
  const PiFractionTable table = tiny_table({0.15, 0.35, 0.15, 0.75});
  GasrConfig config = base_config(table, 10);
  const auto [s, t] = select_parents(config, 1);
  CHECK(s == 4);  // 1 + floor(10 * 0.35) after one retry
  CHECK(t == 8);  // 1 + floor(10 * 0.75)
}

TEST_CASE("select_parents examples") {
  const PiFractionTable table = tiny_table({0.1, 0.5, 0.7});
  GasrConfig config = base_config(table, 10);
  const auto [s, t] = select_parents(config, 1);
  CHECK(s == 2);  // u = 0.1
  CHECK(t == 8);  // u = 0.7

  // Two chromosomes: the pair is always distinct after retries.
  GasrConfig two = base_config(table, 2);
  const auto [a, b] = select_parents(two, 1);
  CHECK(a != b);
  CHECK((a == 1 || a == 2));
  CHECK((b == 1 || b == 2));

  // A constant table can never produce distinct parents.
  const PiFractionTable constant = tiny_table({0.5, 0.5, 0.5});
  GasrConfig degenerate = base_config(constant, 4);
  CHECK_THROWS_AS(select_parents(degenerate, 1), degenerate_table_error);
}

TEST_CASE("crossover_children formulas") {
  GasrConfig config = base_config(fixture_table(), 4);
  config.spec = benchmarks::default_spec(benchmarks::FunctionId::parrott_f4, 1);
  const std::vector<double> s{0.2}, t{0.6};
  const auto children = crossover_children(s, t, config);
  CHECK(children[0][0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(children[1][0] == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(children[2][0] == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(children[3][0] == doctest::Approx(0.1).epsilon(1e-15));

  SUBCASE("weight zero collapses to parents and bounds") {
    config.w = 0.0;
    const auto flat = crossover_children(s, t, config);
    CHECK(flat[0][0] == 0.6);
    CHECK(flat[1][0] == 0.2);
    CHECK(flat[2][0] == 1.0);
    CHECK(flat[3][0] == 0.0);
  }
  SUBCASE("identical parents collapse b1 and b2") {
    const auto same = crossover_children(s, s, config);
    CHECK(same[0][0] == same[1][0]);
    CHECK(same[0][0] == doctest::Approx(0.2).epsilon(1e-15));
  }
}

TEST_CASE("children stay inside the bounds") {
  GasrConfig config = base_config(fixture_table(), 4);
  config.spec = benchmarks::default_spec(benchmarks::FunctionId::ackley, 3);
  const std::vector<double> s{-30.0, 0.5, 29.0}, t{30.0, -1.25, 28.0};
  for (double w : {0.0, 0.25, 0.5, 1.0}) {
    config.w = w;
    const auto children = crossover_children(s, t, config);
    for (const auto& child : children) {
      for (std::size_t i = 0; i < child.size(); ++i) {
        CHECK(child[i] >= config.spec.lower[i]);
        CHECK(child[i] <= config.spec.upper[i]);
      }
    }
  }
}

TEST_CASE("rank and placement with stable ties") {
  CHECK(rank_children({3, 9, 1, 9}) == std::array<int, 4>{1, 3, 0, 2});
  CHECK(rank_children({7, 7, 7, 7}) == std::array<int, 4>{0, 1, 2, 3});
  CHECK(rank_children({9, 8, 7, 6}) == std::array<int, 4>{0, 1, 2, 3});

  Population gen;
  gen.population = 4;
  gen.dims = 1;
  gen.genes = {0, 0, 0, 0};
  gen.fitness = {0, 0, 0, 0};
  const std::array<std::vector<double>, 4> children{
      std::vector<double>{10}, {20}, {30}, {40}};
  place_best_children(gen, 1, children, {3, 9, 1, 9});
  CHECK(gen.chromosome(1)[0] == 20);  // b2 wins
  CHECK(gen.chromosome(2)[0] == 40);  // b4 second on the tie
}

TEST_CASE("mutation schedule") {
  GasrConfig config = base_config(fixture_table(), 4, 100);
  config.spec = benchmarks::default_spec(benchmarks::FunctionId::exponential, 1);

  SUBCASE("final generation leaves the gene unchanged") {
    std::vector<double> chromo{0.25};
    mutate_chromosome(chromo, config, 100, 1);
    CHECK(chromo[0] == 0.25);
  }
  SUBCASE("midpoint schedule value") {
    // Mu at g/G = 1/2 with alpha = 2: 1 - 0.5^0.25
    config.generations = 2;
    std::vector<double> at_bound{-1.0};
    mutate_chromosome(at_bound, config, 1, 1);
    const double mu = 1.0 - std::pow(0.5, 0.25);
    CHECK(mu == doctest::Approx(0.1591035847462855).epsilon(1e-12));
    // Window clamps at the lower bound: [lo, Xk + mu*(hi-lo)/2], midpoint at w=0.5.
    CHECK(at_bound[0] == doctest::Approx((-1.0 + (-1.0 + mu)) / 2.0).epsilon(1e-12));
  }
  SUBCASE("interior gene with symmetric window is a fixed point at w = 0.5") {
    std::vector<double> chromo{0.0};
    mutate_chromosome(chromo, config, 50, 1);
    CHECK(chromo[0] == 0.0);
  }
}

TEST_CASE("elitism_insert picks the drawn slot") {
  const PiFractionTable table = tiny_table({0.0, 0.999999});
  GasrConfig config = base_config(table, 4);
  config.spec = benchmarks::default_spec(benchmarks::FunctionId::exponential, 1);
  Population gen;
  gen.population = 4;
  gen.dims = 1;
  gen.genes = {1, 2, 3, 4};
  gen.fitness = {0, 0, 0, 0};
  const std::vector<double> best{42.0};
  elitism_insert(gen, best, config, 1);  // u = 0.0 selects slot 1
  CHECK(gen.chromosome(1)[0] == 42.0);
  elitism_insert(gen, best, config, 2);  // u = 0.999999 selects slot 4
  CHECK(gen.chromosome(4)[0] == 42.0);
  CHECK(gen.chromosome(2)[0] == 2.0);
}

TEST_CASE("early termination rule") {
  std::vector<double> constant(41, 7.0);
  CHECK_FALSE(early_termination_check(constant, 20, 1e-5));
  CHECK_FALSE(early_termination_check(constant, 24, 1e-5));
  CHECK(early_termination_check(constant, 25, 1e-5));

  std::vector<double> improving;
  for (int g = 0; g <= 40; ++g) improving.push_back(static_cast<double>(g));
  for (int g = 1; g <= 40; ++g) {
    CHECK_FALSE(early_termination_check(improving, g, 1e-5));
  }
}

TEST_CASE("run is deterministic") {
  GasrConfig config = base_config(fixture_table(), 20, 30);
  config.spec = benchmarks::default_spec(benchmarks::FunctionId::exponential, 3);
  const GasrRunResult a = run(config);
  const GasrRunResult b = run(config);
  CHECK(a.best_fitness == b.best_fitness);
  CHECK(a.evaluations == b.evaluations);
  CHECK(a.trace == b.trace);
  CHECK(a.best_chromosome == b.best_chromosome);
  CHECK(a.last_generation == b.last_generation);
}

TEST_CASE("closed gates copy generation zero verbatim") {
  GasrConfig config = base_config(fixture_table(), 10, 5);
  config.spec = benchmarks::default_spec(benchmarks::FunctionId::exponential, 2);
  config.crossover_probability = 0.0;
  config.mutation_probability = 0.0;
  config.early_termination = false;

  const Population gen0 = init_population(config, [&](std::span<const double> x) {
    return benchmarks::evaluate(config.spec, x);
  });
  const GasrRunResult result = run(config);
  // Only elitism slots can differ from generation 0, and the trace never drops.
  CHECK(result.evaluations == 10 + 5 * 10);
  for (std::size_t g = 1; g < result.trace.size(); ++g) {
    CHECK(result.trace[g] >= result.trace[g - 1]);
  }
  CHECK(result.trace.front() == result.trace.back());  // nothing new appears
  CHECK(result.best_fitness == result.trace.back());

  // The elitism insert preserves the best chromosome exactly.
  double best0 = -1e300;
  for (int c = 1; c <= 10; ++c) best0 = std::max(best0, gen0.fitness_of(c));
  CHECK(result.best_fitness == best0);
}

TEST_CASE("run accounts for every objective call") {
  GasrConfig config = base_config(fixture_table(), 12, 25);
  config.spec = benchmarks::default_spec(benchmarks::FunctionId::cosine_mixture, 4);
  config.early_termination = false;
  std::uint64_t calls = 0;
  const GasrRunResult result = run(config, [&](std::span<const double> x) {
    ++calls;
    return benchmarks::evaluate(config.spec, x);
  });
  CHECK(result.evaluations == calls);
  // population + per generation: 4 per crossed pair + population
  CHECK(result.evaluations <= 12ull + 25ull * (4 * 6 + 12));
  CHECK(result.evaluations >= 12ull + 25ull * 12);
  CHECK(result.last_generation == 25);
}

TEST_CASE("every gene stays within bounds for a whole run") {
  GasrConfig config = base_config(fixture_table(), 20, 40);
  config.spec = benchmarks::default_spec(benchmarks::FunctionId::schwefel, 5);
  config.early_termination = false;
  bool in_bounds = true;
  const GasrRunResult result = run(config, [&](std::span<const double> x) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] < config.spec.lower[i] || x[i] > config.spec.upper[i]) {
        in_bounds = false;
      }
    }
    return benchmarks::evaluate(config.spec, x);
  });
  CHECK(in_bounds);
  CHECK(result.best_fitness >= result.trace.front());
}

TEST_CASE("constant objective stops at generation 25 exactly") {
  GasrConfig config = base_config(fixture_table(), 10, 100);
  config.spec = benchmarks::default_spec(benchmarks::FunctionId::exponential, 2);
  const GasrRunResult result = run(config, [](std::span<const double>) { return 1.0; });
  CHECK(result.terminated_early);
  CHECK(result.last_generation == 25);
  CHECK(result.trace.size() == 26);

  config.early_termination = false;
  const GasrRunResult full = run(config, [](std::span<const double>) { return 1.0; });
  CHECK_FALSE(full.terminated_early);
  CHECK(full.last_generation == 100);
}

TEST_CASE("trace is monotone on a real run") {
  GasrConfig config = base_config(fixture_table(), 30, 50);
  config.spec = benchmarks::default_spec(benchmarks::FunctionId::rastrigin, 4);
  const GasrRunResult result = run(config);
  for (std::size_t g = 1; g < result.trace.size(); ++g) {
    CHECK(result.trace[g] >= result.trace[g - 1]);
  }
  CHECK(result.best_fitness == result.trace.back());
}

TEST_CASE("run report format") {
  GasrConfig config = base_config(fixture_table(), 10, 30);
  config.spec = benchmarks::default_spec(benchmarks::FunctionId::exponential, 2);
  const GasrRunResult result = run(config);
  RunReportHeader header;
  header.run_id = "exponential_2D_run1";
  header.function_label = "2D exponential";
  header.generations_configured = 30;
  header.population = 10;
  std::stringstream out;
  write_run_report(result, header, out);
  std::string line;
  std::getline(out, line);
  CHECK(line == "2D exponential");
  std::getline(out, line);
  CHECK(line == "--------------");
  std::getline(out, line);
  CHECK(line == "Run ID: exponential_2D_run1");
  std::getline(out, line);
  CHECK(line == "# Generations: 30");
  std::getline(out, line);
  CHECK(line == "# Chromos: 10");
  std::getline(out, line);
  CHECK(line.substr(0, 17) == "# Eval this run: ");
  std::getline(out, line);
  CHECK(line == "# Gen req'd: " + std::to_string(result.last_generation + 1));
  std::getline(out, line);  // blank
  std::getline(out, line);
  CHECK(line == "Gen #  Best Fitness");
  std::getline(out, line);
  CHECK(line == "-----");
  int rows = 0;
  while (std::getline(out, line)) ++rows;
  CHECK(rows == static_cast<int>(result.trace.size()));
}
