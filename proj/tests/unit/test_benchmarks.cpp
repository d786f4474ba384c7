#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "pifrac/benchmarks.hpp"
#include "pifrac/sampling.hpp"

using namespace pifrac::benchmarks;

namespace {

double eval_at(const BenchmarkSpec& spec, const std::vector<double>& x) {
  return evaluate(spec, x);
}

std::vector<double> uniform_point(const BenchmarkSpec& spec,
                                  pifrac::sampling::SplitMix64& rng) {
  std::vector<double> x(static_cast<std::size_t>(spec.dims));
  for (int i = 0; i < spec.dims; ++i) {
    const std::size_t idx = static_cast<std::size_t>(i);
    x[idx] = spec.lower[idx] + (spec.upper[idx] - spec.lower[idx]) * rng.next_double();
  }
  return x;
}

}  // namespace

TEST_CASE("stated optima evaluate to stated values") {
  for (FunctionId id : full_catalog()) {
    const int dims = id == FunctionId::colville          ? 4
                     : id == FunctionId::goldstein_price ? 2
                     : id == FunctionId::sgo             ? 2
                     : id == FunctionId::parrott_f4      ? 1
                                                         : 10;
    const BenchmarkSpec spec = default_spec(id, dims);
    const double at_optimum = eval_at(spec, spec.optimum_location);
    const double tolerance = id == FunctionId::schwefel ? 1e-3 : 1e-6;
    CHECK(std::abs(at_optimum - spec.optimum_value) < tolerance);
  }
}

TEST_CASE("catalog point values") {
  CHECK(eval_at(default_spec(FunctionId::ackley, 10), std::vector<double>(10, 0.0)) ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(eval_at(default_spec(FunctionId::cosine_mixture, 10),
                std::vector<double>(10, 0.0)) == doctest::Approx(1.0));
  CHECK(eval_at(default_spec(FunctionId::exponential, 10),
                std::vector<double>(10, 0.0)) == 1.0);
  CHECK(eval_at(default_spec(FunctionId::rastrigin, 10),
                std::vector<double>(10, 0.0)) == 0.0);
  CHECK(eval_at(default_spec(FunctionId::griewank, 10),
                std::vector<double>(10, 0.0)) == 0.0);
  CHECK(eval_at(default_spec(FunctionId::colville, 4), {1, 1, 1, 1}) == 0.0);
  CHECK(eval_at(default_spec(FunctionId::colville, 4), {0, 0, 0, 0}) ==
        doctest::Approx(-42.0).epsilon(1e-12));
  CHECK(eval_at(default_spec(FunctionId::goldstein_price, 2), {0, -1}) ==
        doctest::Approx(-3.0).epsilon(1e-12));

  // Schwefel's catalog constant leaves a small per-coordinate residual.
  const double schwefel10 =
      eval_at(default_spec(FunctionId::schwefel, 10), std::vector<double>(10, 420.9687));
  CHECK(schwefel10 == doctest::Approx(10 * -1.27278374934e-5).epsilon(1e-4));
  CHECK(std::abs(schwefel10) < 1e-3);

  // Sibling constants pinned by the pre-build optimizer oracle.
  CHECK(eval_at(default_spec(FunctionId::sgo, 2),
                {-2.8362074922458584, -2.8362074922458584}) ==
        doctest::Approx(130.83232264432905).epsilon(1e-12));
  CHECK(eval_at(default_spec(FunctionId::parrott_f4, 1), {0.0796875}) ==
        doctest::Approx(0.9999996057650082).epsilon(1e-12));
  CHECK(eval_at(default_spec(FunctionId::parrott_f4, 1), {0.07969977961179582}) ==
        doctest::Approx(0.9999998284544725).epsilon(1e-12));
}

TEST_CASE("shifted variants stay constructible") {
  SpecOptions shifted;
  shifted.griewank_shifted = true;
  const BenchmarkSpec spec = default_spec(FunctionId::griewank, 10, shifted);
  CHECK(eval_at(spec, std::vector<double>(10, 100.0)) == 0.0);
  CHECK(spec.optimum_location[0] == 100.0);

  BenchmarkSpec gp = default_spec(FunctionId::goldstein_price, 2);
  gp.offset = {20.0, -10.0};
  CHECK(eval_at(gp, {20.0, -11.0}) == doctest::Approx(-3.0).epsilon(1e-12));
}

TEST_CASE("default bounds follow the catalog") {
  CHECK(default_spec(FunctionId::ackley, 30).upper[0] == 30.0);
  CHECK(default_spec(FunctionId::cosine_mixture, 30).upper[0] == 1.0);
  CHECK(default_spec(FunctionId::exponential, 30).upper[0] == 1.0);
  CHECK(default_spec(FunctionId::griewank, 30).upper[0] == 600.0);
  CHECK(default_spec(FunctionId::rastrigin, 30).upper[0] == 5.12);
  SpecOptions wide;
  wide.rastrigin_wide_bounds = true;
  CHECK(default_spec(FunctionId::rastrigin, 30, wide).upper[0] == 10.0);
  CHECK(default_spec(FunctionId::schwefel, 30).upper[0] == 500.0);
  CHECK(default_spec(FunctionId::colville, 4).upper[0] == 10.0);
  CHECK(default_spec(FunctionId::goldstein_price, 2).upper[0] == 100.0);
  CHECK(default_spec(FunctionId::sgo, 2).upper[0] == 50.0);
  CHECK(default_spec(FunctionId::parrott_f4, 1).lower[0] == 0.0);
  CHECK(default_spec(FunctionId::parrott_f4, 1).upper[0] == 1.0);
}

TEST_CASE("dimension rules for fixed-arity functions") {
  CHECK_THROWS_AS(default_spec(FunctionId::colville, 5), std::domain_error);
  CHECK_THROWS_AS(default_spec(FunctionId::goldstein_price, 3), std::domain_error);
  CHECK_THROWS_AS(default_spec(FunctionId::parrott_f4, 2), std::domain_error);
  CHECK_THROWS_AS(function_from_name("rosenbrock"), std::domain_error);
  CHECK(function_from_name("ackley") == FunctionId::ackley);
}

TEST_CASE("sampled in-bounds values never beat the optimum") {
  pifrac::sampling::SplitMix64 rng(2024);
  for (FunctionId id : full_catalog()) {
    const int dims = id == FunctionId::colville          ? 4
                     : id == FunctionId::goldstein_price ? 2
                     : id == FunctionId::sgo             ? 2
                     : id == FunctionId::parrott_f4      ? 1
                                                         : 6;
    const BenchmarkSpec spec = default_spec(id, dims);
    for (int trial = 0; trial < 100; ++trial) {
      const double value = eval_at(spec, uniform_point(spec, rng));
      CHECK(std::isfinite(value));
      CHECK(value <= spec.optimum_value + 1e-9);
    }
  }
}

TEST_CASE("even symmetry spot checks") {
  pifrac::sampling::SplitMix64 rng(99);
  for (FunctionId id : {FunctionId::ackley, FunctionId::rastrigin,
                        FunctionId::exponential, FunctionId::cosine_mixture}) {
    const BenchmarkSpec spec = default_spec(id, 5);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<double> x = uniform_point(spec, rng);
      std::vector<double> negated(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) negated[i] = -x[i];
      CHECK(eval_at(spec, x) == doctest::Approx(eval_at(spec, negated)).epsilon(1e-12));
    }
  }
}

TEST_CASE("evaluate validates dimensionality") {
  const BenchmarkSpec spec = default_spec(FunctionId::ackley, 3);
  CHECK_THROWS_AS(evaluate(spec, std::vector<double>{1.0, 2.0}), std::invalid_argument);
}
