#pragma once

#include <span>
#include <string_view>
#include <vector>

namespace pifrac::benchmarks {

// Objective catalog, all expressed for MAXIMIZATION.

enum class FunctionId {
  ackley,
  cosine_mixture,
  exponential,
  griewank,
  rastrigin,
  schwefel,
  colville,
  goldstein_price,
  sgo,
  parrott_f4,
};

FunctionId function_from_name(std::string_view name);  // std::domain_error on unknown
std::string_view function_name(FunctionId id);

/// The six-function comparison suite (ackley .. schwefel).
std::span<const FunctionId> core_suite();

/// All ten catalog functions.
std::span<const FunctionId> full_catalog();

struct BenchmarkSpec {
  FunctionId id = FunctionId::ackley;
  int dims = 0;
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<double> offset;  // coordinate shift, default zero
  std::vector<double> optimum_location;
  double optimum_value = 0.0;
};

struct SpecOptions {
  bool rastrigin_wide_bounds = false;  // +-10 instead of the usual +-5.12
  bool griewank_shifted = false;       // subtract 100 from every coordinate
};

/// Catalog defaults: bounds, known optimum, zero offsets. std::domain_error
/// for a dimension that a fixed-arity function cannot take.
BenchmarkSpec default_spec(FunctionId id, int dims, const SpecOptions& options = {});

/// Objective value at x (to be maximized). Out-of-bounds points are
/// evaluated as-is; the search algorithms never produce them.
double evaluate(const BenchmarkSpec& spec, std::span<const double> x);

}  // namespace pifrac::benchmarks
