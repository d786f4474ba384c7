#include "pifrac/benchmarks.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace pifrac::benchmarks {

namespace {

constexpr double kPi = 3.141592653589793238462643;
constexpr double kE = 2.718281828459045235360287;
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kFivePi = 5.0 * kPi;

void require(bool ok, const char* message) {
  if (!ok) throw std::invalid_argument(message);
}

double ackley(std::span<const double> z) {
  const double n = static_cast<double>(z.size());
  double sum_sq = 0.0, sum_cos = 0.0;
  for (double x : z) {
    sum_sq += x * x;
    sum_cos += std::cos(kTwoPi * x);
  }
  return 20.0 * std::exp(-0.2 * std::sqrt(sum_sq / n)) + std::exp(sum_cos / n) -
         20.0 - kE;
}

double cosine_mixture(std::span<const double> z) {
  double sum_sq = 0.0, sum_cos = 0.0;
  for (double x : z) {
    sum_sq += x * x;
    sum_cos += std::cos(kFivePi * x);
  }
  return -sum_sq + 0.1 * sum_cos;
}

double exponential_fn(std::span<const double> z) {
  double sum_sq = 0.0;
  for (double x : z) sum_sq += x * x;
  return std::exp(-0.5 * sum_sq);
}

double griewank(std::span<const double> z) {
  double sum = 0.0, prod = 1.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    sum += z[i] * z[i];
    prod *= std::cos(z[i] / std::sqrt(static_cast<double>(i + 1)));
  }
  return -(sum / 4000.0 - prod + 1.0);
}

double rastrigin(std::span<const double> z) {
  double sum = 0.0;
  for (double x : z) sum += x * x - 10.0 * std::cos(kTwoPi * x) + 10.0;
  return -sum;
}

double schwefel(std::span<const double> z) {
  double sum = 0.0;
  for (double x : z) sum += x * std::sin(std::sqrt(std::abs(x)));
  return sum - 418.9829 * static_cast<double>(z.size());
}

double colville(std::span<const double> z) {
  const double x1 = z[0], x2 = z[1], x3 = z[2], x4 = z[3];
  const double t1 = x2 - x1 * x1;
  const double t3 = x4 - x3 * x3;
  return -(100.0 * t1 * t1 + (1.0 - x1) * (1.0 - x1) + 90.0 * t3 * t3 +
           (1.0 - x3) * (1.0 - x3) +
           10.1 * ((x2 - 1.0) * (x2 - 1.0) + (x4 - 1.0) * (x4 - 1.0)) +
           19.8 * (x2 - 1.0) * (x4 - 1.0));
}

double goldstein_price(std::span<const double> z) {
  const double x1 = z[0], x2 = z[1];
  const double a = x1 + x2 + 1.0;
  const double t1 =
      1.0 + a * a * (19.0 - 14.0 * x1 + 3.0 * x1 * x1 - 14.0 * x2 +
                     6.0 * x1 * x2 + 3.0 * x2 * x2);
  const double b = 2.0 * x1 - 3.0 * x2;
  const double t2 =
      30.0 + b * b * (18.0 - 32.0 * x1 + 12.0 * x1 * x1 + 48.0 * x2 -
                      36.0 * x1 * x2 + 27.0 * x2 * x2);
  return -(t1 * t2);
}

double sgo(std::span<const double> z) {
  const double x1 = z[0], x2 = z[1];
  const double t1 = x1 * x1 * x1 * x1 - 16.0 * x1 * x1 + 0.5 * x1;
  const double t2 = x2 * x2 * x2 * x2 - 16.0 * x2 * x2 + 0.5 * x2;
  return -(t1 + t2);
}

double parrott_f4(std::span<const double> z) {
  const double x = z[0];
  const double g = (x - 0.08) / 0.854;
  const double s = std::sin(kFivePi * (std::pow(x, 0.75) - 0.05));
  return std::exp(-2.0 * std::log(2.0) * g * g) * std::pow(s, 6.0);
}

struct CatalogRow {
  FunctionId id;
  std::string_view name;
  int fixed_dims;  // 0 when the dimensionality is free
};

constexpr std::array<CatalogRow, 10> kCatalog{{
    {FunctionId::ackley, "ackley", 0},
    {FunctionId::cosine_mixture, "cosine_mixture", 0},
    {FunctionId::exponential, "exponential", 0},
    {FunctionId::griewank, "griewank", 0},
    {FunctionId::rastrigin, "rastrigin", 0},
    {FunctionId::schwefel, "schwefel", 0},
    {FunctionId::colville, "colville", 4},
    {FunctionId::goldstein_price, "goldstein_price", 2},
    {FunctionId::sgo, "sgo", 2},
    {FunctionId::parrott_f4, "parrott_f4", 1},
}};

constexpr std::array<FunctionId, 6> kCoreSuite{
    FunctionId::ackley,         FunctionId::cosine_mixture,
    FunctionId::exponential,    FunctionId::griewank,
    FunctionId::rastrigin,      FunctionId::schwefel,
};

constexpr std::array<FunctionId, 10> kFullCatalog{
    FunctionId::ackley,          FunctionId::cosine_mixture,
    FunctionId::exponential,     FunctionId::griewank,
    FunctionId::rastrigin,       FunctionId::schwefel,
    FunctionId::colville,        FunctionId::goldstein_price,
    FunctionId::sgo,             FunctionId::parrott_f4,
};

const CatalogRow& row(FunctionId id) {
  for (const CatalogRow& r : kCatalog) {
    if (r.id == id) return r;
  }
  throw std::domain_error("unknown benchmark function id");
}

}  // namespace

FunctionId function_from_name(std::string_view name) {
  for (const CatalogRow& r : kCatalog) {
    if (r.name == name) return r.id;
  }
  throw std::domain_error("unknown benchmark function \"" + std::string(name) + "\"");
}

std::string_view function_name(FunctionId id) { return row(id).name; }

std::span<const FunctionId> core_suite() { return kCoreSuite; }

std::span<const FunctionId> full_catalog() { return kFullCatalog; }

BenchmarkSpec default_spec(FunctionId id, int dims, const SpecOptions& options) {
  const CatalogRow& r = row(id);
  if (r.fixed_dims != 0 && dims != r.fixed_dims) {
    throw std::domain_error(std::string(r.name) + " takes exactly " +
                            std::to_string(r.fixed_dims) + " dimensions");
  }
  if (dims < 1) throw std::domain_error("dims must be >= 1");

  BenchmarkSpec spec;
  spec.id = id;
  spec.dims = dims;
  spec.offset.assign(static_cast<std::size_t>(dims), 0.0);

  double bound = 0.0;
  switch (id) {
    case FunctionId::ackley: bound = 30.0; break;
    case FunctionId::cosine_mixture: bound = 1.0; break;
    case FunctionId::exponential: bound = 1.0; break;
    case FunctionId::griewank: bound = 600.0; break;
    case FunctionId::rastrigin: bound = options.rastrigin_wide_bounds ? 10.0 : 5.12; break;
    case FunctionId::schwefel: bound = 500.0; break;
    case FunctionId::colville: bound = 10.0; break;
    case FunctionId::goldstein_price: bound = 100.0; break;
    case FunctionId::sgo: bound = 50.0; break;
    case FunctionId::parrott_f4: bound = 0.0; break;  // domain is [0, 1]
  }
  if (id == FunctionId::parrott_f4) {
    spec.lower.assign(1, 0.0);
    spec.upper.assign(1, 1.0);
  } else {
    spec.lower.assign(static_cast<std::size_t>(dims), -bound);
    spec.upper.assign(static_cast<std::size_t>(dims), bound);
  }

  switch (id) {
    case FunctionId::ackley:
    case FunctionId::rastrigin:
      spec.optimum_location.assign(static_cast<std::size_t>(dims), 0.0);
      spec.optimum_value = 0.0;
      break;
    case FunctionId::cosine_mixture:
      spec.optimum_location.assign(static_cast<std::size_t>(dims), 0.0);
      spec.optimum_value = 0.1 * dims;
      break;
    case FunctionId::exponential:
      spec.optimum_location.assign(static_cast<std::size_t>(dims), 0.0);
      spec.optimum_value = 1.0;
      break;
    case FunctionId::griewank:
      if (options.griewank_shifted) {
        spec.offset.assign(static_cast<std::size_t>(dims), 100.0);
        spec.optimum_location.assign(static_cast<std::size_t>(dims), 100.0);
      } else {
        spec.optimum_location.assign(static_cast<std::size_t>(dims), 0.0);
      }
      spec.optimum_value = 0.0;
      break;
    case FunctionId::schwefel:
      spec.optimum_location.assign(static_cast<std::size_t>(dims), 420.9687);
      spec.optimum_value = 0.0;
      break;
    case FunctionId::colville:
      spec.optimum_location.assign(4, 1.0);
      spec.optimum_value = 0.0;
      break;
    case FunctionId::goldstein_price:
      spec.optimum_location = {0.0, -1.0};
      spec.optimum_value = -3.0;
      break;
    case FunctionId::sgo:
      spec.optimum_location = {-2.8362074922458584, -2.8362074922458584};
      spec.optimum_value = 130.83232264432905;
      break;
    case FunctionId::parrott_f4:
      spec.optimum_location = {0.0796875};
      spec.optimum_value = 1.0;
      break;
  }
  return spec;
}

double evaluate(const BenchmarkSpec& spec, std::span<const double> x) {
  require(static_cast<int>(x.size()) == spec.dims,
          "evaluate: point dimensionality must match the spec");

  std::array<double, 64> small;
  std::vector<double> large;
  std::span<double> z;
  if (x.size() <= small.size()) {
    z = std::span<double>(small.data(), x.size());
  } else {
    large.resize(x.size());
    z = large;
  }
  const bool shifted = !spec.offset.empty();
  for (std::size_t i = 0; i < x.size(); ++i) {
    z[i] = shifted ? x[i] - spec.offset[i] : x[i];
  }

  switch (spec.id) {
    case FunctionId::ackley: return ackley(z);
    case FunctionId::cosine_mixture: return cosine_mixture(z);
    case FunctionId::exponential: return exponential_fn(z);
    case FunctionId::griewank: return griewank(z);
    case FunctionId::rastrigin: return rastrigin(z);
    case FunctionId::schwefel: return schwefel(z);
    case FunctionId::colville: return colville(z);
    case FunctionId::goldstein_price: return goldstein_price(z);
    case FunctionId::sgo: return sgo(z);
    case FunctionId::parrott_f4: return parrott_f4(z);
  }
  throw std::domain_error("unknown benchmark function id");
}

}  // namespace pifrac::benchmarks
