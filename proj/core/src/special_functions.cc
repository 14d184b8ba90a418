#include "nliart/special_functions.h"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace nliart {
namespace {

constexpr double kTolerance = 1e-14;
constexpr int kMaxIterations = 100000;
constexpr double kTiny = std::numeric_limits<double>::min() / kTolerance;

// ln(x^a e^-x / Gamma(a))
double LogPrefactor(double a, double x) { return -x + a * std::log(x) - std::lgamma(a); }

// P(a, x) by its power series; converges quickly for x < a + 1.
double LowerSeries(double a, double x) {
  double denom = a;
  double term = 1.0 / a;
  double sum = term;
  for (int n = 0; n < kMaxIterations; ++n) {
    denom += 1.0;
    term *= x / denom;
    sum += term;
    if (std::fabs(term) < std::fabs(sum) * kTolerance) {
      return std::exp(LogPrefactor(a, x)) * sum;
    }
  }
  throw std::runtime_error("incomplete gamma series did not converge");
}

// ln Q(a, x) by the modified Lentz continued fraction; for x >= a + 1.
double LogUpperContinuedFraction(double a, double x) {
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxIterations; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < kTolerance) return LogPrefactor(a, x) + std::log(h);
  }
  throw std::runtime_error("incomplete gamma continued fraction did not converge");
}

void CheckDomain(double a, double x) {
  if (!(a > 0.0) || !(x >= 0.0) || std::isinf(a)) {
    throw std::domain_error("incomplete gamma requires a > 0 and x >= 0 (a=" +
                            std::to_string(a) + ", x=" + std::to_string(x) + ")");
  }
}

}  // namespace

GammaTail RegularizedGammaQ(double a, double x) {
  CheckDomain(a, x);
  if (x == 0.0) return {1.0, 0.0};
  if (std::isinf(x)) return {0.0, -std::numeric_limits<double>::infinity()};
  if (x < a + 1.0) {
    const double p = LowerSeries(a, x);
    return {1.0 - p, std::log1p(-p)};
  }
  const double log_q = LogUpperContinuedFraction(a, x);
  return {std::exp(log_q), log_q};
}

double RegularizedGammaP(double a, double x) {
  CheckDomain(a, x);
  if (x == 0.0) return 0.0;
  if (x < a + 1.0) return LowerSeries(a, x);
  return -std::expm1(RegularizedGammaQ(a, x).log_q);
}

GammaTail ChiSquareSurvival(double statistic, int df) {
  if (df < 1) throw std::domain_error("chi-square needs df >= 1");
  return RegularizedGammaQ(0.5 * df, 0.5 * statistic);
}

}  // namespace nliart
