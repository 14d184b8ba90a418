#pragma once

namespace nliart {

struct GammaTail {
  double q = 1.0;      // Q(a, x)
  double log_q = 0.0;  // ln Q(a, x), finite even when q underflows to 0
};

// Regularized upper incomplete gamma Q(a, x) = Gamma(a, x) / Gamma(a).
// Series expansion of P for x < a + 1, Lentz continued fraction for Q
// otherwise; both iterate to 1e-14 relative convergence. Requires a > 0 and
// x >= 0 (std::domain_error otherwise).
GammaTail RegularizedGammaQ(double a, double x);

// Regularized lower incomplete gamma P(a, x) = 1 - Q(a, x).
double RegularizedGammaP(double a, double x);

// Survival function of the chi-square distribution: Q(df / 2, statistic / 2).
GammaTail ChiSquareSurvival(double statistic, int df);

}  // namespace nliart
