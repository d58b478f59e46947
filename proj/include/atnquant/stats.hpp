#ifndef ATNQUANT_STATS_HPP
#define ATNQUANT_STATS_HPP

#include <span>
#include <vector>

namespace atnquant::stats {

struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
  int n = 0;
  bool constant_y = false; // SStot was zero; r2 reported as 0 by convention
};

struct BlandAltmanResult {
  double bias = 0.0;
  double loa_low = 0.0;
  double loa_high = 0.0;
};

struct AnovaResult {
  double f = 0.0;
  double p = 1.0;
  double df_between = 0.0;
  double df_within = 0.0;
};

/// Combined agreement summary for two paired raters/pipelines.
struct AgreementResult {
  double icc = 0.0;
  double bias = 0.0;
  double loa_low = 0.0;
  double loa_high = 0.0;
};

double mean(std::span<const double> v);
double sample_variance(std::span<const double> v); // n-1 estimator

/// Ordinary least squares y = slope*x + intercept. Throws DegenerateFit
/// when n < 2 or var(x) == 0.
FitResult linear_fit(std::span<const double> x, std::span<const double> y);

/// (mean(b) - mean(a)) / pooled sd. Throws ZeroPooledSd.
double cohens_d(std::span<const double> a, std::span<const double> b);

/// ICC(2,1): two-way random effects, absolute agreement, single measurement.
double icc(std::span<const double> x, std::span<const double> y);

/// diffs = x - y; bias = mean, limits of agreement at 1.96 sd.
BlandAltmanResult bland_altman(std::span<const double> x, std::span<const double> y);

AnovaResult anova_oneway(const std::vector<std::vector<double>>& groups);

AgreementResult agreement(std::span<const double> x, std::span<const double> y);

/// Regularized incomplete beta I_x(a,b), continued-fraction evaluation,
/// ~1e-12 accurate on the interior.
double incomplete_beta(double a, double b, double x);

/// Upper tail of the F distribution: P(F(d1,d2) > f).
double f_survival(double f, double d1, double d2);

} // namespace atnquant::stats

#endif
