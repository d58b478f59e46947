#include "atnquant/stats.hpp"

#include <cmath>
#include <cstddef>
#include <limits>
#include <string>

#include "atnquant/errors.hpp"

namespace atnquant::stats {

namespace {

void require_paired(std::span<const double> x, std::span<const double> y, std::size_t min_n,
                    const char* who) {
  if (x.size() != y.size())
    fail(ErrorCode::degenerate_fit, std::string(who) + ": inputs differ in length");
  if (x.size() < min_n)
    fail(ErrorCode::degenerate_fit,
         std::string(who) + ": needs at least " + std::to_string(min_n) + " pairs");
}

// Continued fraction for the incomplete beta, modified Lentz evaluation.
double beta_cf(double a, double b, double x) {
  constexpr int kMaxIter = 400;
  constexpr double kEps = 1e-14;
  constexpr double kTiny = 1e-300;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEps) break;
  }
  return h;
}

} // namespace

double mean(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

double sample_variance(std::span<const double> v) {
  const double m = mean(v);
  double ss = 0.0;
  for (double x : v) ss += (x - m) * (x - m);
  return ss / static_cast<double>(v.size() - 1);
}

FitResult linear_fit(std::span<const double> x, std::span<const double> y) {
  require_paired(x, y, 2, "linear_fit");
  const std::size_t n = x.size();
  const double mx = mean(x);
  const double my = mean(y);
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  bool y_all_equal = true;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
    if (y[i] != y[0]) y_all_equal = false;
  }
  if (sxx <= 0.0) fail(ErrorCode::degenerate_fit, "linear_fit: x has zero variance");

  FitResult fit;
  fit.n = static_cast<int>(n);
  if (y_all_equal || syy <= 0.0) {
    // y constant: the flat line fits exactly but R^2 is undefined; report 0.
    fit.slope = 0.0;
    fit.intercept = y[0];
    fit.r2 = 0.0;
    fit.constant_y = true;
    return fit;
  }
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = y[i] - (fit.slope * x[i] + fit.intercept);
    ss_res += r * r;
  }
  fit.r2 = 1.0 - ss_res / syy;
  if (fit.r2 < 0.0) fit.r2 = 0.0;
  if (fit.r2 > 1.0) fit.r2 = 1.0;
  return fit;
}

double cohens_d(std::span<const double> a, std::span<const double> b) {
  if (a.size() < 2 || b.size() < 2)
    fail(ErrorCode::degenerate_fit, "cohens_d: each group needs n >= 2");
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  const double va = sample_variance(a);
  const double vb = sample_variance(b);
  const double pooled = std::sqrt(((na - 1.0) * va + (nb - 1.0) * vb) / (na + nb - 2.0));
  if (pooled <= 0.0) fail(ErrorCode::zero_pooled_sd, "cohens_d: pooled sd is zero");
  return (mean(b) - mean(a)) / pooled;
}

double icc(std::span<const double> x, std::span<const double> y) {
  require_paired(x, y, 3, "icc");
  const std::size_t n = x.size();
  const double k = 2.0;
  const double nn = static_cast<double>(n);

  // Two-way layout: subjects as rows, the two measurements as columns.
  double grand = 0.0;
  for (std::size_t i = 0; i < n; ++i) grand += x[i] + y[i];
  grand /= nn * k;

  const double cx = mean(x);
  const double cy = mean(y);

  double ss_rows = 0.0, ss_err = 0.0;
  const double ss_cols = nn * ((cx - grand) * (cx - grand) + (cy - grand) * (cy - grand));
  for (std::size_t i = 0; i < n; ++i) {
    const double row_mean = 0.5 * (x[i] + y[i]);
    ss_rows += k * (row_mean - grand) * (row_mean - grand);
    const double ex = x[i] - row_mean - cx + grand;
    const double ey = y[i] - row_mean - cy + grand;
    ss_err += ex * ex + ey * ey;
  }
  const double msr = ss_rows / (nn - 1.0);
  const double msc = ss_cols / (k - 1.0);
  const double mse = ss_err / ((nn - 1.0) * (k - 1.0));

  const double denom = msr + (k - 1.0) * mse + (k / nn) * (msc - mse);
  if (std::abs(denom) < 1e-300)
    fail(ErrorCode::degenerate_anova, "icc: degenerate mean squares");
  return (msr - mse) / denom;
}

BlandAltmanResult bland_altman(std::span<const double> x, std::span<const double> y) {
  require_paired(x, y, 2, "bland_altman");
  std::vector<double> diffs(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) diffs[i] = x[i] - y[i];
  BlandAltmanResult r;
  r.bias = mean(diffs);
  const double sd = std::sqrt(sample_variance(diffs));
  r.loa_low = r.bias - 1.96 * sd;
  r.loa_high = r.bias + 1.96 * sd;
  return r;
}

AnovaResult anova_oneway(const std::vector<std::vector<double>>& groups) {
  if (groups.size() < 2)
    fail(ErrorCode::degenerate_anova, "anova_oneway: needs at least 2 groups");
  std::size_t total_n = 0;
  double grand_sum = 0.0;
  for (const auto& g : groups) {
    if (g.size() < 2)
      fail(ErrorCode::degenerate_anova, "anova_oneway: each group needs n >= 2");
    total_n += g.size();
    for (double v : g) grand_sum += v;
  }
  const double grand = grand_sum / static_cast<double>(total_n);

  double ssb = 0.0, ssw = 0.0;
  for (const auto& g : groups) {
    const double gm = mean(g);
    ssb += static_cast<double>(g.size()) * (gm - grand) * (gm - grand);
    for (double v : g) ssw += (v - gm) * (v - gm);
  }
  const double dfb = static_cast<double>(groups.size() - 1);
  const double dfw = static_cast<double>(total_n - groups.size());
  if (ssw <= 0.0)
    fail(ErrorCode::degenerate_anova, "anova_oneway: zero within-group variance");

  AnovaResult r;
  r.df_between = dfb;
  r.df_within = dfw;
  r.f = (ssb / dfb) / (ssw / dfw);
  r.p = f_survival(r.f, dfb, dfw);
  return r;
}

AgreementResult agreement(std::span<const double> x, std::span<const double> y) {
  AgreementResult r;
  r.icc = icc(x, y);
  const BlandAltmanResult ba = bland_altman(x, y);
  r.bias = ba.bias;
  r.loa_low = ba.loa_low;
  r.loa_high = ba.loa_high;
  return r;
}

double incomplete_beta(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                          a * std::log(x) + b * std::log(1.0 - x);
  const double front = std::exp(ln_front);
  if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_cf(a, b, x) / a;
  return 1.0 - front * beta_cf(b, a, 1.0 - x) / b;
}

double f_survival(double f, double d1, double d2) {
  if (f <= 0.0) return 1.0;
  return incomplete_beta(d2 / 2.0, d1 / 2.0, d2 / (d2 + d1 * f));
}

} // namespace atnquant::stats
