// SPDX-License-Identifier: Apache-2.0
#include "core/stats.hpp"

#include <algorithm>
#include <cmath>

#include "core/errors.hpp"

namespace gaussens {

void MomentAccumulator::add(double x) {
  ++count;
  const double delta = x - mean;
  mean += delta / count;
  m2 += delta * (x - mean);
}

MomentAccumulator MomentAccumulator::merged(const MomentAccumulator& a,
                                            const MomentAccumulator& b) {
  if (a.count == 0) return b;
  if (b.count == 0) return a;
  MomentAccumulator out;
  out.count = a.count + b.count;
  const double delta = b.mean - a.mean;
  out.mean = a.mean + delta * b.count / out.count;
  out.m2 = a.m2 + b.m2 + delta * delta * a.count * b.count / out.count;
  return out;
}

double MomentAccumulator::variance() const { return count > 1 ? m2 / (count - 1) : 0.0; }
double MomentAccumulator::stddev() const { return std::sqrt(variance()); }
double MomentAccumulator::std_error() const {
  return count > 0 ? stddev() / std::sqrt(static_cast<double>(count)) : 0.0;
}

double kolmogorov_q(double lambda) {
  if (lambda <= 0.0) return 1.0;
  double sum = 0.0;
  for (int j = 1; j <= 200; ++j) {
    const double term = std::exp(-2.0 * j * j * lambda * lambda);
    sum += (j % 2 == 1 ? term : -term);
    if (term < 1e-16) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

namespace {

double ks_p_value(double d, double n_effective) {
  const double rn = std::sqrt(n_effective);
  return kolmogorov_q((rn + 0.12 + 0.11 / rn) * d);
}

}  // namespace

KsResult ks_test(std::vector<double> data, const std::function<double(double)>& cdf) {
  if (data.empty()) throw InvariantError("KS test needs data");
  std::sort(data.begin(), data.end());
  const double n = static_cast<double>(data.size());
  double d = 0.0;
  for (size_t i = 0; i < data.size(); ++i) {
    const double f = cdf(data[i]);
    d = std::max(d, std::abs(f - static_cast<double>(i) / n));
    d = std::max(d, std::abs(static_cast<double>(i + 1) / n - f));
  }
  return {d, ks_p_value(d, n)};
}

KsResult ks_test(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw InvariantError("KS test needs data");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double xa = a[i], xb = b[j];
    if (xa <= xb) ++i;
    if (xb <= xa) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / a.size() -
                             static_cast<double>(j) / b.size()));
  }
  const double ne = static_cast<double>(a.size()) * b.size() / (a.size() + b.size());
  return {d, ks_p_value(d, ne)};
}

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  const size_t n = x.size();
  if (n != y.size() || n < 3) throw InvariantError("line fit needs >= 3 matched points");
  double sx = 0, sy = 0;
  for (size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0;
  for (size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx <= 0.0) throw InvariantError("line fit: x values are all equal");
  LineFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0.0;
  for (size_t i = 0; i < n; ++i) {
    const double r = y[i] - fit.slope * x[i] - fit.intercept;
    ss_res += r * r;
  }
  const double s2 = ss_res / static_cast<double>(n - 2);
  fit.slope_se = std::sqrt(s2 / sxx);
  fit.intercept_se = std::sqrt(s2 * (1.0 / n + mx * mx / sxx));
  return fit;
}

namespace {

// generic delete-one jackknife over a statistic of (count, sum, sum of squares)
double jackknife_from_sums(const std::vector<double>& v,
                           const std::function<double(double, double, double)>& stat) {
  const size_t n = v.size();
  if (n < 3) throw InvariantError("jackknife needs >= 3 samples");
  double s1 = 0, s2 = 0;
  for (double x : v) {
    s1 += x;
    s2 += x * x;
  }
  double mean_loo = 0.0;
  std::vector<double> loo(n);
  for (size_t i = 0; i < n; ++i) {
    loo[i] = stat(static_cast<double>(n - 1), s1 - v[i], s2 - v[i] * v[i]);
    mean_loo += loo[i];
  }
  mean_loo /= static_cast<double>(n);
  double ss = 0.0;
  for (size_t i = 0; i < n; ++i) ss += (loo[i] - mean_loo) * (loo[i] - mean_loo);
  return std::sqrt(ss * (static_cast<double>(n - 1) / n));
}

}  // namespace

double jackknife_se_distance_to_ref(const std::vector<double>& values, double ref) {
  return jackknife_from_sums(values, [ref](double n, double s1, double s2) {
    const double mean = s1 / n;
    const double var = (s2 - n * mean * mean) / (n - 1);
    return (ref - mean) / std::sqrt(var);
  });
}

double jackknife_se_var_over_mean(const std::vector<double>& values) {
  return jackknife_from_sums(values, [](double n, double s1, double s2) {
    const double mean = s1 / n;
    const double var = (s2 - n * mean * mean) / (n - 1);
    return var / mean;
  });
}

Histogram make_histogram(const std::vector<double>& values, int bins, double lo, double hi) {
  if (bins < 1) throw InvariantError("histogram needs at least one bin");
  if (!(hi > lo)) throw InvariantError("histogram range is empty");
  if (values.empty()) throw InvariantError("histogram needs data");
  Histogram h;
  h.edges.resize(bins + 1);
  for (int k = 0; k <= bins; ++k) h.edges[k] = lo + (hi - lo) * k / bins;
  h.counts.assign(bins, 0);
  for (double v : values) {
    int k = static_cast<int>((v - lo) / (hi - lo) * bins);
    k = std::clamp(k, 0, bins - 1);
    ++h.counts[k];
  }
  h.density.resize(bins);
  const double width = (hi - lo) / bins;
  for (int k = 0; k < bins; ++k) {
    h.density[k] = static_cast<double>(h.counts[k]) / (static_cast<double>(values.size()) * width);
  }
  return h;
}

}  // namespace gaussens
