// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <vector>

namespace gaussens {

/// Streaming mean/variance accumulator (Welford), mergeable pairwise so that
/// parallel partial results reduce to the same totals in any association.
struct MomentAccumulator {
  long long count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x);
  static MomentAccumulator merged(const MomentAccumulator& a, const MomentAccumulator& b);

  double variance() const;  // sample variance, count - 1 in the denominator
  double stddev() const;
  double std_error() const;  // of the mean
};

struct KsResult {
  double statistic = 0.0;
  double p_value = 1.0;
};

/// P(K > lambda) for the Kolmogorov distribution.
double kolmogorov_q(double lambda);

/// One-sample Kolmogorov-Smirnov test against a CDF. Sorts its input.
KsResult ks_test(std::vector<double> data, const std::function<double(double)>& cdf);

/// Two-sample Kolmogorov-Smirnov test. Sorts its inputs.
KsResult ks_test(std::vector<double> a, std::vector<double> b);

/// Ordinary least squares y = slope * x + intercept with standard errors
/// from the fit residuals.
struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_se = 0.0;
  double intercept_se = 0.0;
};

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

/// Delete-one jackknife standard error of (ref - mean)/std over the sample.
double jackknife_se_distance_to_ref(const std::vector<double>& values, double ref);

/// Delete-one jackknife standard error of variance/mean over the sample.
double jackknife_se_var_over_mean(const std::vector<double>& values);

struct Histogram {
  std::vector<double> edges;   // bins + 1
  std::vector<long long> counts;
  std::vector<double> density;  // counts / (total * width)
};

/// Equal-width histogram on [lo, hi]; values on the top edge land in the last
/// bin, values outside the range are clamped into the edge bins.
Histogram make_histogram(const std::vector<double>& values, int bins, double lo, double hi);

}  // namespace gaussens
