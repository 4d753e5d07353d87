// SPDX-License-Identifier: Apache-2.0
#include "core/analytics.hpp"

#include <cmath>

namespace gaussens {

double MomentPair::stddev() const {
  const double v = variance();
  return v > 0.0 ? std::sqrt(v) : 0.0;
}

double page_entropy(int m, int n) {
  if (m < 1 || n < 1 || m > n) throw InvariantError("page_entropy requires 1 <= m <= n");
  long double sum = 0.0L;
  const long long last = static_cast<long long>(m) * n;
  for (long long k = last; k > n; --k) sum += 1.0L / k;
  sum -= static_cast<long double>(m - 1) / (2.0L * n);
  return static_cast<double>(sum);
}

MomentPair haar_invpurity_moments(const Eigen::VectorXd& energies) {
  const int n = static_cast<int>(energies.size());
  if (n < 1) throw InvariantError("energy vector must be non-empty");
  for (int j = 0; j < n; ++j) {
    if (energies[j] < 2.0) throw InvariantError("per-mode energy below the vacuum value 2");
  }
  if (n == 1) return {1.0, 1.0};

  // power sums in extended precision; the distinct-index sums follow from
  // Newton-identity reductions instead of nested loops
  long double p1 = 0, p2 = 0, p3 = 0, p4 = 0;
  for (int j = 0; j < n; ++j) {
    const long double e = energies[j];
    p1 += e;
    p2 += e * e;
    p3 += e * e * e;
    p4 += e * e * e * e;
  }
  const long double s_jk = p1 * p1 - p2;                                  // E_j E_k
  const long double s_j2k2 = p2 * p2 - p4;                                // E_j^2 E_k^2
  const long double s_j2kl = p2 * p1 * p1 - 2 * p1 * p3 + 2 * p4 - p2 * p2;  // E_j^2 E_k E_l
  const long double s_all4 =
      p1 * p1 * p1 * p1 - 6 * p1 * p1 * p2 + 3 * p2 * p2 + 8 * p1 * p3 - 6 * p4;

  const long double mean_a = s_jk / (4.0L * (n + 1) * n) + 2.0L / (n + 1);
  const long double pref =
      1.0L / (16.0L * n * (n + 1.0L) * (n + 2.0L) * (n + 3.0L));  // (n-1)!/(16 (n+3)!)
  const long double mean_a2 =
      pref * (s_all4 + 8 * s_j2kl + 12 * s_j2k2 + (96.0L + 16.0L * (n - 2)) * s_jk -
              32.0L * (n - 1) * p2 + 128.0L * n * (n - 1) + 384.0L * n);
  return {static_cast<double>(mean_a), static_cast<double>(mean_a2)};
}

MomentPair canonical_invpurity_moments(const CanonicalConfig& cfg) {
  cfg.validate();
  const long double n = cfg.n;
  const long double t = cfg.temperature;
  const long double mean_a = 0.25L * (n - 1) / (n + 1) * (t * t + 4 * t) + 1.0L;
  // n!(n-1)/(n+3)! = (n-1)/((n+1)(n+2)(n+3)); the whole expression is the
  // compact-group average integrated against the Boltzmann energy weights
  const long double pref = (n - 1) / (16.0L * (n + 1) * (n + 2) * (n + 3));
  const long double poly = (n * n + 11 * n + 22) * t * t * t * t +
                           8 * (n + 1) * (n + 6) * t * t * t +
                           8 * (3 * n * n + 15 * n + 10) * t * t +
                           32 * (n + 3) * (n + 2) * t;
  return {static_cast<double>(mean_a), static_cast<double>(pref * poly + 1.0L)};
}

namespace {

MomentPair microcanonical_moments_impl(long double n, long double et) {
  const long double mean_a =
      (n - 1) / (4.0L * (n + 2) * (n + 1) * (n + 1)) * (et * et + 4 * (n + 2) * et) + 1.0L;
  // (n!)^2 (n-1) / (16 (n+4)! (n+3)!)
  const long double pref =
      (n - 1) / (16.0L * ((n + 1) * (n + 2) * (n + 3) * (n + 4)) * ((n + 1) * (n + 2) * (n + 3)));
  const long double poly =
      (n * n + 11 * n + 22) * et * et * et * et +
      8 * (n + 6) * (n + 4) * (n + 1) * et * et * et +
      8 * (n + 4) * (n + 3) * (3 * n * n + 15 * n + 10) * et * et +
      32 * (n + 4) * (n + 3) * (n + 3) * (n + 2) * (n + 2) * et;
  return {static_cast<double>(mean_a), static_cast<double>(pref * poly + 1.0L)};
}

}  // namespace

MomentPair microcanonical_invpurity_moments(const MicrocanonicalConfig& cfg) {
  cfg.validate();
  return microcanonical_moments_impl(cfg.n, cfg.reduced_energy());
}

double max_inv_purity(double reduced_energy) {
  if (reduced_energy < 0.0) throw InvariantError("reduced energy must be non-negative");
  const double q = reduced_energy + 4.0;
  return q * q / 16.0;
}

double max_entropy(int m, int n, double total_energy, LogBase base) {
  if (m < 1 || m > n) throw InvariantError("max_entropy requires 1 <= m <= n");
  const double arg = (total_energy - 2.0 * (n - m)) / (4.0 * m);
  if (arg < 1.0) {
    throw InvariantError("total energy below the minimum 2(n+m) for this bipartition");
  }
  return m * entropic_h(arg, base);
}

double asymptotic_entropy(int m, double temperature, LogBase base) {
  if (m < 1) throw InvariantError("subsystem mode count must be positive");
  if (temperature < 0.0) throw InvariantError("temperature must be non-negative");
  return m * entropic_h(1.0 + 0.5 * temperature, base);
}

double asymptotic_invariant(int d, int m, double temperature) {
  if (m < 1 || d < 1 || d > m) throw InvariantError("need 1 <= d <= m");
  if (temperature < 0.0) throw InvariantError("temperature must be non-negative");
  return binomial(m, d) * std::pow(1.0 + 0.5 * temperature, 2.0 * d);
}

double entropy_from_purity(double mu, LogBase base) {
  if (!(mu > 0.0) || mu > 1.0) throw InvariantError("purity must lie in (0, 1]");
  return entropic_h(1.0 / mu, base);
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

}  // namespace gaussens
