#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "arfm/errors.hpp"

namespace arfm {

inline double mean(const std::vector<double>& v) {
  if (v.empty()) throw DomainError("mean: empty vector");
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

/// Population (divide-by-n) variance.
inline double population_variance(const std::vector<double>& v) {
  double m = mean(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return s / static_cast<double>(v.size());
}

inline double population_stddev(const std::vector<double>& v) {
  return std::sqrt(population_variance(v));
}

inline double normal_cdf(double x, double mu = 0.0, double sigma = 1.0) {
  return 0.5 * std::erfc(-(x - mu) / (sigma * std::sqrt(2.0)));
}

/// One-sample Kolmogorov-Smirnov distance between an empirical sample and a
/// theoretical CDF: sup_x |F_n(x) - F(x)| evaluated at the sample points.
inline double ks_distance(std::vector<double> samples, const std::function<double(double)>& cdf) {
  if (samples.empty()) throw DomainError("ks_distance: empty sample");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    const double lo = f - static_cast<double>(i) / n;
    const double hi = (static_cast<double>(i) + 1.0) / n - f;
    d = std::max(d, std::max(lo, hi));
  }
  return d;
}

}  // namespace arfm
