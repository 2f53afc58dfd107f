#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "arfm/errors.hpp"

namespace arfm {

// Adaptive scaling-factor machinery. The trade-off objective
//   J(alpha) = sigma_L^2 (e^{2 alpha^2 sigma_R^2} - e^{alpha^2 sigma_R^2}) - lambda alpha sigma_R^2
// is minimized by the root of
//   F(x) = 4 sqrt(x) e^{2x} - 2 sqrt(x) e^x - lambda sigma_R / sigma_L^2
// under the substitution x = alpha^2 sigma_R^2. F is strictly increasing on
// x > 0, so a clipped bisection in x-space finds the minimizer.

struct AlphaConfig {
  double lambda = 5.0e-4;   // signal/variance trade-off
  int bisect_iters = 20;    // M, max bisection iterations
  double alpha_min = 0.01;
  double alpha_max = 5.0;
  double tol = 1.0e-5;      // residual tolerance epsilon

  void validate() const {
    if (lambda < 0.0) throw ConfigError("AlphaConfig: lambda must be >= 0");
    if (bisect_iters < 1) throw ConfigError("AlphaConfig: bisect_iters must be >= 1");
    if (alpha_min < 0.0 || alpha_max < alpha_min) {
      throw ConfigError("AlphaConfig: need 0 <= alpha_min <= alpha_max");
    }
    if (tol < 0.0) throw ConfigError("AlphaConfig: tol must be >= 0");
  }
};

/// Batch moments feeding the solver: sigma_R is the root-mean-square
/// advantage (uncentered), mu_L / sigma_L the per-sample FM loss moments.
/// mu_L is unused by F and kept for logging.
struct AlphaStats {
  double sigma_r = 0.0;
  double mu_l = 0.0;
  double sigma_l = 0.0;
};

struct AlphaSolution {
  double alpha = 0.0;          // clamped to [alpha_min, alpha_max]
  double x = 0.0;              // bisection midpoint, (alpha_unclipped * sigma_R)^2
  int iterations = 0;          // bisection loop iterations executed
  double residual = 0.0;       // F at the returned point
  bool clipped = false;        // true when the root lies outside the bracket
  bool degenerate = false;     // sigma_R = 0 or sigma_L = 0 batch
  double bracket_width = 0.0;  // final bracket width; halved exactly per split
};

inline AlphaStats batch_stats(const std::vector<double>& advantages, const std::vector<double>& per_sample_losses) {
  const std::size_t b = advantages.size();
  if (b < 2 || per_sample_losses.size() < 2) {
    throw DomainError("batch_stats: batch size must be >= 2");
  }
  if (per_sample_losses.size() != b) {
    throw DimensionError("batch_stats: advantages/losses length mismatch");
  }
  double sum_r2 = 0.0;
  for (double r : advantages) {
    if (!std::isfinite(r)) throw DomainError("batch_stats: non-finite advantage");
    sum_r2 += r * r;
  }
  double sum_l = 0.0;
  for (double l : per_sample_losses) {
    if (!std::isfinite(l)) throw DomainError("batch_stats: non-finite loss");
    sum_l += l;
  }
  AlphaStats s;
  s.sigma_r = std::sqrt(sum_r2 / static_cast<double>(b));
  s.mu_l = sum_l / static_cast<double>(b);
  double sum_dl2 = 0.0;
  for (double l : per_sample_losses) sum_dl2 += (l - s.mu_l) * (l - s.mu_l);
  s.sigma_l = std::sqrt(sum_dl2 / static_cast<double>(b));
  return s;
}

/// The bias-variance trade-off objective J(alpha).
inline double objective_J(double alpha, double sigma_r, double sigma_l, double lambda) {
  if (sigma_r < 0.0 || sigma_l < 0.0) throw DomainError("objective_J: negative sigma");
  const double y = alpha * alpha * sigma_r * sigma_r;
  if (2.0 * y > 700.0) {
    throw NumericError("objective_J: exponent overflow, 2*alpha^2*sigma_R^2 = " + std::to_string(2.0 * y));
  }
  return sigma_l * sigma_l * (std::exp(2.0 * y) - std::exp(y)) - lambda * alpha * sigma_r * sigma_r;
}

/// Stationarity residual of J in x = alpha^2 sigma_R^2. Strictly increasing
/// on x > 0.
inline double residual_F(double x, double sigma_r, double sigma_l, double lambda) {
  if (x < 0.0) throw DomainError("residual_F: x must be >= 0");
  if (sigma_l <= 0.0) {
    throw DomainError("residual_F: sigma_L = 0, weighting cannot trade off against zero loss variance");
  }
  const double sx = std::sqrt(x);
  return 4.0 * sx * std::exp(2.0 * x) - 2.0 * sx * std::exp(x) - lambda * sigma_r / (sigma_l * sigma_l);
}

namespace detail {
inline double x_of_alpha(double alpha, double sigma_r) {
  const double v = alpha * sigma_r;
  return v * v;
}
}  // namespace detail

/// Clipped bisection for alpha*. Degenerate batches (sigma_R = 0 or
/// sigma_L = 0) return alpha_min: with no advantage spread or no loss spread
/// the weighting question is moot and training proceeds as (near-)vanilla FM.
inline AlphaSolution solve_alpha(const AlphaStats& stats, const AlphaConfig& cfg) {
  cfg.validate();
  AlphaSolution sol;
  if (stats.sigma_r <= 0.0 || stats.sigma_l <= 0.0) {
    sol.alpha = cfg.alpha_min;
    sol.x = detail::x_of_alpha(cfg.alpha_min, stats.sigma_r);
    sol.degenerate = true;
    return sol;
  }

  const double x_lo = detail::x_of_alpha(cfg.alpha_min, stats.sigma_r);
  const double x_hi = detail::x_of_alpha(cfg.alpha_max, stats.sigma_r);
  auto F = [&](double x) { return residual_F(x, stats.sigma_r, stats.sigma_l, cfg.lambda); };

  // No sign change in the bracket: F is increasing, so the root lies outside
  // and the nearer endpoint is returned, clamped.
  const double f_lo = F(x_lo);
  if (f_lo > 0.0) {
    sol.alpha = cfg.alpha_min;
    sol.x = x_lo;
    sol.residual = f_lo;
    sol.clipped = true;
    sol.bracket_width = x_hi - x_lo;
    return sol;
  }
  const double f_hi = F(x_hi);
  if (f_hi < 0.0) {
    sol.alpha = cfg.alpha_max;
    sol.x = x_hi;
    sol.residual = f_hi;
    sol.clipped = true;
    sol.bracket_width = x_hi - x_lo;
    return sol;
  }

  // Bisection on x. The bracket is kept as (low, width) so each split halves
  // the width exactly in floating point.
  double low = x_lo;
  double width = x_hi - x_lo;
  double x_star = low + 0.5 * width;
  bool broke_on_tol = false;
  for (int m = 1; m <= cfg.bisect_iters; ++m) {
    const double x_mid = low + 0.5 * width;
    const double f_mid = F(x_mid);
    sol.iterations = m;
    if (std::fabs(f_mid) < cfg.tol) {
      x_star = x_mid;
      sol.residual = f_mid;
      broke_on_tol = true;
      break;
    }
    if (f_mid > 0.0) {
      width *= 0.5;  // high := mid
    } else {
      low = x_mid;
      width *= 0.5;
    }
  }
  if (!broke_on_tol) {
    x_star = low + 0.5 * width;
    sol.residual = F(x_star);
  }

  sol.x = x_star;
  sol.bracket_width = width;
  const double alpha_raw = std::sqrt(x_star) / stats.sigma_r;
  sol.alpha = std::clamp(alpha_raw, cfg.alpha_min, cfg.alpha_max);
  sol.clipped = sol.alpha != alpha_raw;
  return sol;
}

}  // namespace arfm
