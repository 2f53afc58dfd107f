#pragma once

#include <cmath>
#include <string>
#include <utility>

#include "arfm/errors.hpp"
#include "arfm/matrix.hpp"

namespace arfm {

// Conditional flow-matching primitives on the optimal-transport path
//   A_tau = tau * A + (1 - tau) * eps,
// with regression target A - eps, so that forward Euler integration moves a
// unit-Gaussian draw at tau=0 onto the data point at tau=1.

/// One training draw: clean chunk, its noise, the interpolation time and the
/// derived noisy chunk / regression target.
struct FlowSample {
  ActionChunk clean;
  Matrix noise;
  double tau = 0.0;
  ActionChunk noisy;
  Matrix target;
};

inline ActionChunk noisy_chunk(const ActionChunk& clean, const Matrix& noise, double tau) {
  require_same_shape(clean, noise, "noisy_chunk");
  if (!(tau >= 0.0 && tau <= 1.0)) {
    throw DomainError("noisy_chunk: tau " + std::to_string(tau) + " outside [0,1]");
  }
  ActionChunk out(clean.rows(), clean.cols());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out.flat()[i] = tau * clean.flat()[i] + (1.0 - tau) * noise.flat()[i];
  }
  return out;
}

inline Matrix conditional_target(const ActionChunk& clean, const Matrix& noise) {
  require_same_shape(clean, noise, "conditional_target");
  Matrix out(clean.rows(), clean.cols());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out.flat()[i] = clean.flat()[i] - noise.flat()[i];
  }
  return out;
}

/// Squared Euclidean norm of the residual, summed over all H*d_a entries.
inline double fm_loss(const Matrix& prediction, const Matrix& target) {
  require_same_shape(prediction, target, "fm_loss");
  double s = 0.0;
  for (std::size_t i = 0; i < prediction.size(); ++i) {
    const double d = prediction.flat()[i] - target.flat()[i];
    s += d * d;
  }
  return s;
}

inline FlowSample make_flow_sample(ActionChunk clean, Matrix noise, double tau) {
  FlowSample s;
  s.noisy = noisy_chunk(clean, noise, tau);
  s.target = conditional_target(clean, noise);
  s.clean = std::move(clean);
  s.noise = std::move(noise);
  s.tau = tau;
  return s;
}

/// Forward Euler integration of a vector field from tau=0 to tau=1 in
/// `steps` equal increments. `field(chunk, tau)` must return a matrix of the
/// chunk's shape.
template <typename Field>
ActionChunk euler_integrate(Field&& field, const Matrix& init_noise, int steps) {
  if (steps < 1) throw DomainError("euler_integrate: steps must be >= 1");
  const double delta = 1.0 / static_cast<double>(steps);
  ActionChunk a = init_noise;
  for (int k = 0; k < steps; ++k) {
    const double tau = static_cast<double>(k) * delta;
    Matrix v = field(a, tau);
    require_same_shape(a, v, "euler_integrate");
    for (std::size_t i = 0; i < a.size(); ++i) {
      a.flat()[i] += delta * v.flat()[i];
      if (!std::isfinite(a.flat()[i])) {
        throw NumericError("euler_integrate: non-finite value at step " + std::to_string(k));
      }
    }
  }
  return a;
}

}  // namespace arfm
