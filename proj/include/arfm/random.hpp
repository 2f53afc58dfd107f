#pragma once

#include <cstdint>
#include <random>

#include "arfm/matrix.hpp"

namespace arfm {

using Rng = std::mt19937_64;

/// SplitMix64 finalizer; used to derive decorrelated sub-seeds from one base
/// seed so independent streams (data, init, batches, eval) never alias.
inline std::uint64_t mix_seed(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  return mix_seed(base ^ mix_seed(stream));
}

inline double draw_normal(Rng& rng) {
  std::normal_distribution<double> nd(0.0, 1.0);
  return nd(rng);
}

inline double draw_uniform01(Rng& rng) {
  std::uniform_real_distribution<double> ud(0.0, 1.0);
  return ud(rng);
}

inline Matrix gaussian_matrix(int rows, int cols, Rng& rng) {
  Matrix m(rows, cols);
  std::normal_distribution<double> nd(0.0, 1.0);
  for (double& v : m.flat()) v = nd(rng);
  return m;
}

}  // namespace arfm
