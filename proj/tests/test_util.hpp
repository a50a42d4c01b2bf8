// Copyright 2026 The muxprep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Oracles and generators shared by the unit and acceptance suites. These
// stay independent of the code paths they check: the multiplexer matrix is
// built basis state by basis state, never through the Gray-code lowering.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "muxprep/angle_tree.hpp"
#include "muxprep/simulator.hpp"
#include "muxprep/state.hpp"

namespace testutil {

// Reference multiplexer unitary: for every basis column, read the control
// value (topmost control = most significant bit) and apply Ry(angles[value])
// on the target wire.
inline muxprep::DenseMatrix multiplexer_matrix(int num_qubits, int target,
                                               const std::vector<int>& control_qubits,
                                               const std::vector<double>& angles) {
  const std::size_t dim = std::size_t{1} << num_qubits;
  muxprep::DenseMatrix m = muxprep::DenseMatrix::zero(dim);
  const int target_bit = num_qubits - 1 - target;
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t value = 0;
    for (int c : control_qubits) {
      value = (value << 1) | ((col >> (num_qubits - 1 - c)) & 1);
    }
    const double half = angles[value] / 2.0;
    const double cos_h = std::cos(half);
    const double sin_h = std::sin(half);
    const std::size_t row0 = col & ~(std::size_t{1} << target_bit);
    const std::size_t row1 = col | (std::size_t{1} << target_bit);
    if ((col >> target_bit) & 1) {
      m.at(row0, col) = -sin_h;
      m.at(row1, col) = cos_h;
    } else {
      m.at(row0, col) = cos_h;
      m.at(row1, col) = sin_h;
    }
  }
  return m;
}

inline double max_entry_diff(const muxprep::DenseMatrix& a, const muxprep::DenseMatrix& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    worst = std::max(worst, std::abs(a.entries[i] - b.entries[i]));
  }
  return worst;
}

inline double max_unitarity_defect(const muxprep::DenseMatrix& u) {
  double worst = 0.0;
  for (std::size_t r = 0; r < u.dim; ++r) {
    for (std::size_t c = 0; c < u.dim; ++c) {
      std::complex<double> dot{0.0, 0.0};
      for (std::size_t k = 0; k < u.dim; ++k) dot += std::conj(u.at(k, r)) * u.at(k, c);
      const std::complex<double> expected = (r == c) ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(dot - expected));
    }
  }
  return worst;
}

inline muxprep::AngleTree random_angle_tree(int num_qubits, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-std::numbers::pi, std::numbers::pi);
  muxprep::AngleTree tree;
  tree.num_qubits = num_qubits;
  tree.levels.resize(static_cast<std::size_t>(num_qubits));
  for (int level = 0; level < num_qubits; ++level) {
    auto& angles = tree.levels[static_cast<std::size_t>(level)];
    angles.resize(std::size_t{1} << level);
    for (double& a : angles) a = dist(rng);
  }
  return tree;
}

// Rewrites one level as an exact tiling of its first `period` entries, the
// footprint a disentangled factor leaves behind.
inline void inject_tiling(muxprep::AngleTree& tree, int level, std::size_t period) {
  auto& angles = tree.levels[static_cast<std::size_t>(level)];
  for (std::size_t i = period; i < angles.size(); ++i) angles[i] = angles[i % period];
}

inline muxprep::StateVector random_state(const std::vector<int>& blocks, std::uint64_t seed) {
  return muxprep::random_partitioned_state({blocks, seed});
}

}  // namespace testutil
