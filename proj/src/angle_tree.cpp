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

#include "muxprep/angle_tree.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace muxprep {

AngleTree build_angle_tree(const StateVector& state) {
  const int n = state.num_qubits;
  if (state.amplitudes.size() != (std::size_t{1} << n)) {
    throw std::invalid_argument("build_angle_tree: amplitude count does not match qubit count");
  }

  AngleTree tree;
  tree.num_qubits = n;
  tree.levels.assign(static_cast<std::size_t>(n), {});

  std::vector<double> values = state.amplitudes;
  for (int level = n - 1; level >= 0; --level) {
    const std::size_t width = std::size_t{1} << level;
    std::vector<double> parents(width);
    std::vector<double>& angles = tree.levels[static_cast<std::size_t>(level)];
    angles.assign(width, 0.0);
    for (std::size_t j = 0; j < width; ++j) {
      const double left = values[2 * j];
      const double right = values[2 * j + 1];
      const double mag = std::hypot(left, right);
      if (mag == 0.0) {
        parents[j] = 0.0;
        continue; // dead branch, angle stays 0
      }
      if (level == 0) {
        // The root sees the raw signed pair and absorbs the global sign.
        parents[j] = mag;
        angles[j] = 2.0 * std::atan2(right, left);
      } else {
        // Interior nodes keep the sign of their leading nonzero child, so a
        // shared sign cancels out of the angle and travels up the tree.
        const double sign = (left != 0.0) ? std::copysign(1.0, left) : std::copysign(1.0, right);
        parents[j] = sign * mag;
        angles[j] = 2.0 * std::atan2(sign * right, sign * left);
      }
    }
    values = std::move(parents);
  }
  return tree;
}

double canonical_angle(double a) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double r = std::fmod(a, 2.0 * two_pi);
  if (r <= -two_pi) {
    r += 2.0 * two_pi;
  } else if (r > two_pi) {
    r -= 2.0 * two_pi;
  }
  return r;
}

bool angles_equal(double a, double b, double tol) {
  if (tol < 0.0) throw std::invalid_argument("angles_equal: negative tolerance");
  return std::abs(canonical_angle(a) - canonical_angle(b)) <= tol;
}

}  // namespace muxprep
