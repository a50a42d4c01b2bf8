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

#pragma once

#include <vector>

#include "muxprep/state.hpp"

namespace muxprep {

inline constexpr double kDefaultAngleTolerance = 1e-8;

/// Ry rotation angles for the multiplexer cascade, one list per target
/// qubit. levels[i] holds 2^i angles in radians, indexed by the value of
/// qubits 0..i-1 read with qubit 0 as the most significant bit. All angles
/// lie in (-2pi, 2pi].
struct AngleTree {
  int num_qubits = 0;
  std::vector<std::vector<double>> levels;
};

/// Builds the rotation tree whose cascade maps |0...0> to `state`.
///
/// A binary tree is reduced bottom-up from the amplitudes. Each interior
/// node stores +-hypot(left, right), taking the sign of its leading nonzero
/// child; the angle satisfies cos(angle/2) * node = left and
/// sin(angle/2) * node = right exactly. Carrying signs upward this way makes
/// a common sign factor out of every subtree, so the per-level angle lists
/// of a tensor-product state repeat exactly and the repetition search can
/// see the factorization. The root angle is 2*atan2(right, left) over the
/// signed pair and absorbs the accumulated global sign. Zero-norm subtrees
/// get angle 0 throughout.
AngleTree build_angle_tree(const StateVector& state);

/// Maps an angle into (-2pi, 2pi]. Ry has period 4pi, and Ry(a) vs
/// Ry(a + 2pi) differ by a sign that is observable inside a multiplexer, so
/// the canonical interval is a full 4pi wide.
double canonical_angle(double a);

/// Operator equality used by the simplifier: |a - b| <= tol after
/// canonicalizing both operands. tol must be >= 0.
bool angles_equal(double a, double b, double tol);

}  // namespace muxprep
