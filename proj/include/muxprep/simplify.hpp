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

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "muxprep/angle_tree.hpp"

namespace muxprep {

/// One multiplexer after control elimination. It targets qubit `level`;
/// control index c (1-based, counted from the top wire) denotes qubit c-1.
/// angles[j] is selected when the retained controls, read with the topmost
/// as most significant bit, spell j.
struct SimplifiedMux {
  int level = 0;
  std::vector<int> retained_controls; // ascending, subset of {1..level}
  std::vector<double> angles;         // length 2^|retained_controls|
};

struct RemovedControl {
  int control = 0;
  std::uint64_t distance = 0; // power-of-two repetition distance that proved it
};

struct RepetitionReport {
  int level = 0;
  std::vector<RemovedControl> removed_controls;
  std::uint64_t comparisons = 0; // angle comparisons spent on this level
};

struct SimplifyResult {
  std::vector<SimplifiedMux> muxes;   // one per level, in level order
  std::vector<RepetitionReport> reports;
};

/// Angle list with null marks for operators scheduled for removal.
using MarkedAngles = std::vector<std::optional<double>>;

/// Runs the repetition search on every level of the tree and drops the
/// controls (and duplicate angles) it proves redundant. Equality of two
/// operators means angles_equal(a, b, tol).
SimplifyResult simplify(const AngleTree& tree, double tol = kDefaultAngleTolerance);

/// The identity pass: every control retained, every angle kept.
std::vector<SimplifiedMux> full_muxes(const AngleTree& tree);

struct RepetitionSearchOutcome {
  std::vector<RemovedControl> removed; // in discovery order (increasing distance)
  std::uint64_t comparisons = 0;
};

/// Scans distances d = 1, 2, 4, ... up to len/2. A distance is a candidate
/// when mux[d] matches mux[0]; it is confirmed when every len/(2d) block
/// verifies, in which case control (num_controls - log2 d) is recorded and
/// the duplicate operators stay marked in mux_copy. A failed verification
/// rolls mux_copy back to its state before that distance was tried.
RepetitionSearchOutcome repetition_search(std::span<const double> mux, int num_controls,
                                          MarkedAngles& mux_copy, double tol);

/// Checks one block: mux[start+i] == mux[start+distance+i] for i < distance,
/// marking each confirmed right-hand partner null. Returns false on the
/// first mismatch, leaving partial marks for the caller to roll back.
/// Requires start + 2*distance <= mux length.
bool repetition_verify(std::size_t start, std::size_t distance, std::span<const double> mux,
                       MarkedAngles& mux_copy, double tol, std::uint64_t& comparisons);

}  // namespace muxprep
