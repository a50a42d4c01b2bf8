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
#include <iosfwd>
#include <vector>

namespace muxprep {

/// Real amplitude vector of length 2^num_qubits, unit 2-norm.
///
/// Qubit 0 is the most significant address bit: amplitude index i holds qubit
/// q in bit (num_qubits - 1 - q). Every module in this project shares that
/// convention.
struct StateVector {
  int num_qubits = 0;
  std::vector<double> amplitudes;
};

/// Partition of a register into independently drawn blocks. block_sizes[0]
/// owns the most significant (topmost) qubits.
struct PartitionSpec {
  std::vector<int> block_sizes;
  std::uint64_t seed = 0;
};

struct LoadedState {
  StateVector state;
  double input_norm = 1.0;   // 2-norm of the raw file contents
  bool renormalized = false; // |input_norm - 1| exceeded 1e-6
};

/// Reads one real per line; blank lines and lines whose first non-space
/// character is '#' are skipped. The result is scaled to unit 2-norm.
/// Throws std::runtime_error (with a line number where one applies) on
/// unparsable or non-finite entries, on counts that are not a power of two
/// >= 2, and on all-zero input.
LoadedState load_state(std::istream& in);

/// Draws each block from independent standard normals (one sub-stream per
/// block, see rng.hpp), normalizes it, and returns the Kronecker product of
/// the blocks in order. Deterministic for a fixed seed.
StateVector random_partitioned_state(const PartitionSpec& spec);

/// Kronecker product; `a` owns the most significant qubits of the result.
StateVector tensor_product(const StateVector& a, const StateVector& b);

double state_norm(const StateVector& s);

}  // namespace muxprep
