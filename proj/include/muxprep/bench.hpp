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
#include <span>
#include <string>
#include <vector>

#include "muxprep/angle_tree.hpp"
#include "muxprep/state.hpp"

namespace muxprep {

/// One benchmark row. build_seconds covers angle-tree construction, the
/// optional simplification pass and lowering; the fidelity self-check runs
/// outside the timed section and must come out >= 1 - 1e-10 or the run
/// aborts.
struct BenchRecord {
  int n = 0;
  std::vector<int> block_sizes;
  std::string method; // "ucg" (plain cascade) or "ucge" (with control elimination)
  std::int64_t cnot_count = 0;
  std::int64_t rotation_count = 0;
  std::int64_t depth = 0;
  double build_seconds = 0.0;
  double fidelity = 0.0;
  std::uint64_t seed = 0;
};

/// Sweeps n over [lo, hi]; each trial draws one state with blocks of
/// ceil(n/2) and floor(n/2) qubits (seed + trial index) and records both
/// methods on it. Rows are ordered by (n, trial, method).
std::vector<BenchRecord> bench_bipartite(int lo, int hi, int trials, std::uint64_t seed,
                                         double tol = kDefaultAngleTolerance);

/// Fixes n and sweeps the number of equally sized blocks over
/// [parts_lo, parts_hi]. Every value in the range must divide n.
std::vector<BenchRecord> bench_npartite(int n, int parts_lo, int parts_hi, int trials,
                                        std::uint64_t seed, double tol = kDefaultAngleTolerance);

/// Header `n,block_sizes,method,cnot,rotations,depth,build_seconds,fidelity,seed`;
/// block_sizes joined with '|'.
void write_csv(std::span<const BenchRecord> records, std::ostream& out);

}  // namespace muxprep
