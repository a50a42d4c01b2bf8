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

#include "muxprep/bench.hpp"

#include <chrono>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "muxprep/circuit.hpp"
#include "muxprep/simplify.hpp"
#include "muxprep/simulator.hpp"

namespace muxprep {

namespace {

struct BuiltCircuit {
  Circuit circuit;
  double seconds = 0.0;
};

BuiltCircuit build_circuit(const StateVector& state, bool eliminate_controls, double tol) {
  const auto t0 = std::chrono::steady_clock::now();
  const AngleTree tree = build_angle_tree(state);
  const std::vector<SimplifiedMux> muxes =
      eliminate_controls ? simplify(tree, tol).muxes : full_muxes(tree);
  Circuit circuit = synthesize(muxes, state.num_qubits);
  const auto t1 = std::chrono::steady_clock::now();
  return {std::move(circuit), std::chrono::duration<double>(t1 - t0).count()};
}

BenchRecord make_record(const StateVector& state, const std::vector<int>& blocks,
                        const std::string& method, bool eliminate_controls, double tol,
                        std::uint64_t seed) {
  const BuiltCircuit built = build_circuit(state, eliminate_controls, tol);
  const Metrics m = metrics(built.circuit);

  BenchRecord record;
  record.n = state.num_qubits;
  record.block_sizes = blocks;
  record.method = method;
  record.cnot_count = m.cnot_count;
  record.rotation_count = m.rotation_count;
  record.depth = m.depth;
  record.build_seconds = built.seconds;
  record.fidelity = fidelity(run(built.circuit, zero_state(state.num_qubits)), to_dense(state));
  record.seed = seed;
  if (record.fidelity < 1.0 - 1e-10) {
    throw std::runtime_error("bench self-check failed: " + method + " fidelity " +
                             std::to_string(record.fidelity) + " on n=" +
                             std::to_string(record.n));
  }
  return record;
}

void append_trial(std::vector<BenchRecord>& records, const std::vector<int>& blocks,
                  std::uint64_t seed, double tol) {
  const StateVector state = random_partitioned_state({blocks, seed});
  records.push_back(make_record(state, blocks, "ucg", false, tol, seed));
  records.push_back(make_record(state, blocks, "ucge", true, tol, seed));
}

} // namespace

std::vector<BenchRecord> bench_bipartite(int lo, int hi, int trials, std::uint64_t seed,
                                         double tol) {
  if (lo < 2 || hi < lo) throw std::invalid_argument("bench_bipartite: need 2 <= lo <= hi");
  if (trials < 1) throw std::invalid_argument("bench_bipartite: trials must be >= 1");

  std::vector<BenchRecord> records;
  records.reserve(static_cast<std::size_t>(hi - lo + 1) * static_cast<std::size_t>(trials) * 2);
  for (int n = lo; n <= hi; ++n) {
    const std::vector<int> blocks{(n + 1) / 2, n / 2};
    for (int trial = 0; trial < trials; ++trial) {
      append_trial(records, blocks, seed + static_cast<std::uint64_t>(trial), tol);
    }
  }
  return records;
}

std::vector<BenchRecord> bench_npartite(int n, int parts_lo, int parts_hi, int trials,
                                        std::uint64_t seed, double tol) {
  if (n < 1) throw std::invalid_argument("bench_npartite: need n >= 1");
  if (parts_lo < 1 || parts_hi < parts_lo) {
    throw std::invalid_argument("bench_npartite: need 1 <= lo <= hi");
  }
  if (trials < 1) throw std::invalid_argument("bench_npartite: trials must be >= 1");
  for (int parts = parts_lo; parts <= parts_hi; ++parts) {
    if (n % parts != 0) {
      throw std::invalid_argument("bench_npartite: " + std::to_string(parts) +
                                  " does not divide " + std::to_string(n));
    }
  }

  std::vector<BenchRecord> records;
  for (int parts = parts_lo; parts <= parts_hi; ++parts) {
    const std::vector<int> blocks(static_cast<std::size_t>(parts), n / parts);
    for (int trial = 0; trial < trials; ++trial) {
      append_trial(records, blocks, seed + static_cast<std::uint64_t>(trial), tol);
    }
  }
  return records;
}

namespace {

std::string format_double(const char* fmt, double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), fmt, v);
  return buffer;
}

} // namespace

void write_csv(std::span<const BenchRecord> records, std::ostream& out) {
  out << "n,block_sizes,method,cnot,rotations,depth,build_seconds,fidelity,seed\n";
  for (const BenchRecord& r : records) {
    out << r.n << ',';
    for (std::size_t i = 0; i < r.block_sizes.size(); ++i) {
      if (i > 0) out << '|';
      out << r.block_sizes[i];
    }
    out << ',' << r.method << ',' << r.cnot_count << ',' << r.rotation_count << ',' << r.depth
        << ',' << format_double("%.9g", r.build_seconds) << ','
        << format_double("%.17g", r.fidelity) << ',' << r.seed << '\n';
  }
  if (!out) throw std::runtime_error("write_csv: stream write failed");
}

}  // namespace muxprep
