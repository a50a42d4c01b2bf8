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

#include "muxprep/simplify.hpp"

namespace muxprep {

enum class GateKind { kRy, kCx };

struct Gate {
  GateKind kind = GateKind::kRy;
  int target = 0;
  int control = -1;   // CX only
  double angle = 0.0; // RY only

  static Gate ry(double angle, int target);
  static Gate cx(int control, int target);
};

/// Flat gate list over num_qubits wires, in execution order.
struct Circuit {
  int num_qubits = 0;
  std::vector<Gate> gates;
};

struct Metrics {
  std::int64_t cnot_count = 0;
  std::int64_t rotation_count = 0;
  std::int64_t depth = 0; // ASAP layers; every gate costs one layer per wire it touches
};

/// Gray-code lowering of one multiplexer with k retained controls: exactly
/// 2^k RY gates on the target interleaved with 2^k CX gates (a bare RY for
/// k = 0). The RY angles are the half-sum/half-difference transform of the
/// input angles; each CX control sits on the wire whose Gray-code bit flips
/// between consecutive codewords, the last one closing the cycle on the
/// topmost retained control.
std::vector<Gate> lower_mux(const SimplifiedMux& mux);

/// Concatenates the lowering of each multiplexer in level order. A mux whose
/// angles are all exactly zero is an identity and emits nothing.
Circuit synthesize(std::span<const SimplifiedMux> muxes, int num_qubits);

Metrics metrics(const Circuit& circuit);

/// OpenQASM 2.0: fixed header, one register `q`, then ry/cx statements with
/// angles printed at 17 significant digits.
void emit_qasm(const Circuit& circuit, std::ostream& out);
std::string qasm_string(const Circuit& circuit);

}  // namespace muxprep
