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

#include "muxprep/circuit.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace muxprep {

Gate Gate::ry(double angle, int target) {
  if (!std::isfinite(angle)) throw std::invalid_argument("ry: non-finite angle");
  Gate g;
  g.kind = GateKind::kRy;
  g.target = target;
  g.angle = angle;
  return g;
}

Gate Gate::cx(int control, int target) {
  if (control == target) throw std::invalid_argument("cx: control equals target");
  Gate g;
  g.kind = GateKind::kCx;
  g.target = target;
  g.control = control;
  return g;
}

namespace {

// Rotation angles of the lowered multiplexer, in Gray-codeword order.
// Split the list into the half selected by the top control bit: the sums
// land on codewords with that bit clear, the differences on codewords with
// it set, which run through the sub-code in reverse.
void gray_transform(std::span<const double> thetas, std::vector<double>& out) {
  if (thetas.size() == 1) {
    out.push_back(thetas[0]);
    return;
  }
  const std::size_t mid = thetas.size() / 2;
  std::vector<double> sums(mid);
  std::vector<double> diffs(mid);
  for (std::size_t i = 0; i < mid; ++i) {
    sums[i] = (thetas[i] + thetas[mid + i]) / 2.0;
    diffs[i] = (thetas[i] - thetas[mid + i]) / 2.0;
  }
  gray_transform(sums, out);
  const std::size_t tail = out.size();
  gray_transform(diffs, out);
  std::reverse(out.begin() + static_cast<std::ptrdiff_t>(tail), out.end());
}

void check_mux(const SimplifiedMux& mux) {
  const std::size_t k = mux.retained_controls.size();
  if (mux.angles.size() != std::size_t{1} << k) {
    throw std::invalid_argument("lower_mux: angle count must be 2^controls");
  }
  int prev = 0;
  for (int c : mux.retained_controls) {
    if (c <= prev || c > mux.level) {
      throw std::invalid_argument("lower_mux: controls must be ascending within 1..level");
    }
    prev = c;
  }
}

} // namespace

std::vector<Gate> lower_mux(const SimplifiedMux& mux) {
  check_mux(mux);
  const int target = mux.level;
  const std::size_t k = mux.retained_controls.size();
  if (k == 0) return {Gate::ry(mux.angles[0], target)};

  std::vector<double> rotations;
  rotations.reserve(mux.angles.size());
  gray_transform(mux.angles, rotations);

  std::vector<Gate> gates;
  gates.reserve(2 * rotations.size());
  for (std::size_t i = 0; i < rotations.size(); ++i) {
    gates.push_back(Gate::ry(rotations[i], target));
    // Gray bit flipped between codeword i and i+1; the wrap-around flip is
    // the most significant bit. Bit b counts from the bottom retained wire.
    const std::size_t bit =
        (i + 1 == rotations.size()) ? k - 1 : static_cast<std::size_t>(std::countr_zero(i + 1));
    const int control = mux.retained_controls[k - 1 - bit] - 1;
    gates.push_back(Gate::cx(control, target));
  }
  return gates;
}

Circuit synthesize(std::span<const SimplifiedMux> muxes, int num_qubits) {
  Circuit circuit;
  circuit.num_qubits = num_qubits;
  for (const SimplifiedMux& mux : muxes) {
    if (mux.level < 0 || mux.level >= num_qubits) {
      throw std::invalid_argument("synthesize: mux level outside register");
    }
    const bool identity =
        std::all_of(mux.angles.begin(), mux.angles.end(), [](double a) { return a == 0.0; });
    if (identity) continue;
    const std::vector<Gate> lowered = lower_mux(mux);
    circuit.gates.insert(circuit.gates.end(), lowered.begin(), lowered.end());
  }
  return circuit;
}

Metrics metrics(const Circuit& circuit) {
  Metrics m;
  std::vector<std::int64_t> wire(static_cast<std::size_t>(circuit.num_qubits), 0);
  for (const Gate& g : circuit.gates) {
    std::int64_t layer = 0;
    if (g.kind == GateKind::kCx) {
      ++m.cnot_count;
      layer = std::max(wire[static_cast<std::size_t>(g.control)],
                       wire[static_cast<std::size_t>(g.target)]) +
              1;
      wire[static_cast<std::size_t>(g.control)] = layer;
    } else {
      ++m.rotation_count;
      layer = wire[static_cast<std::size_t>(g.target)] + 1;
    }
    wire[static_cast<std::size_t>(g.target)] = layer;
    m.depth = std::max(m.depth, layer);
  }
  return m;
}

namespace {

std::string format_angle(double angle) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", angle);
  return buffer;
}

} // namespace

void emit_qasm(const Circuit& circuit, std::ostream& out) {
  out << "OPENQASM 2.0;\n";
  out << "include \"qelib1.inc\";\n";
  out << "qreg q[" << circuit.num_qubits << "];\n";
  for (const Gate& g : circuit.gates) {
    if (g.kind == GateKind::kRy) {
      out << "ry(" << format_angle(g.angle) << ") q[" << g.target << "];\n";
    } else {
      out << "cx q[" << g.control << "],q[" << g.target << "];\n";
    }
  }
}

std::string qasm_string(const Circuit& circuit) {
  std::ostringstream out;
  emit_qasm(circuit, out);
  return out.str();
}

}  // namespace muxprep
