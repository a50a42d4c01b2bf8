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

#include "muxprep/simulator.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace muxprep {

DenseState zero_state(int num_qubits) {
  if (num_qubits < 0 || num_qubits > kMaxSimQubits) {
    throw std::invalid_argument("zero_state: qubit count outside 0.." +
                                std::to_string(kMaxSimQubits));
  }
  DenseState s;
  s.num_qubits = num_qubits;
  s.amplitudes.assign(std::size_t{1} << num_qubits, {0.0, 0.0});
  s.amplitudes[0] = {1.0, 0.0};
  return s;
}

DenseState to_dense(const StateVector& s) {
  DenseState out;
  out.num_qubits = s.num_qubits;
  out.amplitudes.assign(s.amplitudes.begin(), s.amplitudes.end());
  return out;
}

namespace {

void apply_ry(std::vector<std::complex<double>>& amps, int bit, double angle) {
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  const std::size_t step = std::size_t{1} << bit;
  const std::size_t size = amps.size();
  for (std::size_t base = 0; base < size; base += 2 * step) {
    for (std::size_t off = 0; off < step; ++off) {
      std::complex<double>& a0 = amps[base + off];
      std::complex<double>& a1 = amps[base + off + step];
      const std::complex<double> t0 = a0;
      const std::complex<double> t1 = a1;
      a0 = c * t0 - s * t1;
      a1 = s * t0 + c * t1;
    }
  }
}

void apply_cx(std::vector<std::complex<double>>& amps, int control_bit, int target_bit) {
  const std::size_t cmask = std::size_t{1} << control_bit;
  const std::size_t tmask = std::size_t{1} << target_bit;
  const std::size_t size = amps.size();
  for (std::size_t i = 0; i < size; ++i) {
    if ((i & cmask) != 0 && (i & tmask) == 0) std::swap(amps[i], amps[i | tmask]);
  }
}

} // namespace

DenseState run(const Circuit& circuit, DenseState state) {
  if (circuit.num_qubits > kMaxSimQubits) {
    throw std::invalid_argument("run: circuit exceeds the " + std::to_string(kMaxSimQubits) +
                                "-qubit simulation guard");
  }
  if (circuit.num_qubits != state.num_qubits) {
    throw std::invalid_argument("run: circuit and state qubit counts differ");
  }
  const int n = circuit.num_qubits;
  if (state.amplitudes.size() != std::size_t{1} << n) {
    throw std::invalid_argument("run: state amplitude count does not match qubit count");
  }

  for (const Gate& g : circuit.gates) {
    if (g.target < 0 || g.target >= n || (g.kind == GateKind::kCx && (g.control < 0 || g.control >= n))) {
      throw std::invalid_argument("run: gate touches a wire outside the register");
    }
    if (g.kind == GateKind::kRy) {
      apply_ry(state.amplitudes, n - 1 - g.target, g.angle);
    } else {
      apply_cx(state.amplitudes, n - 1 - g.control, n - 1 - g.target);
    }
  }
  return state;
}

double fidelity(const DenseState& a, const DenseState& b) {
  if (a.num_qubits != b.num_qubits || a.amplitudes.size() != b.amplitudes.size()) {
    throw std::invalid_argument("fidelity: states have different sizes");
  }
  std::complex<double> overlap{0.0, 0.0};
  for (std::size_t i = 0; i < a.amplitudes.size(); ++i) {
    overlap += std::conj(a.amplitudes[i]) * b.amplitudes[i];
  }
  return std::abs(overlap);
}

DenseMatrix DenseMatrix::zero(std::size_t dim) {
  DenseMatrix m;
  m.dim = dim;
  m.entries.assign(dim * dim, {0.0, 0.0});
  return m;
}

DenseMatrix DenseMatrix::identity(std::size_t dim) {
  DenseMatrix m = zero(dim);
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = {1.0, 0.0};
  return m;
}

DenseMatrix unitary_of(const Circuit& circuit) {
  if (circuit.num_qubits > kMaxUnitaryQubits) {
    throw std::invalid_argument("unitary_of: circuit exceeds the " +
                                std::to_string(kMaxUnitaryQubits) + "-qubit guard");
  }
  const std::size_t dim = std::size_t{1} << circuit.num_qubits;
  DenseMatrix m = DenseMatrix::zero(dim);
  for (std::size_t col = 0; col < dim; ++col) {
    DenseState basis;
    basis.num_qubits = circuit.num_qubits;
    basis.amplitudes.assign(dim, {0.0, 0.0});
    basis.amplitudes[col] = {1.0, 0.0};
    const DenseState out = run(circuit, std::move(basis));
    for (std::size_t row = 0; row < dim; ++row) m.at(row, col) = out.amplitudes[row];
  }
  return m;
}

}  // namespace muxprep
