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

#include <complex>
#include <cstddef>
#include <vector>

#include "muxprep/circuit.hpp"
#include "muxprep/state.hpp"

namespace muxprep {

// Dense simulation: fail fast rather than try to allocate 2^n amplitudes
// for arbitrary n.
inline constexpr int kMaxSimQubits = 24;
inline constexpr int kMaxUnitaryQubits = 10;

/// Dense statevector. Amplitudes are complex even though the compiler only
/// handles real inputs, so an accidental phase error cannot hide from the
/// oracle. Same index convention as StateVector.
struct DenseState {
  int num_qubits = 0;
  std::vector<std::complex<double>> amplitudes;
};

DenseState zero_state(int num_qubits);
DenseState to_dense(const StateVector& s);

/// Applies each gate in order. Throws std::invalid_argument on a qubit-count
/// mismatch or when the circuit exceeds kMaxSimQubits.
DenseState run(const Circuit& circuit, DenseState state);

/// |<a|b>|. Throws std::invalid_argument on size mismatch.
double fidelity(const DenseState& a, const DenseState& b);

struct DenseMatrix {
  std::size_t dim = 0;
  std::vector<std::complex<double>> entries; // row-major, dim x dim

  std::complex<double>& at(std::size_t row, std::size_t col) { return entries[row * dim + col]; }
  const std::complex<double>& at(std::size_t row, std::size_t col) const {
    return entries[row * dim + col];
  }
  static DenseMatrix zero(std::size_t dim);
  static DenseMatrix identity(std::size_t dim);
};

/// Full unitary by column-wise simulation of basis states. Guarded at
/// kMaxUnitaryQubits.
DenseMatrix unitary_of(const Circuit& circuit);

}  // namespace muxprep
