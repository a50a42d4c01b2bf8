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

#include "muxprep/state.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <istream>
#include <stdexcept>
#include <string>

#include "muxprep/rng.hpp"

namespace muxprep {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_real(std::string_view token, double& out) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  const char* begin = token.data();
  const char* end = begin + token.size();
  const auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc{} && ptr == end;
}

} // namespace

double state_norm(const StateVector& s) {
  double sum = 0.0;
  for (double x : s.amplitudes) sum += x * x;
  return std::sqrt(sum);
}

LoadedState load_state(std::istream& in) {
  std::vector<double> values;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view token = trim(line);
    if (token.empty() || token.front() == '#') continue;
    double v = 0.0;
    if (!parse_real(token, v)) {
      throw std::runtime_error("line " + std::to_string(lineno) + ": cannot parse '" +
                               std::string(token) + "' as a real number");
    }
    if (!std::isfinite(v)) {
      throw std::runtime_error("line " + std::to_string(lineno) + ": non-finite amplitude");
    }
    values.push_back(v);
  }

  const std::size_t count = values.size();
  if (count < 2 || !std::has_single_bit(count)) {
    throw std::runtime_error("amplitude count " + std::to_string(count) +
                             " is not a power of two >= 2");
  }

  double sum = 0.0;
  for (double x : values) sum += x * x;
  const double norm = std::sqrt(sum);
  if (norm < 1e-12) throw std::runtime_error("state vector has zero norm");
  for (double& x : values) x /= norm;

  LoadedState out;
  out.state.num_qubits = std::countr_zero(count);
  out.state.amplitudes = std::move(values);
  out.input_norm = norm;
  out.renormalized = std::abs(norm - 1.0) > 1e-6;
  return out;
}

StateVector tensor_product(const StateVector& a, const StateVector& b) {
  const std::size_t na = a.amplitudes.size();
  const std::size_t nb = b.amplitudes.size();
  if (na != (std::size_t{1} << a.num_qubits) || nb != (std::size_t{1} << b.num_qubits)) {
    throw std::invalid_argument("tensor_product: amplitude count does not match qubit count");
  }
  StateVector out;
  out.num_qubits = a.num_qubits + b.num_qubits;
  out.amplitudes.resize(na * nb);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      out.amplitudes[i * nb + j] = a.amplitudes[i] * b.amplitudes[j];
    }
  }
  return out;
}

StateVector random_partitioned_state(const PartitionSpec& spec) {
  if (spec.block_sizes.empty()) {
    throw std::invalid_argument("partition needs at least one block");
  }
  for (int b : spec.block_sizes) {
    if (b < 1) throw std::invalid_argument("block sizes must be >= 1");
  }

  std::uint64_t stream = spec.seed;
  StateVector result{0, {1.0}};
  for (int bits : spec.block_sizes) {
    GaussianSampler gauss(splitmix64_next(stream));
    std::vector<double> block(std::size_t{1} << bits);
    double sum = 0.0;
    do {
      sum = 0.0;
      for (double& x : block) {
        x = gauss.next();
        sum += x * x;
      }
    } while (sum < 1e-24); // an all-but-impossible zero draw; redraw
    const double inv = 1.0 / std::sqrt(sum);
    for (double& x : block) x *= inv;
    result = tensor_product(result, StateVector{bits, std::move(block)});
  }
  return result;
}

}  // namespace muxprep
