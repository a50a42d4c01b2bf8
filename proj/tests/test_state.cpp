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

#include <doctest.h>

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "muxprep/state.hpp"

using muxprep::load_state;
using muxprep::PartitionSpec;
using muxprep::random_partitioned_state;
using muxprep::state_norm;
using muxprep::StateVector;
using muxprep::tensor_product;

namespace {

// Deliberately independent re-statement of the documented draw scheme:
// SplitMix64 sub-seeds, mt19937_64, Box-Muller over 53-bit uniforms.
std::uint64_t sm64(std::uint64_t& s) {
  std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

struct NormalStream {
  std::mt19937_64 eng;
  bool has_spare = false;
  double spare = 0.0;

  double uniform() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }
  double next() {
    if (has_spare) {
      has_spare = false;
      return spare;
    }
    double u1 = uniform();
    while (u1 == 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare = r * std::sin(2.0 * std::numbers::pi * u2);
    has_spare = true;
    return r * std::cos(2.0 * std::numbers::pi * u2);
  }
};

std::vector<double> draw_block(std::uint64_t block_seed, int qubits) {
  NormalStream g{std::mt19937_64(block_seed)};
  std::vector<double> v(std::size_t{1} << qubits);
  double sum = 0.0;
  for (double& x : v) {
    x = g.next();
    sum += x * x;
  }
  for (double& x : v) x /= std::sqrt(sum);
  return v;
}

int singular_values_above(const StateVector& s, int left_qubits, double threshold) {
  const int right_qubits = s.num_qubits - left_qubits;
  const Eigen::Index rows = Eigen::Index{1} << left_qubits;
  const Eigen::Index cols = Eigen::Index{1} << right_qubits;
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      m(i, j) = s.amplitudes[static_cast<std::size_t>(i * cols + j)];
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  int count = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    if (svd.singularValues()[i] > threshold) ++count;
  }
  return count;
}

} // namespace

TEST_CASE("load_state: basis state") {
  std::istringstream in("1\n0\n0\n0\n");
  const auto loaded = load_state(in);
  CHECK(loaded.state.num_qubits == 2);
  REQUIRE(loaded.state.amplitudes.size() == 4);
  CHECK(loaded.state.amplitudes[0] == 1.0);
  CHECK(loaded.state.amplitudes[1] == 0.0);
  CHECK(loaded.state.amplitudes[2] == 0.0);
  CHECK(loaded.state.amplitudes[3] == 0.0);
  CHECK_FALSE(loaded.renormalized);
}

TEST_CASE("load_state: uniform state is renormalized") {
  std::istringstream in("1\n1\n1\n1\n");
  const auto loaded = load_state(in);
  CHECK(loaded.renormalized);
  CHECK(loaded.input_norm == doctest::Approx(2.0));
  for (double a : loaded.state.amplitudes) CHECK(a == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("load_state: comments, blanks and signs") {
  std::istringstream in("# amplitudes\n\n 0.6\n-0.8\n");
  const auto loaded = load_state(in);
  CHECK(loaded.state.num_qubits == 1);
  CHECK(loaded.state.amplitudes[0] == doctest::Approx(0.6));
  CHECK(loaded.state.amplitudes[1] == doctest::Approx(-0.8));
  CHECK_FALSE(loaded.renormalized);
}

TEST_CASE("load_state: rejects non-power-of-two counts") {
  std::istringstream three("1\n1\n1\n");
  CHECK_THROWS_WITH_AS(load_state(three), doctest::Contains("power of two"), std::runtime_error);
  std::istringstream one("1\n");
  CHECK_THROWS_AS(load_state(one), std::runtime_error);
}

TEST_CASE("load_state: rejects garbage with a line number") {
  std::istringstream in("1\n0\nx0\n0\n");
  CHECK_THROWS_WITH_AS(load_state(in), doctest::Contains("line 3"), std::runtime_error);
}

TEST_CASE("load_state: rejects zero vectors and non-finite entries") {
  std::istringstream zeros("0\n0\n");
  CHECK_THROWS_WITH_AS(load_state(zeros), doctest::Contains("zero"), std::runtime_error);
  std::istringstream inf("1\ninf\n");
  CHECK_THROWS_AS(load_state(inf), std::runtime_error);
}

TEST_CASE("tensor_product: basis placements") {
  const StateVector zero{1, {1.0, 0.0}};
  const StateVector v{1, {0.6, 0.8}};

  const auto zz = tensor_product(zero, zero);
  CHECK(zz.amplitudes == std::vector<double>{1.0, 0.0, 0.0, 0.0});

  const auto zv = tensor_product(zero, v);
  CHECK(zv.amplitudes == std::vector<double>{0.6, 0.8, 0.0, 0.0});
}

TEST_CASE("tensor_product: plus times minus") {
  const double r = 1.0 / std::sqrt(2.0);
  const auto prod = tensor_product(StateVector{1, {r, r}}, StateVector{1, {r, -r}});
  REQUIRE(prod.amplitudes.size() == 4);
  CHECK(prod.amplitudes[0] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(prod.amplitudes[1] == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(prod.amplitudes[2] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(prod.amplitudes[3] == doctest::Approx(-0.5).epsilon(1e-14));
}

TEST_CASE("tensor_product: norm multiplies and association holds") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto a = random_partitioned_state({{2}, seed});
    const auto b = random_partitioned_state({{1}, seed + 100});
    const auto c = random_partitioned_state({{2}, seed + 200});
    CHECK(std::abs(state_norm(tensor_product(a, b)) - state_norm(a) * state_norm(b)) < 1e-12);
    const auto left = tensor_product(tensor_product(a, b), c);
    const auto right = tensor_product(a, tensor_product(b, c));
    REQUIRE(left.amplitudes.size() == right.amplitudes.size());
    for (std::size_t i = 0; i < left.amplitudes.size(); ++i) {
      CHECK(std::abs(left.amplitudes[i] - right.amplitudes[i]) < 1e-12);
    }
  }
}

TEST_CASE("random_partitioned_state: matches a direct kron of its block draws") {
  const std::uint64_t seed = 12345;
  std::uint64_t stream = seed;
  const auto v0 = draw_block(sm64(stream), 1);
  const auto v1 = draw_block(sm64(stream), 1);

  const auto got = random_partitioned_state({{1, 1}, seed});
  REQUIRE(got.amplitudes.size() == 4);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      CHECK(got.amplitudes[i * 2 + j] == doctest::Approx(v0[i] * v1[j]).epsilon(1e-14));
    }
  }
}

TEST_CASE("random_partitioned_state: deterministic and unit norm") {
  const PartitionSpec spec{{3, 2, 1}, 77};
  const auto a = random_partitioned_state(spec);
  const auto b = random_partitioned_state(spec);
  CHECK(a.amplitudes == b.amplitudes);
  CHECK(a.num_qubits == 6);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto s = random_partitioned_state({{2, 2}, seed});
    CHECK(std::abs(state_norm(s) - 1.0) < 1e-12);
  }
}

TEST_CASE("random_partitioned_state: [2,2] has Schmidt rank 1 across the cut") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const auto s = random_partitioned_state({{2, 2}, seed});
    CHECK(singular_values_above(s, 2, 1e-10) == 1);
  }
}

TEST_CASE("random_partitioned_state: single block is generically entangled") {
  const auto s = random_partitioned_state({{4}, 9});
  CHECK(singular_values_above(s, 2, 1e-10) == 4);
}

TEST_CASE("random_partitioned_state: rejects bad partitions") {
  CHECK_THROWS_AS(random_partitioned_state({{}, 1}), std::invalid_argument);
  CHECK_THROWS_AS(random_partitioned_state({{2, 0}, 1}), std::invalid_argument);
}
