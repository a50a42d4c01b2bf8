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

#include "muxprep/simplify.hpp"

#include <bit>
#include <stdexcept>

namespace muxprep {

bool repetition_verify(std::size_t start, std::size_t distance, std::span<const double> mux,
                       MarkedAngles& mux_copy, double tol, std::uint64_t& comparisons) {
  if (distance < 1 || start + 2 * distance > mux.size()) {
    throw std::invalid_argument("repetition_verify: block out of range");
  }
  std::size_t a = start;
  std::size_t b = start + distance;
  for (std::size_t i = 0; i < distance; ++i, ++a, ++b) {
    ++comparisons;
    if (!angles_equal(mux[a], mux[b], tol)) return false;
    mux_copy[b].reset();
  }
  return true;
}

RepetitionSearchOutcome repetition_search(std::span<const double> mux, int num_controls,
                                          MarkedAngles& mux_copy, double tol) {
  if (mux.size() < 2 || !std::has_single_bit(mux.size())) {
    throw std::invalid_argument("repetition_search: length must be a power of two >= 2");
  }
  if (mux_copy.size() != mux.size()) {
    throw std::invalid_argument("repetition_search: mux_copy size mismatch");
  }

  RepetitionSearchOutcome out;
  for (std::size_t d = 1; d <= mux.size() / 2; d *= 2) {
    bool confirmed = false;
    ++out.comparisons;
    if (angles_equal(mux[d], mux[0], tol)) {
      const MarkedAngles snapshot = mux_copy;
      std::size_t repetitions = mux.size() / (2 * d);
      std::size_t p = 0;
      while (repetitions > 0) {
        --repetitions;
        const bool valid = repetition_verify(p, d, mux, mux_copy, tol, out.comparisons);
        p += 2 * d;
        if (!valid) {
          mux_copy = snapshot;
          break;
        }
        if (repetitions == 0) confirmed = true;
      }
    }
    if (confirmed) {
      // A confirmed repetition at distance 2^m means the operator choice
      // ignores the control bit of weight 2^m, i.e. the control that is
      // log2(d) positions up from the bottom one.
      const int removed = num_controls - std::countr_zero(d);
      out.removed.push_back({removed, static_cast<std::uint64_t>(d)});
    }
  }
  return out;
}

SimplifyResult simplify(const AngleTree& tree, double tol) {
  SimplifyResult result;
  result.muxes.reserve(static_cast<std::size_t>(tree.num_qubits));
  result.reports.reserve(static_cast<std::size_t>(tree.num_qubits));

  for (int level = 0; level < tree.num_qubits; ++level) {
    const std::vector<double>& mux = tree.levels[static_cast<std::size_t>(level)];
    if (mux.size() != std::size_t{1} << level) {
      throw std::invalid_argument("simplify: level " + std::to_string(level) +
                                  " has the wrong angle count");
    }

    MarkedAngles marked(mux.begin(), mux.end());
    RepetitionReport report;
    report.level = level;
    std::vector<bool> removed(static_cast<std::size_t>(level) + 1, false);
    if (mux.size() > 1) {
      RepetitionSearchOutcome outcome = repetition_search(mux, level, marked, tol);
      for (const RemovedControl& rc : outcome.removed) {
        removed[static_cast<std::size_t>(rc.control)] = true;
      }
      report.removed_controls = std::move(outcome.removed);
      report.comparisons = outcome.comparisons;
    }

    SimplifiedMux simplified;
    simplified.level = level;
    for (int c = 1; c <= level; ++c) {
      if (!removed[static_cast<std::size_t>(c)]) simplified.retained_controls.push_back(c);
    }
    for (const std::optional<double>& angle : marked) {
      if (angle) simplified.angles.push_back(*angle);
    }
    if (simplified.angles.size() != std::size_t{1} << simplified.retained_controls.size()) {
      throw std::logic_error("simplify: surviving angle count does not match retained controls");
    }

    result.muxes.push_back(std::move(simplified));
    result.reports.push_back(std::move(report));
  }
  return result;
}

std::vector<SimplifiedMux> full_muxes(const AngleTree& tree) {
  std::vector<SimplifiedMux> muxes;
  muxes.reserve(static_cast<std::size_t>(tree.num_qubits));
  for (int level = 0; level < tree.num_qubits; ++level) {
    SimplifiedMux mux;
    mux.level = level;
    mux.retained_controls.resize(static_cast<std::size_t>(level));
    for (int c = 1; c <= level; ++c) mux.retained_controls[static_cast<std::size_t>(c - 1)] = c;
    mux.angles = tree.levels[static_cast<std::size_t>(level)];
    muxes.push_back(std::move(mux));
  }
  return muxes;
}

}  // namespace muxprep
