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

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "muxprep/circuit.hpp"

namespace muxprep {

class QasmError : public std::runtime_error {
 public:
  QasmError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

/// Parses exactly the subset emit_qasm writes: the two header lines, one
/// `qreg q[n];`, then ry/cx statements. Blank lines are tolerated; anything
/// else raises QasmError with its line number.
Circuit parse_qasm(std::istream& in);

}  // namespace muxprep
