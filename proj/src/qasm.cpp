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

#include "muxprep/qasm.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <string_view>

namespace muxprep {

QasmError::QasmError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

// Tiny cursor over one statement. Whitespace is skipped between tokens.
struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }
  bool literal(std::string_view token) {
    skip_ws();
    if (text.substr(pos, token.size()) != token) return false;
    pos += token.size();
    return true;
  }
  bool integer(int& out) {
    skip_ws();
    const char* begin = text.data() + pos;
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, out);
    if (ec != std::errc{} || ptr == begin) return false;
    pos += static_cast<std::size_t>(ptr - begin);
    return true;
  }
  bool real(double& out) {
    skip_ws();
    const char* begin = text.data() + pos;
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, out);
    if (ec != std::errc{} || ptr == begin) return false;
    pos += static_cast<std::size_t>(ptr - begin);
    return true;
  }
  bool done() {
    skip_ws();
    return pos == text.size();
  }
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

} // namespace

Circuit parse_qasm(std::istream& in) {
  enum class Expect { kVersion, kInclude, kQreg, kBody };

  Circuit circuit;
  Expect expect = Expect::kVersion;
  std::string raw;
  int lineno = 0;

  while (std::getline(in, raw)) {
    ++lineno;
    const std::string_view line = trim(raw);
    if (line.empty()) continue;

    Cursor cur{line};
    switch (expect) {
      case Expect::kVersion:
        if (!cur.literal("OPENQASM") || !cur.literal("2.0") || !cur.literal(";") || !cur.done()) {
          throw QasmError(lineno, "expected 'OPENQASM 2.0;'");
        }
        expect = Expect::kInclude;
        break;
      case Expect::kInclude:
        if (!cur.literal("include") || !cur.literal("\"qelib1.inc\"") || !cur.literal(";") ||
            !cur.done()) {
          throw QasmError(lineno, "expected 'include \"qelib1.inc\";'");
        }
        expect = Expect::kQreg;
        break;
      case Expect::kQreg: {
        int n = 0;
        if (!cur.literal("qreg") || !cur.literal("q") || !cur.literal("[") || !cur.integer(n) ||
            !cur.literal("]") || !cur.literal(";") || !cur.done()) {
          throw QasmError(lineno, "expected 'qreg q[<n>];'");
        }
        if (n < 0) throw QasmError(lineno, "negative register size");
        circuit.num_qubits = n;
        expect = Expect::kBody;
        break;
      }
      case Expect::kBody: {
        if (cur.literal("ry")) {
          double angle = 0.0;
          int target = 0;
          if (!cur.literal("(") || !cur.real(angle) || !cur.literal(")") || !cur.literal("q") ||
              !cur.literal("[") || !cur.integer(target) || !cur.literal("]") || !cur.literal(";") ||
              !cur.done()) {
            throw QasmError(lineno, "expected 'ry(<angle>) q[<t>];'");
          }
          if (!std::isfinite(angle)) throw QasmError(lineno, "non-finite rotation angle");
          if (target < 0 || target >= circuit.num_qubits) {
            throw QasmError(lineno, "qubit index out of range");
          }
          circuit.gates.push_back(Gate::ry(angle, target));
        } else if (cur.literal("cx")) {
          int control = 0;
          int target = 0;
          if (!cur.literal("q") || !cur.literal("[") || !cur.integer(control) || !cur.literal("]") ||
              !cur.literal(",") || !cur.literal("q") || !cur.literal("[") || !cur.integer(target) ||
              !cur.literal("]") || !cur.literal(";") || !cur.done()) {
            throw QasmError(lineno, "expected 'cx q[<c>],q[<t>];'");
          }
          if (control < 0 || control >= circuit.num_qubits || target < 0 ||
              target >= circuit.num_qubits) {
            throw QasmError(lineno, "qubit index out of range");
          }
          if (control == target) throw QasmError(lineno, "cx control equals target");
          circuit.gates.push_back(Gate::cx(control, target));
        } else {
          throw QasmError(lineno, "unsupported statement (only ry and cx are accepted)");
        }
        break;
      }
    }
  }

  if (expect != Expect::kBody) throw QasmError(lineno, "truncated file: missing header or qreg");
  return circuit;
}

}  // namespace muxprep
