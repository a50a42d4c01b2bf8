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
//
// Command-line front end: prepare (state file -> QASM), verify (state file +
// QASM -> fidelity), bench (bipartite / npartite sweeps -> CSV).
// Exit codes: 0 success, 1 input or parse error, 2 verification failure.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "muxprep/bench.hpp"
#include "muxprep/circuit.hpp"
#include "muxprep/qasm.hpp"
#include "muxprep/simplify.hpp"
#include "muxprep/simulator.hpp"
#include "muxprep/state.hpp"

namespace {

constexpr double kVerifyThreshold = 1.0 - 1e-8;

struct Range {
  int lo = 0;
  int hi = 0;
};

// "lo..hi" or a single value.
Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    const int lo = std::stoi(text.substr(0, dots));
    const int hi = std::stoi(text.substr(dots + 2));
    return {lo, hi};
  } catch (const std::exception&) {
    throw std::runtime_error("cannot parse range '" + text + "' (expected lo..hi)");
  }
}

muxprep::LoadedState load_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return muxprep::load_state(in);
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

struct PrepareOptions {
  std::string input;
  std::string output;
  std::string stats;
  bool no_simplify = false;
  double tolerance = muxprep::kDefaultAngleTolerance;
  bool verify = false;
};

int run_prepare(const PrepareOptions& opt) {
  muxprep::LoadedState loaded;
  try {
    loaded = load_state_file(opt.input);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  if (loaded.renormalized) {
    std::cerr << "warning: input renormalized (norm was " << loaded.input_norm << ")\n";
  }

  const muxprep::StateVector& state = loaded.state;
  const muxprep::AngleTree tree = muxprep::build_angle_tree(state);
  muxprep::SimplifyResult simplified;
  std::vector<muxprep::SimplifiedMux> muxes;
  if (opt.no_simplify) {
    muxes = muxprep::full_muxes(tree);
  } else {
    simplified = muxprep::simplify(tree, opt.tolerance);
    muxes = simplified.muxes;
  }
  const muxprep::Circuit circuit = muxprep::synthesize(muxes, state.num_qubits);

  {
    std::ofstream out(opt.output);
    if (!out) {
      std::cerr << "error: cannot open " << opt.output << " for writing\n";
      return 1;
    }
    muxprep::emit_qasm(circuit, out);
    if (!out) {
      std::cerr << "error: write to " << opt.output << " failed\n";
      return 1;
    }
  }

  const muxprep::Metrics m = muxprep::metrics(circuit);
  double fid = -1.0;
  if (opt.verify) {
    fid = muxprep::fidelity(muxprep::run(circuit, muxprep::zero_state(state.num_qubits)),
                            muxprep::to_dense(state));
  }

  if (!opt.stats.empty()) {
    nlohmann::json j;
    j["schema"] = 1;
    j["n"] = state.num_qubits;
    j["method"] = opt.no_simplify ? "ucg" : "ucge";
    j["tolerance"] = opt.tolerance;
    j["metrics"] = {{"cnot_count", m.cnot_count},
                    {"rotation_count", m.rotation_count},
                    {"depth", m.depth}};
    nlohmann::json levels = nlohmann::json::array();
    for (const muxprep::RepetitionReport& report : simplified.reports) {
      nlohmann::json removed = nlohmann::json::array();
      for (const muxprep::RemovedControl& rc : report.removed_controls) {
        removed.push_back({{"control", rc.control}, {"distance", rc.distance}});
      }
      levels.push_back({{"level", report.level},
                        {"removed", removed},
                        {"comparisons", report.comparisons}});
    }
    j["removed_controls"] = levels;
    if (opt.verify) j["fidelity"] = fid;

    std::ofstream out(opt.stats);
    if (!out) {
      std::cerr << "error: cannot open " << opt.stats << " for writing\n";
      return 1;
    }
    out << j.dump(2) << '\n';
  }

  std::cout << "wrote " << opt.output << " (ry=" << m.rotation_count << " cx=" << m.cnot_count
            << " depth=" << m.depth << ")\n";
  if (opt.verify) {
    std::cout << "fidelity " << std::setprecision(15) << fid << '\n';
    if (fid < kVerifyThreshold) {
      std::cerr << "error: verification failed (fidelity below 1 - 1e-8)\n";
      return 2;
    }
  }
  return 0;
}

int run_verify(const std::string& input, const std::string& circuit_path) {
  muxprep::LoadedState loaded;
  muxprep::Circuit circuit;
  try {
    loaded = load_state_file(input);
    std::ifstream in(circuit_path);
    if (!in) throw std::runtime_error("cannot open " + circuit_path);
    try {
      circuit = muxprep::parse_qasm(in);
    } catch (const std::exception& e) {
      throw std::runtime_error(circuit_path + ": " + e.what());
    }
    if (circuit.num_qubits != loaded.state.num_qubits) {
      throw std::runtime_error("circuit has " + std::to_string(circuit.num_qubits) +
                               " qubits but the state has " +
                               std::to_string(loaded.state.num_qubits));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  const double fid =
      muxprep::fidelity(muxprep::run(circuit, muxprep::zero_state(circuit.num_qubits)),
                        muxprep::to_dense(loaded.state));
  std::cout << "fidelity " << std::setprecision(15) << fid << '\n';
  return fid >= kVerifyThreshold ? 0 : 2;
}

int write_records(const std::vector<muxprep::BenchRecord>& records, const std::string& csv_path,
                  bool by_parts) {
  {
    std::ofstream out(csv_path);
    if (!out) {
      std::cerr << "error: cannot open " << csv_path << " for writing\n";
      return 1;
    }
    muxprep::write_csv(records, out);
  }

  // One summary line per sweep point.
  std::map<int, std::map<std::string, std::pair<double, int>>> groups;
  for (const muxprep::BenchRecord& r : records) {
    const int key = by_parts ? static_cast<int>(r.block_sizes.size()) : r.n;
    auto& [sum, count] = groups[key][r.method];
    sum += static_cast<double>(r.cnot_count);
    count += 1;
  }
  for (const auto& [key, methods] : groups) {
    std::cout << (by_parts ? "parts=" : "n=") << key;
    for (const auto& [method, stats] : methods) {
      std::cout << ' ' << method << " cnot=" << stats.first / stats.second;
    }
    std::cout << '\n';
  }
  std::cout << "wrote " << records.size() << " records to " << csv_path << '\n';
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ry/CNOT state-preparation compiler with multiplexer control elimination"};
  app.require_subcommand(1);

  PrepareOptions prep_opt;
  CLI::App* prepare = app.add_subcommand("prepare", "Compile a state file into OpenQASM 2.0");
  prepare->add_option("--input", prep_opt.input, "State file, one real per line")->required();
  prepare->add_option("--output", prep_opt.output, "QASM output path")->required();
  prepare->add_option("--stats", prep_opt.stats, "Write a JSON stats report");
  prepare->add_flag("--no-simplify", prep_opt.no_simplify, "Skip control elimination");
  prepare->add_option("--tolerance", prep_opt.tolerance, "Angle equality tolerance (radians)")
      ->check(CLI::NonNegativeNumber);
  prepare->add_flag("--verify", prep_opt.verify, "Simulate the result and check fidelity");

  std::string verify_input;
  std::string verify_circuit;
  CLI::App* verify = app.add_subcommand("verify", "Check a circuit against a state file");
  verify->add_option("--input", verify_input, "State file")->required();
  verify->add_option("--circuit", verify_circuit, "QASM file produced by prepare")->required();

  CLI::App* bench = app.add_subcommand("bench", "Benchmark sweeps (CSV output)");
  bench->require_subcommand(1);

  std::string bip_qubits = "4..14";
  int bip_trials = 20;
  std::uint64_t bip_seed = 1;
  std::string bip_csv;
  CLI::App* bipartite = bench->add_subcommand("bipartite", "Two equal-ish blocks, sweep qubits");
  bipartite->add_option("--qubits", bip_qubits, "Qubit range lo..hi");
  bipartite->add_option("--trials", bip_trials, "States per sweep point");
  bipartite->add_option("--seed", bip_seed, "Base seed (trial t uses seed + t)");
  bipartite->add_option("--csv", bip_csv, "CSV output path")->required();

  int np_qubits = 12;
  std::string np_parts = "1..12";
  int np_trials = 20;
  std::uint64_t np_seed = 1;
  std::string np_csv;
  CLI::App* npartite = bench->add_subcommand("npartite", "Fixed qubits, sweep block count");
  npartite->add_option("--qubits", np_qubits, "Total qubit count");
  npartite->add_option("--parts", np_parts, "Block count range lo..hi (each must divide qubits)");
  npartite->add_option("--trials", np_trials, "States per sweep point");
  npartite->add_option("--seed", np_seed, "Base seed (trial t uses seed + t)");
  npartite->add_option("--csv", np_csv, "CSV output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (prepare->parsed()) return run_prepare(prep_opt);
    if (verify->parsed()) return run_verify(verify_input, verify_circuit);
    if (bipartite->parsed()) {
      const Range r = parse_range(bip_qubits);
      return write_records(muxprep::bench_bipartite(r.lo, r.hi, bip_trials, bip_seed), bip_csv,
                           false);
    }
    if (npartite->parsed()) {
      const Range r = parse_range(np_parts);
      return write_records(muxprep::bench_npartite(np_qubits, r.lo, r.hi, np_trials, np_seed),
                           np_csv, true);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
