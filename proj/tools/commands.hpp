// Copyright 2026 The hypercut Authors
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
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hypercut/hypergraph.hpp"

namespace hypercut::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitCapacityError = 3;

/// Result of one solve/oracle invocation. Serialized as a flat JSON object
/// whose keys always appear in the same order.
struct RunReport {
  std::string command;
  std::string input;
  std::string input_digest;
  std::uint64_t seed = 0;
  int r = 0;
  Vertex n = 0;
  Multiplicity m = 0;
  int k = 0;
  int trials = 0;
  int threads = 1;
  std::string strategy;
  bool in_guarantee_range = true;
  Rational coefficient{0};
  std::vector<Part> assignment;
  Multiplicity cut_value = 0;
  Rational surplus{0};
  double wall_time_ms = 0.0;
};

std::string format_rational(const Rational& value);

/// FNV-1a 64 of the canonical text form, as "fnv1a64:<16 hex digits>".
std::string hypergraph_digest(const Hypergraph& h);

/// Every field except wall_time_ms, in fixed order, plus report_digest over them.
nlohmann::ordered_json to_json(const RunReport& report);
/// Digest of the report with the wall time excluded.
std::string report_digest(const RunReport& report);

/// Accepts decimals ("0.25") and fractions ("1/3").
double parse_probability(const std::string& text);

struct SolveOptions {
  std::filesystem::path file;
  int k = 3;
  int trials = 30;
  std::uint64_t seed = 0;
  bool oracle = false;
  std::optional<std::filesystem::path> report;
  int threads = 1;
};

RunReport cmd_solve(const SolveOptions& options, std::ostream& out);
RunReport cmd_oracle(const std::filesystem::path& file, int k, std::ostream& out);

struct GenOptions {
  std::string kind;  // random3 | linear3 | complete
  int r = 3;
  Vertex n = 0;
  double p = 0.0;
  std::uint64_t m = 0;
  std::uint64_t seed = 0;
  std::optional<std::filesystem::path> out;
};

/// Writes the hypergraph to options.out, or to out when unset; the one-line
/// summary goes to out in the first case and to diag in the second.
Hypergraph cmd_gen(const GenOptions& options, std::ostream& out, std::ostream& diag);

struct ExperimentCommand {
  std::string kind;  // concentration | scaling
  Vertex n = 40;
  double edge_p = 0.02;
  double p = 1.0 / 3.0;
  int reps = 100;
  std::vector<Vertex> sizes{40, 80, 160};
  std::uint64_t seed = 0;
  std::optional<std::filesystem::path> out;
  int threads = 1;
  bool measure_w = false;
};

void cmd_experiment(const ExperimentCommand& options, std::ostream& out);

/// Full command-line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hypercut::cli
