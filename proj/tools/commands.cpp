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

#include "commands.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "hypercut/errors.hpp"
#include "hypercut/experiments.hpp"
#include "hypercut/generators.hpp"
#include "hypercut/io.hpp"
#include "hypercut/oracle.hpp"
#include "hypercut/seed.hpp"
#include "hypercut/three_cut.hpp"

namespace hypercut::cli {

namespace {

std::string hex64(std::uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
  return buf;
}

Rational coefficient_or_zero(int r, int k) {
  return (k >= 2 && k <= r) ? random_cut_coefficient(r, k) : Rational(0);
}

void fill_from_cut(RunReport& report, const Hypergraph& h, const KCut& cut) {
  report.r = h.uniformity();
  report.n = h.num_vertices();
  report.m = h.num_edges();
  report.k = cut.k;
  report.coefficient = coefficient_or_zero(h.uniformity(), cut.k);
  report.assignment = cut.assignment;
  report.cut_value = cut.cut_value;
  report.surplus = surplus_of_cut(h, cut);
}

void print_summary(std::ostream& out, const RunReport& report) {
  out << report.command << ": r=" << report.r << " n=" << report.n << " m=" << report.m << " k=" << report.k
      << '\n'
      << "strategy: " << report.strategy << (report.in_guarantee_range ? "" : " (outside guarantee range)") << '\n'
      << "cut_value: " << report.cut_value << '\n'
      << "surplus: " << format_rational(report.surplus) << " ("
      << boost::rational_cast<double>(report.surplus) << ")\n"
      << "random-cut coefficient: " << format_rational(report.coefficient) << '\n';
}

void write_report(const std::filesystem::path& path, const RunReport& report) {
  std::ofstream file(path);
  if (!file) throw InputError("cannot write report " + path.string());
  auto doc = to_json(report);
  doc["wall_time_ms"] = report.wall_time_ms;
  file << doc.dump(2) << '\n';
}

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace

std::string format_rational(const Rational& value) {
  if (value.denominator() == 1) return std::to_string(value.numerator());
  return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
}

std::string hypergraph_digest(const Hypergraph& h) { return "fnv1a64:" + hex64(fnv1a(to_text(h))); }

nlohmann::ordered_json to_json(const RunReport& report) {
  nlohmann::ordered_json doc;
  doc["command"] = report.command;
  doc["input"] = report.input;
  doc["input_digest"] = report.input_digest;
  doc["seed"] = report.seed;
  doc["r"] = report.r;
  doc["n"] = report.n;
  doc["m"] = report.m;
  doc["k"] = report.k;
  doc["trials"] = report.trials;
  doc["threads"] = report.threads;
  doc["strategy"] = report.strategy;
  doc["in_guarantee_range"] = report.in_guarantee_range;
  doc["coefficient"] = format_rational(report.coefficient);
  doc["assignment"] = report.assignment;
  doc["cut_value"] = report.cut_value;
  doc["surplus"] = format_rational(report.surplus);
  doc["surplus_value"] = boost::rational_cast<double>(report.surplus);
  doc["report_digest"] = "fnv1a64:" + hex64(fnv1a(doc.dump()));
  return doc;
}

std::string report_digest(const RunReport& report) { return to_json(report)["report_digest"].get<std::string>(); }

double parse_probability(const std::string& text) {
  const auto fail = [&]() -> double { throw InputError("invalid probability '" + text + "'"); };
  try {
    std::size_t used = 0;
    double value = 0.0;
    if (const auto slash = text.find('/'); slash != std::string::npos) {
      const std::string num_text = text.substr(0, slash);
      const std::string den_text = text.substr(slash + 1);
      const double num = std::stod(num_text, &used);
      if (used != num_text.size()) return fail();
      const double den = std::stod(den_text, &used);
      if (used != den_text.size() || den == 0.0) return fail();
      value = num / den;
    } else {
      value = std::stod(text, &used);
      if (used != text.size()) return fail();
    }
    if (!(value >= 0.0 && value <= 1.0)) return fail();
    return value;
  } catch (const std::invalid_argument&) {
    return fail();
  } catch (const std::out_of_range&) {
    return fail();
  }
}

RunReport cmd_solve(const SolveOptions& options, std::ostream& out) {
  if (options.oracle) {
    auto report = cmd_oracle(options.file, options.k, out);
    report.seed = options.seed;
    if (options.report) write_report(*options.report, report);
    return report;
  }
  const Stopwatch watch;
  const auto h = read_hypergraph_file(options.file);
  SamplePlan plan;
  plan.trials = options.trials;
  plan.seed = derive_seed(options.seed, "solve");
  plan.threads = options.threads;
  const auto solution = solve_kcut(h, options.k, plan);

  RunReport report;
  report.command = "solve";
  report.input = options.file.filename().string();
  report.input_digest = hypergraph_digest(h);
  report.seed = options.seed;
  report.trials = options.trials;
  report.threads = options.threads;
  report.strategy = solution.source;
  report.in_guarantee_range = solution.in_guarantee_range;
  fill_from_cut(report, h, solution.cut);
  report.wall_time_ms = watch.elapsed_ms();
  print_summary(out, report);
  if (options.report) write_report(*options.report, report);
  return report;
}

RunReport cmd_oracle(const std::filesystem::path& file, int k, std::ostream& out) {
  const Stopwatch watch;
  const auto h = read_hypergraph_file(file);
  const auto cut = brute_force_max_kcut(h, k);
  RunReport report;
  report.command = "oracle";
  report.input = file.filename().string();
  report.input_digest = hypergraph_digest(h);
  report.strategy = "exhaustive";
  report.in_guarantee_range = true;
  fill_from_cut(report, h, cut);
  report.wall_time_ms = watch.elapsed_ms();
  print_summary(out, report);
  return report;
}

Hypergraph cmd_gen(const GenOptions& options, std::ostream& out, std::ostream& diag) {
  Hypergraph h;
  bool shortfall = false;
  if (options.kind == "random3") {
    h = gen_random_3graph(options.n, options.p, derive_seed(options.seed, "gen"));
  } else if (options.kind == "linear3") {
    auto generated = gen_random_linear_3graph(options.n, options.m, derive_seed(options.seed, "gen"));
    h = std::move(generated.graph);
    shortfall = generated.shortfall;
  } else if (options.kind == "complete") {
    h = gen_complete(options.r, options.n);
  } else {
    throw InputError("unknown generator kind '" + options.kind + "'");
  }
  if (options.out) {
    write_hypergraph_file(*options.out, h);
  } else {
    write_hypergraph(out, h);
  }
  const auto profile = degree_profile(h);
  std::ostream& log = options.out ? out : diag;
  log << "generated " << options.kind << ": r=" << h.uniformity() << " n=" << h.num_vertices()
      << " m=" << profile.m << " max_degree=" << profile.max_degree << " max_codegree=" << profile.max_codegree
      << (shortfall ? " (shortfall: target not reached)" : "") << '\n';
  return h;
}

void cmd_experiment(const ExperimentCommand& options, std::ostream& out) {
  std::ofstream file;
  if (options.out) {
    file.open(*options.out);
    if (!file) throw InputError("cannot write " + options.out->string());
  }
  std::ostream& csv = options.out ? static_cast<std::ostream&>(file) : out;

  if (options.kind == "concentration") {
    const auto h = gen_random_3graph(options.n, options.edge_p, derive_seed(options.seed, "instance"));
    const auto g = colored_pair_graph(h);
    ExperimentOptions experiment_options;
    experiment_options.threads = options.threads;
    experiment_options.measure_w = options.measure_w;
    const auto records =
        colored_sampling_experiment(g, options.p, options.reps, derive_seed(options.seed, "sampling"), experiment_options);
    write_csv(csv, records);
    const auto passed = std::count_if(records.begin(), records.end(), [](const auto& r) { return r.pass; });
    out << "# pass_rate=" << pass_rate(records) << " (" << passed << "/" << records.size() << ")"
        << " m=" << g.num_edges() << " threshold=" << (records.empty() ? 0.0 : records.front().threshold) << '\n';
  } else if (options.kind == "scaling") {
    SamplePlan plan;
    plan.threads = options.threads;
    const auto rows = surplus_scaling_study(options.sizes, options.reps, derive_seed(options.seed, "scaling"), plan);
    write_csv(csv, rows);
    for (Vertex n : options.sizes) {
      double m_sum = 0.0;
      double s_sum = 0.0;
      int count = 0;
      for (const auto& row : rows) {
        if (row.n != n) continue;
        m_sum += static_cast<double>(row.m);
        s_sum += row.surplus;
        ++count;
      }
      out << "# n=" << n << " mean_m=" << m_sum / count << " mean_surplus=" << s_sum / count << '\n';
    }
  } else {
    throw InputError("unknown experiment kind '" + options.kind + "'");
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"hypercut: large k-cuts of uniform multi-hypergraphs"};
  app.require_subcommand(1);

  SolveOptions solve;
  std::string report_path;
  auto* solve_cmd = app.add_subcommand("solve", "Find a large k-cut of a hypergraph file");
  solve_cmd->add_option("--file", solve.file, "Hypergraph text file")->required();
  solve_cmd->add_option("--k", solve.k, "Number of parts")->capture_default_str();
  solve_cmd->add_option("--trials", solve.trials, "Sampling rounds")->capture_default_str()->check(CLI::PositiveNumber);
  solve_cmd->add_option("--seed", solve.seed, "Root seed")->capture_default_str();
  solve_cmd->add_flag("--oracle", solve.oracle, "Exhaustive search instead of the solver");
  solve_cmd->add_option("--report", report_path, "Write a JSON run report to this path");
  solve_cmd->add_option("--threads", solve.threads, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);

  GenOptions gen;
  std::string gen_p = "0";
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a hypergraph");
  gen_cmd->add_option("--kind", gen.kind, "random3 | linear3 | complete")
      ->required()
      ->check(CLI::IsMember({"random3", "linear3", "complete"}));
  gen_cmd->add_option("--r", gen.r, "Uniformity (complete)")->capture_default_str();
  gen_cmd->add_option("--n", gen.n, "Vertex count")->required();
  gen_cmd->add_option("--p", gen_p, "Edge probability (random3), e.g. 0.02 or 1/40");
  gen_cmd->add_option("--m", gen.m, "Target edge count (linear3)");
  gen_cmd->add_option("--seed", gen.seed, "Root seed")->capture_default_str();
  gen_cmd->add_option("--out", gen_out, "Output file (default: standard output)");

  ExperimentCommand experiment;
  std::string exp_p = "1/3";
  std::string exp_edge_p = "0.02";
  std::string exp_out;
  auto* exp_cmd = app.add_subcommand("experiment", "Run a seeded measurement and emit CSV");
  exp_cmd->add_option("--kind", experiment.kind, "concentration | scaling")
      ->required()
      ->check(CLI::IsMember({"concentration", "scaling"}));
  exp_cmd->add_option("--n", experiment.n, "Vertices of the random 3-graph (concentration)")->capture_default_str();
  exp_cmd->add_option("--edge-p", exp_edge_p, "Edge probability of the random 3-graph (concentration)")
      ->capture_default_str();
  exp_cmd->add_option("--p", exp_p, "Color sampling probability (concentration)")->capture_default_str();
  exp_cmd->add_option("--reps", experiment.reps, "Repetitions")->capture_default_str()->check(CLI::PositiveNumber);
  exp_cmd->add_option("--sizes", experiment.sizes, "Vertex counts (scaling)")->delimiter(',')->capture_default_str();
  exp_cmd->add_option("--seed", experiment.seed, "Root seed")->capture_default_str();
  exp_cmd->add_option("--out", exp_out, "CSV output file (default: standard output)");
  exp_cmd->add_option("--threads", experiment.threads, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  exp_cmd->add_flag("--measure-w", experiment.measure_w, "Also record the norm of p * sum_c A_c^2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*solve_cmd) {
      if (!report_path.empty()) solve.report = report_path;
      cmd_solve(solve, out);
    } else if (*gen_cmd) {
      gen.p = parse_probability(gen_p);
      if (!gen_out.empty()) gen.out = gen_out;
      cmd_gen(gen, out, err);
    } else if (*exp_cmd) {
      experiment.p = parse_probability(exp_p);
      experiment.edge_p = parse_probability(exp_edge_p);
      if (!exp_out.empty()) experiment.out = exp_out;
      cmd_experiment(experiment, out);
    }
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << '\n';
    return kExitCapacityError;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace hypercut::cli
