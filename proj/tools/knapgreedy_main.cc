// Copyright 2026 The Authors.
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

// knapgreedy: solve, simulate, oracle and curvature subcommands.
//
// Exit codes: 0 success, 1 guarantee violated (oracle only), 2 usage or
// validation error, 3 nothing fits after reduction.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "knapgreedy/core.h"
#include "knapgreedy/errors.h"
#include "knapgreedy/harness.h"
#include "knapgreedy/io.h"
#include "knapgreedy/objectives.h"
#include "knapgreedy/oracle.h"
#include "knapgreedy/solver.h"

namespace {

using knapgreedy::Instance;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitViolated = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDegenerate = 3;

void Emit(const json& doc, const std::string& path) {
  if (path.empty()) {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw knapgreedy::InvalidInstance("cannot write " + path);
  out << doc.dump(2) << "\n";
}

struct SolveArgs {
  std::string instance;
  double lambda = 1.0;
  std::string json_out;
  bool pretty = false;
};

int RunSolve(const SolveArgs& args) {
  const Instance inst = knapgreedy::LoadInstance(args.instance);
  const knapgreedy::Lambda lambda(args.lambda, inst.constraints.k());
  const auto result = knapgreedy::LambdaGreedy(inst, lambda);
  if (result.complement_over_cap) {
    std::cerr << "warning: complement too large, exhaustive search was slow\n";
  }
  if (args.pretty) {
    std::cout << "value         " << result.value << "\n"
              << "which         " << knapgreedy::ChoiceName(result.which) << "\n"
              << "chosen        ";
    for (int e : result.chosen) std::cout << e << " ";
    std::cout << "\noracle calls  " << result.oracle_calls << "\n";
    if (!args.json_out.empty()) {
      Emit(knapgreedy::SolveResultToJson(result), args.json_out);
    }
    return kExitOk;
  }
  Emit(knapgreedy::SolveResultToJson(result), args.json_out);
  return kExitOk;
}

struct SimulateArgs {
  std::string instance;
  std::string out;
  std::string summary_out;
  std::string stream;
  std::optional<double> lambda;
  knapgreedy::SimConfig cfg;
};

int RunSimulate(SimulateArgs args) {
  const Instance inst = knapgreedy::LoadInstance(args.instance);
  args.cfg.lambda = args.lambda.value_or(inst.constraints.k());
  knapgreedy::CheckSimConfig(args.cfg);
  if (args.cfg.tau < inst.n) {
    std::cerr << "warning: budget too small, tau < n\n";
  }

  knapgreedy::RunTrace trace;
  if (args.stream.empty()) {
    trace = knapgreedy::RunDynamic(inst, args.cfg);
  } else {
    knapgreedy::UpdateSchedule schedule;
    schedule.initial = inst.constraints.weights;
    schedule.updates = knapgreedy::LoadUpdateStream(args.stream);
    schedule.tail_budget = args.cfg.tau;
    args.cfg.n_updates = static_cast<int>(schedule.updates.size());
    const knapgreedy::Lambda lambda(args.cfg.lambda, inst.constraints.k());
    trace = knapgreedy::RunSchedule(inst, lambda, schedule);
  }

  std::ofstream csv(args.out);
  if (!csv) throw knapgreedy::InvalidInstance("cannot write " + args.out);
  knapgreedy::WriteTraceCsv(csv, trace);
  Emit(knapgreedy::SummaryToJson(knapgreedy::Summarize(trace), args.cfg),
       args.summary_out);
  return kExitOk;
}

struct OracleArgs {
  std::string instance;
  double lambda = 1.0;
  std::optional<double> assert_value;
  bool pretty = false;
};

int RunOracle(const OracleArgs& args) {
  const Instance inst = knapgreedy::LoadInstance(args.instance);
  const knapgreedy::Lambda lambda(args.lambda, inst.constraints.k());
  if (inst.n > knapgreedy::kMaxOptElements) {
    throw knapgreedy::OracleLimitExceeded("instance too large for oracle");
  }
  const double alg = args.assert_value
                         ? *args.assert_value
                         : knapgreedy::LambdaGreedy(inst, lambda).value;
  const auto report = knapgreedy::CheckGuarantee(inst, lambda, alg);
  if (args.pretty) {
    std::cout << "opt      " << report.opt_value << "\n"
              << "alg      " << report.alg_value << "\n"
              << "alpha    " << report.curvature << "\n"
              << "bound    " << report.bound << "\n"
              << "holds    " << (report.holds ? "yes" : "no") << "\n";
  } else {
    Emit(knapgreedy::OracleReportToJson(report), "");
  }
  return report.holds ? kExitOk : kExitViolated;
}

int RunCurvature(const std::string& path) {
  const Instance inst = knapgreedy::LoadInstance(path);
  json doc;
  doc["alpha"] = knapgreedy::BruteForceCurvature(*inst.objective);
  if (const auto* entropy =
          dynamic_cast<const knapgreedy::EntropyObjective*>(inst.objective.get())) {
    const double bound = knapgreedy::EntropyCurvatureBound(entropy->covariance());
    doc["entropy_bound"] = bound;
    doc["within_bound"] = doc["alpha"].get<double>() <= bound + 1e-6;
  }
  Emit(doc, "");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Submodular maximization under multiple knapsacks"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Run the static lambda-greedy");
  solve_cmd->add_option("--instance", solve.instance, "Instance JSON")->required();
  solve_cmd->add_option("--lambda", solve.lambda, "lambda in [1, k]")->required();
  solve_cmd->add_option("--json-out", solve.json_out, "Write the result here");
  solve_cmd->add_flag("--pretty", solve.pretty, "Human-readable output");

  SimulateArgs sim;
  auto* sim_cmd =
      app.add_subcommand("simulate", "Dynamic engine vs restarts under drift");
  sim_cmd->add_option("--instance", sim.instance, "Instance JSON")->required();
  sim_cmd->add_option("--tau", sim.cfg.tau, "Oracle calls between updates")->required();
  sim_cmd->add_option("--sigma", sim.cfg.noise_sigma, "Noise std-dev");
  sim_cmd->add_option("--updates", sim.cfg.n_updates, "Number of updates");
  sim_cmd->add_option("--seed", sim.cfg.seed, "RNG seed");
  sim_cmd->add_option("--lambda", sim.lambda, "lambda in [1, k] (default k)");
  sim_cmd->add_option("--initial-fraction", sim.cfg.initial_fraction,
                      "Initial weights as a fraction of total cost");
  sim_cmd->add_option("--stream", sim.stream,
                      "Scripted update stream JSON instead of random drift");
  sim_cmd->add_option("--out", sim.out, "Trace CSV")->required();
  sim_cmd->add_option("--summary-out", sim.summary_out,
                      "Write the summary JSON here instead of stdout");

  OracleArgs oracle;
  auto* oracle_cmd =
      app.add_subcommand("oracle", "Check the guarantee against brute force");
  oracle_cmd->add_option("--instance", oracle.instance, "Instance JSON")->required();
  oracle_cmd->add_option("--lambda", oracle.lambda, "lambda in [1, k]")->required();
  oracle_cmd->add_option("--assert-value", oracle.assert_value,
                         "Check this value instead of running the solver");
  oracle_cmd->add_flag("--pretty", oracle.pretty, "Human-readable output");

  std::string curvature_path;
  auto* curvature_cmd =
      app.add_subcommand("curvature", "Brute-force curvature of the objective");
  curvature_cmd->add_option("--instance", curvature_path, "Instance JSON")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve_cmd) return RunSolve(solve);
    if (*sim_cmd) return RunSimulate(sim);
    if (*oracle_cmd) return RunOracle(oracle);
    if (*curvature_cmd) return RunCurvature(curvature_path);
  } catch (const knapgreedy::EmptyAfterReduction& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const knapgreedy::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
