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

// JSON and CSV formats for instances, update streams and results.
//
// Instance:
//   {"n": int, "k": int, "costs": [[real]], "weights": [real],
//    "objective": {"kind": "modular" | "cut" | "dpp" | "entropy", ...}}
// "costs"/"weights" may be replaced by
//   "partition": {"labels": [int], "budgets": [int]}.
// Objective fields:
//   modular  "values": [real]
//   cut      "arcs": [[u, v, w]]
//   dpp      "L": [[real]] or "qd": {"q": [real],
//            "features": {name: [[real]]}, "sigmas": {name: real}},
//            optional "jitter": real
//   entropy  "Sigma": [[real]] or "Sigma_csv": path (relative to the
//            instance file), n rows of n comma-separated reals
// Update stream: [{"at_call": int, "weights": [real]}], sorted by at_call.

#ifndef KNAPGREEDY_IO_H_
#define KNAPGREEDY_IO_H_

#include <Eigen/Dense>
#include <filesystem>
#include <memory>
#include <vector>

#include "json.hpp"
#include "knapgreedy/core.h"
#include "knapgreedy/dynamic.h"
#include "knapgreedy/harness.h"
#include "knapgreedy/oracle.h"
#include "knapgreedy/solver.h"

namespace knapgreedy {

// All parse functions throw InvalidInstance on schema errors.
Instance ParseInstance(const nlohmann::json& doc,
                       const std::filesystem::path& base_dir = {});
Instance LoadInstance(const std::filesystem::path& path);

std::shared_ptr<const Objective> ParseObjective(
    const nlohmann::json& doc, int n, const std::filesystem::path& base_dir);

nlohmann::json InstanceToJson(const Instance& inst);
nlohmann::json ObjectiveToJson(const Objective& f);

Eigen::MatrixXd ReadCsvMatrix(const std::filesystem::path& path);

std::vector<WeightUpdate> ParseUpdateStream(const nlohmann::json& doc);
std::vector<WeightUpdate> LoadUpdateStream(const std::filesystem::path& path);

// {"value", "chosen", "which", "oracle_calls"}
nlohmann::json SolveResultToJson(const SolveResult& result);

nlohmann::json OracleReportToJson(const OracleReport& report);

// {"dgreedy": {"mean", "std"}, "restart": {...}, "config": {...}}
nlohmann::json SummaryToJson(const TraceSummary& summary, const SimConfig& cfg);

}  // namespace knapgreedy

#endif  // KNAPGREEDY_IO_H_
