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

#include "knapgreedy/io.h"

#include <fstream>
#include <sstream>
#include <string>

#include "knapgreedy/errors.h"
#include "knapgreedy/objectives.h"

namespace knapgreedy {

using nlohmann::json;

namespace {

const json& Require(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw InvalidInstance(std::string("missing field \"") + key + "\"");
  }
  return doc.at(key);
}

std::vector<double> RealVector(const json& doc, const char* what) {
  if (!doc.is_array()) throw InvalidInstance(std::string(what) + " must be an array");
  std::vector<double> out;
  for (const json& v : doc) {
    if (!v.is_number()) {
      throw InvalidInstance(std::string(what) + " must contain numbers");
    }
    out.push_back(v.get<double>());
  }
  return out;
}

std::vector<int> IntVector(const json& doc, const char* what) {
  if (!doc.is_array()) throw InvalidInstance(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const json& v : doc) {
    if (!v.is_number_integer()) {
      throw InvalidInstance(std::string(what) + " must contain integers");
    }
    out.push_back(v.get<int>());
  }
  return out;
}

Eigen::MatrixXd RealMatrix(const json& doc, const char* what) {
  if (!doc.is_array() || doc.empty()) {
    throw InvalidInstance(std::string(what) + " must be a nonempty array of rows");
  }
  const auto rows = static_cast<Eigen::Index>(doc.size());
  const auto first = RealVector(doc.front(), what);
  const auto cols = static_cast<Eigen::Index>(first.size());
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const auto row = RealVector(doc[r], what);
    if (static_cast<Eigen::Index>(row.size()) != cols) {
      throw InvalidInstance(std::string(what) + " rows differ in length");
    }
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = row[c];
  }
  return m;
}

json MatrixToJson(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

void RequireSize(Eigen::Index rows, Eigen::Index cols, int n, const char* what) {
  if (rows != n || cols != n) {
    throw InvalidInstance(std::string("dimension mismatch: ") + what);
  }
}

std::shared_ptr<const Objective> ParseDpp(const json& doc, int n) {
  const double jitter =
      doc.contains("jitter") ? doc.at("jitter").get<double>() : kDefaultJitter;
  if (doc.contains("L")) {
    Eigen::MatrixXd kernel = RealMatrix(doc.at("L"), "L");
    RequireSize(kernel.rows(), kernel.cols(), n, "L");
    return std::make_shared<DppLogDetObjective>(std::move(kernel), jitter);
  }
  const json& qd = Require(doc, "qd");
  QdKernelSpec spec;
  spec.quality = RealVector(Require(qd, "q"), "q");
  const json& features = Require(qd, "features");
  const json& sigmas = Require(qd, "sigmas");
  if (!features.is_object() || !sigmas.is_object()) {
    throw InvalidInstance("qd features and sigmas must be objects");
  }
  for (const auto& [name, vectors] : features.items()) {
    if (!sigmas.contains(name)) {
      throw InvalidInstance("no sigma for feature family '" + name + "'");
    }
    spec.families.push_back(
        {name, RealMatrix(vectors, "features"), sigmas.at(name).get<double>()});
  }
  Eigen::MatrixXd kernel = BuildQdKernel(spec);
  RequireSize(kernel.rows(), kernel.cols(), n, "qd");
  return std::make_shared<DppLogDetObjective>(std::move(kernel), jitter);
}

}  // namespace

Eigen::MatrixXd ReadCsvMatrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInstance("cannot read " + path.string());
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<double> row;
    std::stringstream fields(line);
    std::string field;
    while (std::getline(fields, field, ',')) {
      std::size_t used = 0;
      try {
        row.push_back(std::stod(field, &used));
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 ||
          field.find_first_not_of(" \t\r", used) != std::string::npos) {
        throw InvalidInstance("bad number '" + field + "' in " + path.string());
      }
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw InvalidInstance(path.string() + " is empty");
  Eigen::MatrixXd m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.front().size()) {
      throw InvalidInstance(path.string() + " rows differ in length");
    }
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::shared_ptr<const Objective> ParseObjective(
    const json& doc, int n, const std::filesystem::path& base_dir) {
  const std::string kind = Require(doc, "kind").get<std::string>();
  if (kind == "modular") {
    auto values = RealVector(Require(doc, "values"), "values");
    if (static_cast<int>(values.size()) != n) {
      throw InvalidInstance("dimension mismatch: values");
    }
    return std::make_shared<ModularObjective>(std::move(values));
  }
  if (kind == "cut") {
    std::vector<Arc> arcs;
    for (const json& a : Require(doc, "arcs")) {
      if (!a.is_array() || a.size() != 3) {
        throw InvalidInstance("arcs must be [u, v, w] triples");
      }
      arcs.push_back({a[0].get<int>(), a[1].get<int>(), a[2].get<double>()});
    }
    return std::make_shared<DirectedCutObjective>(n, std::move(arcs));
  }
  if (kind == "dpp") return ParseDpp(doc, n);
  if (kind == "entropy") {
    Eigen::MatrixXd sigma =
        doc.contains("Sigma")
            ? RealMatrix(doc.at("Sigma"), "Sigma")
            : ReadCsvMatrix(base_dir /
                            Require(doc, "Sigma_csv").get<std::string>());
    RequireSize(sigma.rows(), sigma.cols(), n, "Sigma");
    return std::make_shared<EntropyObjective>(std::move(sigma));
  }
  throw InvalidInstance("unknown objective kind '" + kind + "'");
}

Instance ParseInstance(const json& doc, const std::filesystem::path& base_dir) {
  try {
    Instance inst;
    inst.n = Require(doc, "n").get<int>();
    if (inst.n < 1) throw InvalidInstance("n must be positive");
    if (doc.contains("partition")) {
      const json& part = doc.at("partition");
      PartitionBudget budget{IntVector(Require(part, "labels"), "labels"),
                             IntVector(Require(part, "budgets"), "budgets")};
      if (static_cast<int>(budget.labels.size()) != inst.n) {
        throw InvalidInstance("dimension mismatch: partition labels");
      }
      inst.constraints = budget.ToKnapsacks();
    } else {
      for (const json& row : Require(doc, "costs")) {
        inst.constraints.costs.push_back(RealVector(row, "costs"));
      }
      inst.constraints.weights = RealVector(Require(doc, "weights"), "weights");
    }
    if (doc.contains("k") &&
        doc.at("k").get<int>() != inst.constraints.k()) {
      throw InvalidInstance("dimension mismatch: k");
    }
    inst.objective = ParseObjective(Require(doc, "objective"), inst.n, base_dir);
    ValidateOrThrow(inst);
    return inst;
  } catch (const json::exception& e) {
    throw InvalidInstance(std::string("schema error: ") + e.what());
  }
}

Instance LoadInstance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInstance("cannot read " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidInstance(std::string("malformed JSON: ") + e.what());
  }
  return ParseInstance(doc, path.parent_path());
}

json ObjectiveToJson(const Objective& f) {
  if (const auto* m = dynamic_cast<const ModularObjective*>(&f)) {
    return {{"kind", "modular"}, {"values", m->values()}};
  }
  if (const auto* c = dynamic_cast<const DirectedCutObjective*>(&f)) {
    json arcs = json::array();
    for (const Arc& a : c->arcs()) arcs.push_back({a.source, a.target, a.weight});
    return {{"kind", "cut"}, {"arcs", std::move(arcs)}};
  }
  if (const auto* d = dynamic_cast<const DppLogDetObjective*>(&f)) {
    return {{"kind", "dpp"},
            {"L", MatrixToJson(d->kernel())},
            {"jitter", d->jitter()}};
  }
  if (const auto* s = dynamic_cast<const EntropyObjective*>(&f)) {
    return {{"kind", "entropy"}, {"Sigma", MatrixToJson(s->covariance())}};
  }
  if (const auto* r = dynamic_cast<const RestrictedObjective*>(&f)) {
    return {{"kind", "restricted"},
            {"keep", r->keep()},
            {"of", ObjectiveToJson(r->parent())}};
  }
  return {{"kind", std::string(f.kind())}};
}

json InstanceToJson(const Instance& inst) {
  return {{"n", inst.n},
          {"k", inst.constraints.k()},
          {"costs", inst.constraints.costs},
          {"weights", inst.constraints.weights},
          {"objective", ObjectiveToJson(*inst.objective)}};
}

std::vector<WeightUpdate> ParseUpdateStream(const json& doc) {
  try {
    if (!doc.is_array()) throw InvalidInstance("update stream must be an array");
    std::vector<WeightUpdate> out;
    for (const json& item : doc) {
      WeightUpdate u;
      u.at_call = Require(item, "at_call").get<std::int64_t>();
      u.weights = RealVector(Require(item, "weights"), "weights");
      if (!out.empty() && u.at_call < out.back().at_call) {
        throw InvalidInstance("update stream must be sorted by at_call");
      }
      out.push_back(std::move(u));
    }
    return out;
  } catch (const json::exception& e) {
    throw InvalidInstance(std::string("schema error: ") + e.what());
  }
}

std::vector<WeightUpdate> LoadUpdateStream(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInstance("cannot read " + path.string());
  try {
    return ParseUpdateStream(json::parse(in));
  } catch (const json::exception& e) {
    throw InvalidInstance(std::string("malformed JSON: ") + e.what());
  }
}

json SolveResultToJson(const SolveResult& result) {
  return {{"value", result.value},
          {"chosen", result.chosen},
          {"which", std::string(ChoiceName(result.which))},
          {"oracle_calls", result.oracle_calls}};
}

json OracleReportToJson(const OracleReport& report) {
  return {{"opt_value", report.opt_value},
          {"opt_set", report.opt_set},
          {"curvature", report.curvature},
          {"lambda", report.lambda},
          {"bound", report.bound},
          {"alg_value", report.alg_value},
          {"ratio", report.ratio ? json(*report.ratio) : json(nullptr)},
          {"holds", report.holds}};
}

json SummaryToJson(const TraceSummary& summary, const SimConfig& cfg) {
  return {{"dgreedy", {{"mean", summary.dgreedy.mean}, {"std", summary.dgreedy.std}}},
          {"restart", {{"mean", summary.restart.mean}, {"std", summary.restart.std}}},
          {"config",
           {{"tau", cfg.tau},
            {"sigma", cfg.noise_sigma},
            {"updates", cfg.n_updates},
            {"seed", cfg.seed},
            {"lambda", cfg.lambda},
            {"initial_fraction", cfg.initial_fraction}}}};
}

}  // namespace knapgreedy
