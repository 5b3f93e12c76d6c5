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

#include "knapgreedy/harness.h"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "knapgreedy/errors.h"

namespace knapgreedy {
namespace {

// Spends up to `budget` oracle calls on `engine`, starting from its current
// call count. Returns the calls actually spent.
std::int64_t Advance(DynamicEngine& engine, std::int64_t budget) {
  const std::int64_t start = engine.oracle_calls();
  auto used = [&] { return engine.oracle_calls() - start; };
  while (used() < budget) {
    if (!engine.finished()) {
      engine.Step();
    } else if (!engine.complement_searched() &&
               engine.ComplementWorstCase() <= budget - used()) {
      engine.SearchComplement();
    } else {
      break;
    }
  }
  return used();
}

void CheckRecordable(const DynamicEngine& engine) {
  const auto& cons = engine.instance().constraints;
  if (!IsFeasible(cons, engine.sigma().order())) {
    throw std::logic_error("greedy set infeasible at record time");
  }
  if (engine.vstar().element >= 0 &&
      !cons.SingletonFits(engine.vstar().element)) {
    throw std::logic_error("v* infeasible at record time");
  }
}

Instance WithWeights(const Instance& inst, std::vector<double> weights) {
  Instance out = inst;
  out.constraints.weights = std::move(weights);
  return out;
}

// A from-scratch run; nullopt when no element fits the weights.
struct Restart {
  std::optional<DynamicEngine> engine;
  std::int64_t setup_calls = 0;

  Restart(const Instance& inst, Lambda lambda) {
    try {
      engine.emplace(inst, lambda);
      setup_calls = engine->oracle_calls();
    } catch (const EmptyAfterReduction&) {
    }
  }

  std::int64_t Advance(std::int64_t budget) {
    if (!engine) return 0;
    return setup_calls + knapgreedy::Advance(*engine, budget - setup_calls);
  }

  double BestValue() const { return engine ? engine->BestValue() : 0.0; }
};

}  // namespace

void CheckSimConfig(const SimConfig& cfg) {
  if (cfg.tau <= 0) throw InvalidInstance("tau must be positive");
  if (!(cfg.noise_sigma >= 0.0)) {
    throw InvalidInstance("noise sigma must be nonnegative");
  }
  if (cfg.n_updates < 1) throw InvalidInstance("need at least one update");
  if (!(cfg.initial_fraction > 0.0 && cfg.initial_fraction <= 1.0)) {
    throw InvalidInstance("initial fraction must lie in (0, 1]");
  }
}

std::vector<double> PerturbWeights(std::span<const double> weights,
                                   std::span<const double> totals,
                                   double noise_sigma, std::mt19937_64& rng) {
  std::vector<double> out(weights.begin(), weights.end());
  if (noise_sigma == 0.0) return out;
  std::normal_distribution<double> noise(0.0, noise_sigma);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double g = noise(rng);
    if (!(totals[i] > 0.0)) continue;
    const double fraction = std::clamp(weights[i] / totals[i] + g, 0.0, 1.0);
    out[i] = fraction * totals[i];
  }
  return out;
}

UpdateSchedule MakeSchedule(const KnapsackConstraints& cons,
                            const SimConfig& cfg) {
  CheckSimConfig(cfg);
  const std::vector<double> totals = cons.Totals();
  UpdateSchedule schedule;
  schedule.initial.resize(totals.size());
  for (std::size_t i = 0; i < totals.size(); ++i) {
    schedule.initial[i] = cfg.initial_fraction * totals[i];
  }
  std::mt19937_64 rng(cfg.seed);
  std::vector<double> current = schedule.initial;
  for (int u = 0; u < cfg.n_updates; ++u) {
    current = PerturbWeights(current, totals, cfg.noise_sigma, rng);
    schedule.updates.push_back({(u + 1) * cfg.tau, current});
  }
  schedule.tail_budget = cfg.tau;
  return schedule;
}

RunTrace RunSchedule(const Instance& inst, Lambda lambda,
                     const UpdateSchedule& schedule) {
  for (std::size_t u = 1; u < schedule.updates.size(); ++u) {
    if (schedule.updates[u].at_call < schedule.updates[u - 1].at_call) {
      throw InvalidInstance("weight updates must be sorted by at_call");
    }
  }
  const Instance start = WithWeights(inst, schedule.initial);
  DynamicEngine dgreedy(start, lambda);
  Restart restart(start, lambda);

  std::int64_t clock = 0;
  auto interval_after = [&](std::size_t u) {
    return u + 1 < schedule.updates.size()
               ? schedule.updates[u + 1].at_call - schedule.updates[u].at_call
               : schedule.tail_budget;
  };

  if (!schedule.updates.empty()) {
    const std::int64_t warmup = schedule.updates.front().at_call - clock;
    Advance(dgreedy, warmup);
    restart.Advance(warmup);
  }

  RunTrace trace;
  for (std::size_t u = 0; u < schedule.updates.size(); ++u) {
    const WeightUpdate& update = schedule.updates[u];
    const std::int64_t before = dgreedy.oracle_calls();
    const UpdateReport report = dgreedy.ApplyWeights(update.weights);
    const std::int64_t budget = interval_after(u);
    Advance(dgreedy, budget - (dgreedy.oracle_calls() - before));
    restart = Restart(WithWeights(inst, update.weights), lambda);
    const std::int64_t restart_calls = restart.Advance(budget);

    CheckRecordable(dgreedy);
    if (restart.engine) CheckRecordable(*restart.engine);

    TraceRow row;
    row.update = static_cast<int>(u) + 1;
    row.weights = update.weights;
    row.dgreedy_value = dgreedy.BestValue();
    row.restart_value = restart.BestValue();
    row.dgreedy_calls = dgreedy.oracle_calls() - before;
    row.restart_calls = restart_calls;
    row.filtered = report.filtered;
    trace.rows.push_back(std::move(row));
  }
  return trace;
}

RunTrace RunDynamic(const Instance& inst, const SimConfig& cfg) {
  ValidateOrThrow(inst);
  const Lambda lambda(cfg.lambda, inst.constraints.k());
  return RunSchedule(inst, lambda, MakeSchedule(inst.constraints, cfg));
}

TraceSummary Summarize(const RunTrace& trace) {
  if (trace.rows.empty()) throw InvalidInstance("empty trace");
  const double count = static_cast<double>(trace.rows.size());
  TraceSummary s;
  for (const TraceRow& row : trace.rows) {
    s.dgreedy.mean += row.dgreedy_value;
    s.restart.mean += row.restart_value;
  }
  s.dgreedy.mean /= count;
  s.restart.mean /= count;
  for (const TraceRow& row : trace.rows) {
    s.dgreedy.std += (row.dgreedy_value - s.dgreedy.mean) *
                     (row.dgreedy_value - s.dgreedy.mean);
    s.restart.std += (row.restart_value - s.restart.mean) *
                     (row.restart_value - s.restart.mean);
  }
  s.dgreedy.std = std::sqrt(s.dgreedy.std / count);
  s.restart.std = std::sqrt(s.restart.std / count);
  return s;
}

void WriteTraceCsv(std::ostream& out, const RunTrace& trace) {
  const std::size_t k =
      trace.rows.empty() ? 0 : trace.rows.front().weights.size();
  out << "update";
  for (std::size_t i = 0; i < k; ++i) out << ",weight_" << i;
  out << ",dgreedy_value,restart_value,dgreedy_calls,restart_calls\n";
  const auto flags = out.flags();
  const auto precision = out.precision(9);
  out.unsetf(std::ios::floatfield);
  for (const TraceRow& row : trace.rows) {
    out << row.update;
    for (double w : row.weights) out << ',' << w;
    out << ',' << row.dgreedy_value << ',' << row.restart_value << ','
        << row.dgreedy_calls << ',' << row.restart_calls << '\n';
  }
  out.precision(precision);
  out.flags(flags);
}

}  // namespace knapgreedy
