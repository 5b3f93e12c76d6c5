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

//
// Drifting-budget simulation: a persistent DynamicEngine against a
// lambda-greedy that restarts from scratch at every weight update.
//
// Time is measured in oracle calls. Between two updates each contestant may
// spend the interval's budget; a step that starts inside the budget is
// allowed to finish, so an interval can overshoot by at most one scan of the
// ground set. The complement search only starts when its worst case fits in
// what is left of the interval.
//

#ifndef KNAPGREEDY_HARNESS_H_
#define KNAPGREEDY_HARNESS_H_

#include <cstdint>
#include <iosfwd>
#include <random>
#include <span>
#include <vector>

#include "knapgreedy/core.h"
#include "knapgreedy/dynamic.h"
#include "knapgreedy/solver.h"

namespace knapgreedy {

struct SimConfig {
  std::int64_t tau = 10000;      // oracle calls between updates, > 0
  double noise_sigma = 0.075;    // std-dev of the additive fraction noise
  int n_updates = 50;
  std::uint64_t seed = 0;
  double lambda = 1.0;
  double initial_fraction = 0.5;  // initial W_i as a fraction of c_i(V)
};

// Throws InvalidInstance on tau <= 0, noise_sigma < 0, n_updates < 1 or
// initial_fraction outside (0, 1].
void CheckSimConfig(const SimConfig& cfg);

// fraction_i = clamp(W_i / c_i(V) + N(0, sigma^2), 0, 1), returned as
// fraction_i * c_i(V). One draw per knapsack. Knapsacks with zero total cost
// keep their weight.
std::vector<double> PerturbWeights(std::span<const double> weights,
                                   std::span<const double> totals,
                                   double noise_sigma, std::mt19937_64& rng);

struct UpdateSchedule {
  std::vector<double> initial;
  std::vector<WeightUpdate> updates;  // ascending at_call
  std::int64_t tail_budget = 0;       // budget after the last update
};

// initial = initial_fraction * c(V); update u fires at (u + 1) * tau with a
// perturbation of the previous weights. Fully determined by cfg.seed.
UpdateSchedule MakeSchedule(const KnapsackConstraints& cons,
                            const SimConfig& cfg);

struct TraceRow {
  int update = 0;
  std::vector<double> weights;  // in force while the row was recorded
  double dgreedy_value = 0.0;
  double restart_value = 0.0;
  std::int64_t dgreedy_calls = 0;
  std::int64_t restart_calls = 0;
  ElementSet filtered;  // elements that do not fit alone under `weights`
};

struct RunTrace {
  std::vector<TraceRow> rows;
};

// Plays `schedule` against both contestants. Row u describes the interval
// right after update u: both contestants are measured just before the next
// update (or at the end of the tail budget).
RunTrace RunSchedule(const Instance& inst, Lambda lambda,
                     const UpdateSchedule& schedule);

// MakeSchedule + RunSchedule. The instance's own weights are ignored.
RunTrace RunDynamic(const Instance& inst, const SimConfig& cfg);

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;  // population standard deviation
};

struct TraceSummary {
  MeanStd dgreedy;
  MeanStd restart;
};

// Throws InvalidInstance on an empty trace.
TraceSummary Summarize(const RunTrace& trace);

// update,weight_0..weight_{k-1},dgreedy_value,restart_value,dgreedy_calls,
// restart_calls; reals with 9 significant digits.
void WriteTraceCsv(std::ostream& out, const RunTrace& trace);

}  // namespace knapgreedy

#endif  // KNAPGREEDY_HARNESS_H_
