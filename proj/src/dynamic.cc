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

#include "knapgreedy/dynamic.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "knapgreedy/errors.h"

namespace knapgreedy {

DynamicEngine::DynamicEngine(Instance inst, Lambda lambda)
    : inst_(std::move(inst)),
      lambda_(lambda),
      oracle_(*inst_.objective),
      singleton_value_(inst_.n, 0.0),
      singleton_known_(inst_.n, 0),
      sigma_(inst_.constraints.k()) {
  ValidateOrThrow(inst_);
  Rebuild();
  if (admissible_.empty()) throw EmptyAfterReduction();
  pool_ = cheap_;
}

void DynamicEngine::Rebuild() {
  const KnapsackConstraints& cons = inst_.constraints;
  admissible_.clear();
  for (int e = 0; e < inst_.n; ++e) {
    if (cons.SingletonFits(e)) admissible_.push_back(e);
  }
  Partition part = PartitionByLambda(cons, lambda_, admissible_);
  cheap_ = std::move(part.cheap);
  expensive_ = std::move(part.expensive);

  vstar_ = SingletonBest{};
  for (int e : admissible_) {
    if (!singleton_known_[e]) {
      const int one[] = {e};
      singleton_value_[e] = oracle_(one);
      singleton_known_[e] = 1;
    }
    if (vstar_.element < 0 || singleton_value_[e] > vstar_.value) {
      vstar_.element = e;
      vstar_.value = singleton_value_[e];
    }
  }
  complement_.reset();
}

StepOutcome DynamicEngine::Step() {
  if (pool_.empty()) throw std::logic_error("Step() on a finished engine");
  return GreedyStep(oracle_, inst_.constraints, sigma_, pool_);
}

void DynamicEngine::RunToCompletion() {
  while (!pool_.empty()) Step();
}

UpdateReport DynamicEngine::ApplyWeights(std::vector<double> weights) {
  KnapsackConstraints& cons = inst_.constraints;
  if (static_cast<int>(weights.size()) != cons.k()) {
    throw InvalidInstance("weight update has the wrong number of knapsacks");
  }
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw InvalidInstance("weight update must be finite and nonnegative");
    }
  }

  UpdateReport report;
  report.chi_old = Chi(cons, admissible_);
  const std::vector<char> old_cheap = [&] {
    std::vector<char> in(inst_.n, 0);
    for (int e : cheap_) in[e] = 1;
    return in;
  }();

  cons.weights = std::move(weights);
  Rebuild();
  report.chi_new = Chi(cons, admissible_);
  for (int e = 0; e < inst_.n; ++e) {
    if (!cons.SingletonFits(e)) report.filtered.push_back(e);
  }

  std::vector<char> in_both(inst_.n, 0);
  for (int e : cheap_) in_both[e] = old_cheap[e];
  const auto& order = sigma_.order();
  while (report.t_star < static_cast<int>(order.size()) &&
         in_both[order[report.t_star]]) {
    ++report.t_star;
  }

  const std::size_t chi_min =
      static_cast<std::size_t>(std::min(report.chi_old, report.chi_new));
  auto inside_both = [&] {
    return std::all_of(sigma_.order().begin(), sigma_.order().end(),
                       [&](int e) { return in_both[e] != 0; });
  };
  while (sigma_.size() > chi_min || !inside_both()) {
    report.popped.push_back(sigma_.PopBack());
  }
  report.kept = static_cast<int>(sigma_.size());

  pool_.clear();
  for (int e : cheap_) {
    if (!sigma_.Contains(e)) pool_.push_back(e);
  }
  return report;
}

std::int64_t DynamicEngine::ComplementWorstCase() const {
  if (expensive_.size() >= 62) return std::numeric_limits<std::int64_t>::max();
  return (std::int64_t{1} << expensive_.size()) - 1;
}

void DynamicEngine::SearchComplement() {
  complement_ = ComplementSearch(oracle_, inst_.constraints, expensive_);
}

double DynamicEngine::BestValue() const {
  double best = sigma_.value();
  if (vstar_.element >= 0) best = std::max(best, vstar_.value);
  if (complement_) best = std::max(best, complement_->value);
  return best;
}

SolveResult DynamicEngine::Finalize() {
  RunToCompletion();
  if (!complement_) SearchComplement();
  SolveResult out = PickBest(sigma_, vstar_, *complement_);
  out.oracle_calls = oracle_.calls();
  return out;
}

}  // namespace knapgreedy
