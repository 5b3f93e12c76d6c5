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

#include "knapgreedy/core.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "knapgreedy/errors.h"

namespace knapgreedy {

double Marginal(const Objective& f, std::span<const int> s,
                std::span<const int> omega) {
  std::vector<int> joined(s.begin(), s.end());
  for (int e : omega) {
    if (std::find(s.begin(), s.end(), e) == s.end()) joined.push_back(e);
  }
  const double with = f.Value(joined);
  return with - f.Value(s);
}

double KnapsackConstraints::MaxCost(int e) const {
  double m = 0.0;
  for (const auto& row : costs) m = std::max(m, row[e]);
  return m;
}

bool KnapsackConstraints::Fits(std::span<const double> cost_acc) const {
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (cost_acc[i] > weights[i] + kCostTolerance) return false;
  }
  return true;
}

bool KnapsackConstraints::SingletonFits(int e) const {
  for (int i = 0; i < k(); ++i) {
    if (costs[i][e] > weights[i] + kCostTolerance) return false;
  }
  return true;
}

std::vector<double> KnapsackConstraints::Totals() const {
  std::vector<double> totals(k(), 0.0);
  for (int i = 0; i < k(); ++i) {
    for (double c : costs[i]) totals[i] += c;
  }
  return totals;
}

std::vector<double> SetCost(const KnapsackConstraints& cons,
                            std::span<const int> set) {
  std::vector<double> acc(cons.k(), 0.0);
  for (int i = 0; i < cons.k(); ++i) {
    for (int e : set) acc[i] += cons.costs[i][e];
  }
  return acc;
}

bool IsFeasible(const KnapsackConstraints& cons, std::span<const int> set) {
  return cons.Fits(SetCost(cons, set));
}

std::string Violation::Message() const {
  std::ostringstream out;
  out << what;
  if (element >= 0) out << " (element " << element << ")";
  if (knapsack >= 0) out << " (knapsack " << knapsack << ")";
  return out.str();
}

std::optional<Violation> Validate(const Instance& inst) {
  const auto& cons = inst.constraints;
  if (inst.n < 1) return Violation{"empty ground set"};
  if (cons.k() < 1) return Violation{"no knapsacks"};
  if (static_cast<int>(cons.weights.size()) != cons.k()) {
    return Violation{"dimension mismatch: weights"};
  }
  for (int i = 0; i < cons.k(); ++i) {
    if (static_cast<int>(cons.costs[i].size()) != inst.n) {
      return Violation{"dimension mismatch", -1, i};
    }
  }
  if (inst.objective == nullptr) return Violation{"missing objective"};
  if (inst.objective->size() != inst.n) {
    return Violation{"dimension mismatch: objective"};
  }
  for (int i = 0; i < cons.k(); ++i) {
    if (!(cons.weights[i] >= 0.0) || !std::isfinite(cons.weights[i])) {
      return Violation{"negative weight", -1, i};
    }
    for (int e = 0; e < inst.n; ++e) {
      if (!(cons.costs[i][e] >= 0.0) || !std::isfinite(cons.costs[i][e])) {
        return Violation{"negative cost", e, i};
      }
    }
  }
  for (int e = 0; e < inst.n; ++e) {
    if (!(cons.MaxCost(e) > 0.0)) return Violation{"zero max-cost element", e};
  }
  return std::nullopt;
}

void ValidateOrThrow(const Instance& inst) {
  if (auto v = Validate(inst)) throw InvalidInstance(v->Message());
}

Reduction Reduce(const Instance& inst) {
  std::vector<int> keep;
  ElementSet removed;
  for (int e = 0; e < inst.n; ++e) {
    if (inst.constraints.SingletonFits(e)) {
      keep.push_back(e);
    } else {
      removed.push_back(e);
    }
  }
  if (keep.empty()) throw EmptyAfterReduction();

  Reduction out;
  out.removed = std::move(removed);
  Instance& r = out.instance;
  r.n = static_cast<int>(keep.size());
  r.constraints.weights = inst.constraints.weights;
  for (const auto& row : inst.constraints.costs) {
    std::vector<double> sub;
    sub.reserve(keep.size());
    for (int e : keep) sub.push_back(row[e]);
    r.constraints.costs.push_back(std::move(sub));
  }
  if (out.removed.empty()) {
    r.objective = inst.objective;
  } else {
    r.objective = std::make_shared<RestrictedObjective>(inst.objective, keep);
    r.origin = std::move(keep);
  }
  return out;
}

RestrictedObjective::RestrictedObjective(std::shared_ptr<const Objective> parent,
                                         std::vector<int> keep)
    : Objective(static_cast<int>(keep.size())),
      parent_(std::move(parent)),
      keep_(std::move(keep)) {}

double RestrictedObjective::Evaluate(std::span<const int> set) const {
  std::vector<int> mapped;
  mapped.reserve(set.size());
  for (int e : set) mapped.push_back(keep_[e]);
  return parent_->Value(mapped);
}

Solution::Solution(int k)
    : cost_stack_{std::vector<double>(k, 0.0)}, value_stack_{0.0} {}

bool Solution::Contains(int e) const {
  return std::find(order_.begin(), order_.end(), e) != order_.end();
}

std::vector<double> Solution::CostWith(const KnapsackConstraints& cons,
                                       int e) const {
  std::vector<double> acc = cost_stack_.back();
  for (int i = 0; i < cons.k(); ++i) acc[i] += cons.costs[i][e];
  return acc;
}

void Solution::Append(const KnapsackConstraints& cons, int e,
                      double new_value) {
  cost_stack_.push_back(CostWith(cons, e));
  value_stack_.push_back(new_value);
  order_.push_back(e);
}

int Solution::PopBack() {
  const int e = order_.back();
  order_.pop_back();
  cost_stack_.pop_back();
  value_stack_.pop_back();
  return e;
}

}  // namespace knapgreedy
