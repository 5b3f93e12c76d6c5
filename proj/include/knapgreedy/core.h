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
// Domain model: ground set, knapsack constraints, value oracles, solutions.
//
// Elements are dense indices 0..n-1. Every tie anywhere in the library is
// broken towards the lowest index, so runs are reproducible.

#ifndef KNAPGREEDY_CORE_H_
#define KNAPGREEDY_CORE_H_

#include <atomic>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace knapgreedy {

using ElementSet = std::vector<int>;

// Feasible iff c_i(S) <= W_i + kCostTolerance for every knapsack i.
inline constexpr double kCostTolerance = 1e-9;

// A set function f: 2^V -> R with f(empty) = 0.
//
// Value() counts every invocation; subclasses implement Evaluate(). The
// counter is the only mutable state and is safe to bump from several threads.
class Objective {
 public:
  explicit Objective(int n) : n_(n) {}
  virtual ~Objective() = default;

  Objective(const Objective&) = delete;
  Objective& operator=(const Objective&) = delete;

  // Ground set size.
  int size() const { return n_; }

  // f(set). Indices may come in any order but must be distinct.
  double Value(std::span<const int> set) const {
    eval_count_.fetch_add(1, std::memory_order_relaxed);
    if (set.empty()) return 0.0;
    return Evaluate(set);
  }

  std::int64_t eval_count() const {
    return eval_count_.load(std::memory_order_relaxed);
  }

  virtual std::string_view kind() const = 0;

 protected:
  // Called with a nonempty set only.
  virtual double Evaluate(std::span<const int> set) const = 0;

 private:
  int n_;
  mutable std::atomic<std::int64_t> eval_count_{0};
};

// Per-run accounting wrapper. Each call is forwarded to the objective, so the
// objective's own counter advances in lockstep.
class Oracle {
 public:
  explicit Oracle(const Objective& f) : f_(&f) {}

  double operator()(std::span<const int> set) {
    ++calls_;
    return f_->Value(set);
  }

  std::int64_t calls() const { return calls_; }
  const Objective& objective() const { return *f_; }

 private:
  const Objective* f_;
  std::int64_t calls_ = 0;
};

// f_S(Omega) = f(S u Omega) - f(S). Always two oracle calls.
double Marginal(const Objective& f, std::span<const int> s,
                std::span<const int> omega);

// k linear cost functions with budgets. costs[i][e] = c_i(e).
struct KnapsackConstraints {
  std::vector<std::vector<double>> costs;
  std::vector<double> weights;

  int k() const { return static_cast<int>(costs.size()); }
  int n() const {
    return costs.empty() ? 0 : static_cast<int>(costs.front().size());
  }
  double cost(int i, int e) const { return costs[i][e]; }

  // max_j c_j(e), the density denominator of the greedy rule.
  double MaxCost(int e) const;

  // Component-wise cost_acc <= weights (with tolerance).
  bool Fits(std::span<const double> cost_acc) const;

  // {e} alone satisfies every knapsack.
  bool SingletonFits(int e) const;

  // Column sums c_i(V).
  std::vector<double> Totals() const;
};

// c_i(S) for every knapsack.
std::vector<double> SetCost(const KnapsackConstraints& cons,
                            std::span<const int> set);

bool IsFeasible(const KnapsackConstraints& cons, std::span<const int> set);

struct Instance {
  int n = 0;
  KnapsackConstraints constraints;
  std::shared_ptr<const Objective> objective;
  // origin[e] is e's index in the instance this one was reduced from. Empty
  // for instances that were never reduced.
  std::vector<int> origin;

  int OriginalIndex(int e) const { return origin.empty() ? e : origin[e]; }
};

struct Violation {
  std::string what;  // e.g. "zero max-cost element"
  int element = -1;
  int knapsack = -1;

  std::string Message() const;
};

// First violated invariant, or nullopt for a well-formed instance.
std::optional<Violation> Validate(const Instance& inst);

// Throws InvalidInstance carrying Violation::Message().
void ValidateOrThrow(const Instance& inst);

struct Reduction {
  Instance instance;
  // Indices (in the input instance) of elements that violate a knapsack alone.
  ElementSet removed;
};

// Drops every element e with c_i(e) > W_i for some i. The result re-indexes
// the survivors densely (order preserved) and evaluates the input objective
// through an index map. Throws EmptyAfterReduction if nothing survives.
Reduction Reduce(const Instance& inst);

// Objective seen through an index map: value(S) = parent(map(S)).
class RestrictedObjective : public Objective {
 public:
  RestrictedObjective(std::shared_ptr<const Objective> parent,
                      std::vector<int> keep);

  std::string_view kind() const override { return "restricted"; }
  const Objective& parent() const { return *parent_; }
  const std::vector<int>& keep() const { return keep_; }

 protected:
  double Evaluate(std::span<const int> set) const override;

 private:
  std::shared_ptr<const Objective> parent_;
  std::vector<int> keep_;
};

// Ordered selection with cached costs and value. Every prefix is remembered,
// so PopBack() restores the previous state exactly and without oracle calls.
class Solution {
 public:
  explicit Solution(int k);

  const std::vector<int>& order() const { return order_; }
  std::span<const double> cost_acc() const { return cost_stack_.back(); }
  double value() const { return value_stack_.back(); }
  std::size_t size() const { return order_.size(); }
  bool empty() const { return order_.empty(); }
  bool Contains(int e) const;

  // Costs of order() + {e}.
  std::vector<double> CostWith(const KnapsackConstraints& cons, int e) const;

  // new_value must be f(order() + {e}).
  void Append(const KnapsackConstraints& cons, int e, double new_value);

  // Removes and returns the most recently appended element.
  int PopBack();

 private:
  std::vector<int> order_;
  std::vector<std::vector<double>> cost_stack_;
  std::vector<double> value_stack_;
};

}  // namespace knapgreedy

#endif  // KNAPGREEDY_CORE_H_
