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
// Stepwise lambda-greedy that survives knapsack weight changes.
//
// The engine runs the same greedy iteration as the static solver, one step at
// a time. When new weights arrive it pops the most recently added elements of
// the greedy stack until what is left is (a) no longer than the chi value of
// both the old and the new weights and (b) made only of elements that are
// cheap under both. Greedy steps then resume from that prefix instead of from
// scratch.
//
// Reduction (dropping elements that violate a knapsack alone) is applied per
// weight vector: such elements are filtered out of every candidate set and
// reported, the instance itself is never rebuilt.
//

#ifndef KNAPGREEDY_DYNAMIC_H_
#define KNAPGREEDY_DYNAMIC_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "knapgreedy/core.h"
#include "knapgreedy/solver.h"

namespace knapgreedy {

enum class Phase { kGreedy, kFinished };

// New budgets that become visible once `at_call` oracle calls have been spent.
struct WeightUpdate {
  std::int64_t at_call = 0;
  std::vector<double> weights;
};

struct UpdateReport {
  ElementSet popped;     // in pop order, most recent first
  int chi_old = 0;       // chi under the previous weights
  int chi_new = 0;       // chi under the new weights
  int t_star = 0;        // longest prefix of sigma cheap under both weights
  int kept = 0;          // |sigma| after popping
  ElementSet filtered;   // elements that no longer fit a knapsack alone
};

class DynamicEngine {
 public:
  // Validates `inst`, evaluates the singletons that fit (the v* scan), and
  // sets up an empty greedy stack over the cheap set. Throws
  // EmptyAfterReduction if no element fits the initial weights.
  DynamicEngine(Instance inst, Lambda lambda);

  Phase phase() const { return pool_.empty() ? Phase::kFinished : Phase::kGreedy; }
  bool finished() const { return pool_.empty(); }

  const Instance& instance() const { return inst_; }
  const Solution& sigma() const { return sigma_; }
  const std::vector<int>& pool() const { return pool_; }
  const ElementSet& cheap() const { return cheap_; }
  const ElementSet& expensive() const { return expensive_; }
  const ElementSet& admissible() const { return admissible_; }
  std::span<const double> weights() const { return inst_.constraints.weights; }
  const SingletonBest& vstar() const { return vstar_; }
  std::int64_t oracle_calls() const { return oracle_.calls(); }

  // One greedy iteration. Requires phase() == kGreedy.
  StepOutcome Step();

  // Steps until the pool is empty.
  void RunToCompletion();

  // The update rule. Allowed in any phase; leaves the engine in kGreedy
  // unless nothing is left to consider.
  UpdateReport ApplyWeights(std::vector<double> weights);

  // Exhaustive search over the expensive elements under the current weights.
  void SearchComplement();
  bool complement_searched() const { return complement_.has_value(); }
  // Upper bound on the oracle calls SearchComplement() may spend.
  std::int64_t ComplementWorstCase() const;

  // Best feasible value known right now: f(sigma), f(v*) and, once searched,
  // the complement optimum.
  double BestValue() const;

  // Completes the greedy phase if needed, searches the complement under the
  // current weights and returns the best of the three candidates.
  // oracle_calls counts everything the engine spent since construction.
  SolveResult Finalize();

 private:
  void Rebuild();  // admissible, cheap, expensive, v* for the current weights

  Instance inst_;
  Lambda lambda_;
  Oracle oracle_;
  std::vector<double> singleton_value_;
  std::vector<char> singleton_known_;
  ElementSet admissible_;
  ElementSet cheap_;
  ElementSet expensive_;
  std::vector<int> pool_;
  Solution sigma_;
  SingletonBest vstar_;
  std::optional<ComplementResult> complement_;
};

}  // namespace knapgreedy

#endif  // KNAPGREEDY_DYNAMIC_H_
