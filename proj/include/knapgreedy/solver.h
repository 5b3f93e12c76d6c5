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
// Static lambda-greedy for submodular maximization under k knapsacks.
//
// Elements whose every cost is at most lambda * W_j / k are "cheap" and fed to
// a density greedy (marginal gain over max_j c_j(e)). The remaining
// "expensive" elements are searched exhaustively. The answer is the best of
// the greedy set, the best feasible singleton and the best expensive subset.
//

#ifndef KNAPGREEDY_SOLVER_H_
#define KNAPGREEDY_SOLVER_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "knapgreedy/core.h"

namespace knapgreedy {

// Trade-off parameter in [1, k]. Smaller values shrink the cheap set, making
// the guarantee stronger and the exhaustive part more expensive.
class Lambda {
 public:
  // Throws InvalidInstance("lambda out of [1,k]").
  Lambda(double value, int k);

  double value() const { return value_; }

 private:
  double value_;
};

// Largest j such that any j elements fit every knapsack: per knapsack, the
// longest prefix of the descending-sorted costs within budget; then the
// minimum over knapsacks.
int Chi(const KnapsackConstraints& cons);

// Same, over a subset of the ground set only.
int Chi(const KnapsackConstraints& cons, std::span<const int> elements);

struct Partition {
  ElementSet cheap;      // c_j(e) <= lambda * W_j / k for all j
  ElementSet expensive;  // some j with c_j(e) > lambda * W_j / k
};

Partition PartitionByLambda(const KnapsackConstraints& cons, Lambda lambda);

// Partition of `elements` (ascending) only.
Partition PartitionByLambda(const KnapsackConstraints& cons, Lambda lambda,
                            std::span<const int> elements);

struct StepOutcome {
  int element = -1;
  double gain = 0.0;
  bool appended = false;
};

// One greedy iteration: takes the pool element of highest density (lowest
// index on ties), removes it from the pool, and appends it to `sigma` if the
// result stays feasible and the marginal gain is nonnegative. Costs one
// oracle call per pool element. `pool` must be ascending and nonempty.
StepOutcome GreedyStep(Oracle& oracle, const KnapsackConstraints& cons,
                       Solution& sigma, std::vector<int>& pool);

// Runs GreedyStep from the empty set over part.cheap until the pool is empty.
Solution GreedyPhase(Oracle& oracle, const KnapsackConstraints& cons,
                     const Partition& part);

inline constexpr std::size_t kComplementAdvisoryCap = 25;

struct ComplementResult {
  ElementSet set;
  double value = 0.0;
  bool over_cap = false;  // more expensive elements than the advisory cap
};

// Exact best feasible subset of `expensive` by depth-first enumeration in
// index order. A branch is abandoned as soon as a knapsack overflows. The
// empty set (value 0) is never evaluated. Ties keep the first set found.
ComplementResult ComplementSearch(Oracle& oracle,
                                  const KnapsackConstraints& cons,
                                  std::span<const int> expensive,
                                  std::size_t cap = kComplementAdvisoryCap);

struct SingletonBest {
  int element = -1;  // -1 when there were no candidates
  double value = 0.0;
};

// argmax_e f({e}) over `candidates`, lowest index on ties.
SingletonBest BestSingleton(Oracle& oracle, std::span<const int> candidates);

enum class Choice { kGreedySigma, kSingletonVStar, kComplementSet };

std::string_view ChoiceName(Choice which);

struct SolveResult {
  ElementSet chosen;        // ascending
  double value = 0.0;
  Choice which = Choice::kGreedySigma;
  ElementSet greedy_order;  // insertion order of the greedy set
  std::int64_t oracle_calls = 0;
  bool complement_over_cap = false;
};

// Best of the three candidates; ties resolve to the greedy set, then v*,
// then the complement set.
SolveResult PickBest(const Solution& sigma, const SingletonBest& vstar,
                     const ComplementResult& complement);

// Validates and reduces `inst`, then runs the full algorithm. Indices in the
// result refer to `inst`. Throws EmptyAfterReduction if no element fits.
SolveResult LambdaGreedy(const Instance& inst, Lambda lambda);

}  // namespace knapgreedy

#endif  // KNAPGREEDY_SOLVER_H_
