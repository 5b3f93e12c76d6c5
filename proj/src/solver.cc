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

#include "knapgreedy/solver.h"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>

#include "knapgreedy/errors.h"

namespace knapgreedy {

Lambda::Lambda(double value, int k) : value_(value) {
  if (!(value >= 1.0 && value <= static_cast<double>(k))) {
    throw InvalidInstance("lambda out of [1,k]");
  }
}

int Chi(const KnapsackConstraints& cons, std::span<const int> elements) {
  int chi = static_cast<int>(elements.size());
  std::vector<double> column;
  for (int i = 0; i < cons.k(); ++i) {
    column.clear();
    for (int e : elements) column.push_back(cons.costs[i][e]);
    std::sort(column.begin(), column.end(), std::greater<>());
    double prefix = 0.0;
    int j = 0;
    for (double c : column) {
      prefix += c;
      if (prefix > cons.weights[i] + kCostTolerance) break;
      ++j;
    }
    chi = std::min(chi, j);
  }
  return chi;
}

int Chi(const KnapsackConstraints& cons) {
  std::vector<int> all(cons.n());
  std::iota(all.begin(), all.end(), 0);
  return Chi(cons, all);
}

Partition PartitionByLambda(const KnapsackConstraints& cons, Lambda lambda,
                            std::span<const int> elements) {
  const double scale = lambda.value() / static_cast<double>(cons.k());
  Partition part;
  for (int e : elements) {
    bool cheap = true;
    for (int j = 0; j < cons.k(); ++j) {
      if (cons.costs[j][e] > scale * cons.weights[j] + kCostTolerance) {
        cheap = false;
        break;
      }
    }
    (cheap ? part.cheap : part.expensive).push_back(e);
  }
  return part;
}

Partition PartitionByLambda(const KnapsackConstraints& cons, Lambda lambda) {
  std::vector<int> all(cons.n());
  std::iota(all.begin(), all.end(), 0);
  return PartitionByLambda(cons, lambda, all);
}

StepOutcome GreedyStep(Oracle& oracle, const KnapsackConstraints& cons,
                       Solution& sigma, std::vector<int>& pool) {
  std::vector<int> probe = sigma.order();
  probe.push_back(-1);
  const double base = sigma.value();

  std::size_t best_pos = 0;
  double best_density = -std::numeric_limits<double>::infinity();
  double best_value = 0.0;
  for (std::size_t p = 0; p < pool.size(); ++p) {
    const int e = pool[p];
    probe.back() = e;
    const double value = oracle(probe);
    const double density = (value - base) / cons.MaxCost(e);
    if (density > best_density) {
      best_density = density;
      best_pos = p;
      best_value = value;
    }
  }

  StepOutcome out;
  out.element = pool[best_pos];
  out.gain = best_value - base;
  pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(best_pos));
  // A negative gain is skipped like an infeasible element.
  if (out.gain >= 0.0 && cons.Fits(sigma.CostWith(cons, out.element))) {
    sigma.Append(cons, out.element, best_value);
    out.appended = true;
  }
  return out;
}

Solution GreedyPhase(Oracle& oracle, const KnapsackConstraints& cons,
                     const Partition& part) {
  Solution sigma(cons.k());
  std::vector<int> pool = part.cheap;
  while (!pool.empty()) GreedyStep(oracle, cons, sigma, pool);
  return sigma;
}

namespace {

class ComplementEnumerator {
 public:
  ComplementEnumerator(Oracle& oracle, const KnapsackConstraints& cons,
                       std::span<const int> items)
      : oracle_(oracle), cons_(cons), items_(items), acc_(cons.k(), 0.0) {}

  ComplementResult Run() {
    Descend(0);
    return best_;
  }

 private:
  void Descend(std::size_t from) {
    for (std::size_t p = from; p < items_.size(); ++p) {
      const int e = items_[p];
      bool fits = true;
      for (int i = 0; i < cons_.k(); ++i) {
        if (acc_[i] + cons_.costs[i][e] > cons_.weights[i] + kCostTolerance) {
          fits = false;
          break;
        }
      }
      if (!fits) continue;
      for (int i = 0; i < cons_.k(); ++i) acc_[i] += cons_.costs[i][e];
      current_.push_back(e);
      const double value = oracle_(current_);
      if (value > best_.value) {
        best_.value = value;
        best_.set = current_;
      }
      Descend(p + 1);
      current_.pop_back();
      for (int i = 0; i < cons_.k(); ++i) acc_[i] -= cons_.costs[i][e];
    }
  }

  Oracle& oracle_;
  const KnapsackConstraints& cons_;
  std::span<const int> items_;
  std::vector<double> acc_;
  std::vector<int> current_;
  ComplementResult best_;
};

}  // namespace

ComplementResult ComplementSearch(Oracle& oracle,
                                  const KnapsackConstraints& cons,
                                  std::span<const int> expensive,
                                  std::size_t cap) {
  ComplementResult result = ComplementEnumerator(oracle, cons, expensive).Run();
  result.over_cap = expensive.size() > cap;
  return result;
}

SingletonBest BestSingleton(Oracle& oracle, std::span<const int> candidates) {
  SingletonBest best;
  for (int e : candidates) {
    const int one[] = {e};
    const double value = oracle(one);
    if (best.element < 0 || value > best.value) {
      best.element = e;
      best.value = value;
    }
  }
  return best;
}

std::string_view ChoiceName(Choice which) {
  switch (which) {
    case Choice::kGreedySigma:
      return "greedy-sigma";
    case Choice::kSingletonVStar:
      return "singleton-vstar";
    case Choice::kComplementSet:
      return "complement-set";
  }
  return "unknown";
}

SolveResult PickBest(const Solution& sigma, const SingletonBest& vstar,
                     const ComplementResult& complement) {
  SolveResult out;
  out.greedy_order = sigma.order();
  out.complement_over_cap = complement.over_cap;
  out.chosen = sigma.order();
  out.value = sigma.value();
  out.which = Choice::kGreedySigma;
  if (vstar.element >= 0 && vstar.value > out.value) {
    out.chosen = {vstar.element};
    out.value = vstar.value;
    out.which = Choice::kSingletonVStar;
  }
  if (complement.value > out.value) {
    out.chosen = complement.set;
    out.value = complement.value;
    out.which = Choice::kComplementSet;
  }
  std::sort(out.chosen.begin(), out.chosen.end());
  return out;
}

SolveResult LambdaGreedy(const Instance& inst, Lambda lambda) {
  ValidateOrThrow(inst);
  const Reduction reduced = Reduce(inst);
  const Instance& r = reduced.instance;

  Oracle oracle(*r.objective);
  std::vector<int> all(r.n);
  std::iota(all.begin(), all.end(), 0);
  const SingletonBest vstar = BestSingleton(oracle, all);
  const Partition part = PartitionByLambda(r.constraints, lambda);
  const Solution sigma = GreedyPhase(oracle, r.constraints, part);
  const ComplementResult complement =
      ComplementSearch(oracle, r.constraints, part.expensive);

  SolveResult out = PickBest(sigma, vstar, complement);
  out.oracle_calls = oracle.calls();
  for (int& e : out.chosen) e = r.OriginalIndex(e);
  for (int& e : out.greedy_order) e = r.OriginalIndex(e);
  return out;
}

}  // namespace knapgreedy
