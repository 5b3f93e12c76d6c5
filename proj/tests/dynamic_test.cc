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

#include <gtest/gtest.h>

#include <algorithm>
#include <memory>
#include <random>
#include <vector>

#include "knapgreedy/errors.h"
#include "knapgreedy/objectives.h"
#include "knapgreedy/oracle.h"
#include "test_util.h"

namespace knapgreedy {
namespace {

using ::knapgreedy::testing::Family;
using ::knapgreedy::testing::MakeInstance;

Instance Roostapour(double w) {
  KnapsackConstraints cons{{{1, 1, 2, 2, 1}}, {w}};
  return MakeInstance(cons, std::make_shared<ModularObjective>(
                                std::vector<double>{0.25, 0.25, 1, 1, 3}));
}

// Backtrack only until the set is feasible again, then keep adding from the
// remaining elements. Kept here to show why the engine pops harder.
std::vector<int> NaiveBacktrack(const Objective& f,
                                const KnapsackConstraints& new_cons,
                                std::vector<int> sigma) {
  while (!testing::NaiveFeasible(new_cons, sigma)) sigma.pop_back();
  std::vector<int> rest;
  for (int e = 0; e < new_cons.n(); ++e) {
    if (std::find(sigma.begin(), sigma.end(), e) == sigma.end() &&
        new_cons.SingletonFits(e)) {
      rest.push_back(e);
    }
  }
  // Continue the density greedy from the current set.
  while (!rest.empty()) {
    const double base = f.Value(sigma);
    std::size_t best = 0;
    double best_density = -1e300, best_gain = 0.0;
    for (std::size_t p = 0; p < rest.size(); ++p) {
      std::vector<int> with = sigma;
      with.push_back(rest[p]);
      const double gain = f.Value(with) - base;
      const double density = gain / new_cons.MaxCost(rest[p]);
      if (density > best_density) {
        best_density = density;
        best_gain = gain;
        best = p;
      }
    }
    std::vector<int> with = sigma;
    with.push_back(rest[best]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
    if (best_gain >= 0 && testing::NaiveFeasible(new_cons, with)) sigma = with;
  }
  return sigma;
}

TEST(DynamicEngineTest, InitRoostapour) {
  DynamicEngine engine(Roostapour(2), Lambda(1, 1));
  EXPECT_TRUE(engine.sigma().empty());
  EXPECT_EQ(engine.pool(), (std::vector<int>{0, 1, 2, 3, 4}));
  EXPECT_EQ(engine.phase(), Phase::kGreedy);
  EXPECT_EQ(engine.oracle_calls(), 5);  // the v* scan
  EXPECT_EQ(engine.vstar().element, 4);
}

TEST(DynamicEngineTest, EmptyCheapSetFinishesImmediately) {
  KnapsackConstraints cons{{{3, 3}, {1, 1}}, {4, 4}};
  const auto f = std::make_shared<ModularObjective>(std::vector<double>{1, 2});
  DynamicEngine engine(MakeInstance(cons, f), Lambda(1, 2));
  EXPECT_TRUE(engine.finished());
  EXPECT_EQ(engine.expensive(), (ElementSet{0, 1}));
  EXPECT_THROW(engine.Step(), std::logic_error);
}

TEST(DynamicEngineTest, NothingFitsAtStart) {
  KnapsackConstraints cons{{{3, 3}}, {1}};
  const auto f = std::make_shared<ModularObjective>(std::vector<double>{1, 2});
  EXPECT_THROW(DynamicEngine(MakeInstance(cons, f), Lambda(1, 1)),
               EmptyAfterReduction);
}

TEST(DynamicEngineTest, RoostapourSteps) {
  DynamicEngine engine(Roostapour(2), Lambda(1, 1));
  StepOutcome s = engine.Step();
  EXPECT_EQ(s.element, 4);
  EXPECT_TRUE(s.appended);
  EXPECT_DOUBLE_EQ(s.gain, 3.0);
  s = engine.Step();
  EXPECT_EQ(s.element, 2);
  EXPECT_FALSE(s.appended);
  s = engine.Step();
  EXPECT_EQ(s.element, 3);
  EXPECT_FALSE(s.appended);
  s = engine.Step();
  EXPECT_EQ(s.element, 0);
  EXPECT_TRUE(s.appended);
  engine.RunToCompletion();
  EXPECT_EQ(engine.sigma().order(), (std::vector<int>{4, 0}));
  EXPECT_EQ(engine.phase(), Phase::kFinished);
}

TEST(DynamicEngineTest, NegativeMarginalLeavesSigmaUnchanged) {
  KnapsackConstraints cons{{{1, 1}}, {2}};
  const auto obj = std::make_shared<DirectedCutObjective>(
      2, std::vector<Arc>{{0, 1, 1.0}});
  DynamicEngine engine(MakeInstance(cons, obj), Lambda(1, 1));
  engine.Step();  // takes 0
  ASSERT_EQ(engine.pool(), (std::vector<int>{1}));
  const StepOutcome s = engine.Step();
  EXPECT_EQ(s.element, 1);
  EXPECT_FALSE(s.appended);
  EXPECT_LT(s.gain, 0.0);
  EXPECT_EQ(engine.sigma().order(), (std::vector<int>{0}));
  EXPECT_TRUE(engine.finished());
}

TEST(DynamicEngineTest, RoostapourUpdateReachesFour) {
  DynamicEngine engine(Roostapour(2), Lambda(1, 1));
  engine.RunToCompletion();
  const UpdateReport report = engine.ApplyWeights({3});
  EXPECT_EQ(report.chi_old, 1);
  EXPECT_EQ(report.chi_new, 1);
  EXPECT_EQ(report.popped, (ElementSet{0}));
  EXPECT_EQ(engine.sigma().order(), (std::vector<int>{4}));
  EXPECT_EQ(engine.pool(), (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(engine.phase(), Phase::kGreedy);
  const StepOutcome s = engine.Step();
  EXPECT_EQ(s.element, 2);
  EXPECT_TRUE(s.appended);
  const SolveResult r = engine.Finalize();
  EXPECT_EQ(r.value, 4.0);
  EXPECT_EQ(r.chosen, (ElementSet{2, 4}));
  EXPECT_EQ(r.value, BruteForceOpt(Roostapour(3)).value);
}

TEST(DynamicEngineTest, NaiveBacktrackingFallsShort) {
  const Instance inst = Roostapour(2);
  const SolveResult before = LambdaGreedy(inst, Lambda(1, 1));
  const std::vector<int> naive =
      NaiveBacktrack(*inst.objective, Roostapour(3).constraints, before.greedy_order);
  EXPECT_EQ(inst.objective->Value(naive), 3.5);  // 3 + 2/n with n = 4
  DynamicEngine engine(inst, Lambda(1, 1));
  engine.RunToCompletion();
  engine.ApplyWeights({3});
  EXPECT_GT(engine.Finalize().value, inst.objective->Value(naive));
}

TEST(DynamicEngineTest, SameWeightsPopOnlyBeyondChi) {
  // Unit costs, W = 3: chi = 3, the full greedy set has 3 elements.
  KnapsackConstraints cons{{std::vector<double>(5, 1.0)}, {3}};
  const auto f = std::make_shared<ModularObjective>(std::vector<double>{1, 2, 3, 4, 5});
  DynamicEngine engine(MakeInstance(cons, f), Lambda(1, 1));
  engine.RunToCompletion();
  EXPECT_TRUE(engine.ApplyWeights({3}).popped.empty());

  // Roostapour costs with W = 2: chi = 1, so the second element goes.
  DynamicEngine other(Roostapour(2), Lambda(1, 1));
  other.RunToCompletion();
  const UpdateReport r = other.ApplyWeights({2});
  EXPECT_EQ(r.popped, (ElementSet{0}));
  EXPECT_EQ(other.sigma().order(), (std::vector<int>{4}));
}

TEST(DynamicEngineTest, ShrinkingCheapSetEmptiesStack) {
  // k = 1, lambda = 1: cheap = fits alone. Unit-ish costs so chi is large.
  // sigma = (2, 1, 0) by value; the update makes element 2 too big, so the
  // stack has to unwind through everything above it as well.
  KnapsackConstraints cons{{{1, 1, 1.5, 1}}, {4}};
  const auto f = std::make_shared<ModularObjective>(std::vector<double>{1, 2, 9, 0.5});
  DynamicEngine engine(MakeInstance(cons, f), Lambda(1, 1));
  engine.RunToCompletion();
  ASSERT_EQ(engine.sigma().order(), (std::vector<int>{2, 1, 0}));
  const UpdateReport r = engine.ApplyWeights({1.2});
  // Hand simulation: chi(W=4) over {0..3} = 3, chi(W'=1.2) over {0,1,3} = 1;
  // 2 is no longer cheap, so every pop is forced until sigma is empty.
  EXPECT_EQ(r.chi_old, 3);
  EXPECT_EQ(r.chi_new, 1);
  EXPECT_EQ(r.t_star, 0);
  EXPECT_EQ(r.popped, (ElementSet{0, 1, 2}));
  EXPECT_EQ(r.filtered, (ElementSet{2}));
  EXPECT_TRUE(engine.sigma().empty());
  EXPECT_EQ(engine.pool(), (std::vector<int>{0, 1, 3}));
  engine.RunToCompletion();
  EXPECT_EQ(engine.sigma().order(), (std::vector<int>{1}));
}

TEST(DynamicEngineTest, UpdateFilteringEverythingDoesNotThrow) {
  DynamicEngine engine(Roostapour(2), Lambda(1, 1));
  engine.RunToCompletion();
  const UpdateReport r = engine.ApplyWeights({0.5});
  EXPECT_EQ(r.filtered.size(), 5u);
  EXPECT_TRUE(engine.sigma().empty());
  EXPECT_TRUE(engine.finished());
  EXPECT_EQ(engine.vstar().element, -1);
  EXPECT_DOUBLE_EQ(engine.Finalize().value, 0.0);
  engine.ApplyWeights({2});
  EXPECT_DOUBLE_EQ(engine.Finalize().value, 3.25);
}

TEST(DynamicEngineTest, RejectsMalformedWeights) {
  DynamicEngine engine(Roostapour(2), Lambda(1, 1));
  EXPECT_THROW(engine.ApplyWeights({1, 2}), InvalidInstance);
  EXPECT_THROW(engine.ApplyWeights({-1}), InvalidInstance);
}

TEST(DynamicEngineTest, NoUpdatesMatchesStaticSolver) {
  std::mt19937_64 rng(201);
  for (Family family : testing::kAllFamilies) {
    for (int trial = 0; trial < 25; ++trial) {
      const int n = testing::UniformInt(rng, 2, 10);
      const int k = testing::UniformInt(rng, 1, 3);
      const auto f = testing::RandomObjective(rng, family, n);
      const Instance inst = MakeInstance(testing::RandomConstraints(rng, n, k), f);
      const Lambda lambda(testing::Uniform(rng, 1.0, k), k);
      SolveResult expected;
      try {
        expected = LambdaGreedy(inst, lambda);
      } catch (const EmptyAfterReduction&) {
        EXPECT_THROW(DynamicEngine(inst, lambda), EmptyAfterReduction);
        continue;
      }
      DynamicEngine engine(inst, lambda);
      const SolveResult got = engine.Finalize();
      EXPECT_EQ(got.chosen, expected.chosen);
      EXPECT_EQ(got.greedy_order, expected.greedy_order);
      EXPECT_EQ(got.value, expected.value);
      EXPECT_EQ(got.which, expected.which);
      EXPECT_EQ(got.oracle_calls, expected.oracle_calls);
    }
  }
}

TEST(DynamicEngineTest, ExpensiveEmptyMeansSigmaOrSingleton) {
  std::mt19937_64 rng(211);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = testing::UniformInt(rng, 2, 8);
    const auto f = testing::RandomObjective(rng, Family::kCut, n);
    const Instance inst = MakeInstance(testing::RandomConstraints(rng, n, 1), f);
    try {
      DynamicEngine engine(inst, Lambda(1, 1));
      ASSERT_TRUE(engine.expensive().empty());
      const SolveResult r = engine.Finalize();
      EXPECT_EQ(r.value, std::max(engine.sigma().value(), engine.vstar().value));
    } catch (const EmptyAfterReduction&) {
    }
  }
}

TEST(DynamicEngineTest, StackStaysFeasibleAndCostsExact) {
  std::mt19937_64 rng(221);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = testing::UniformInt(rng, 3, 10);
    const int k = testing::UniformInt(rng, 1, 3);
    const auto f = testing::RandomObjective(rng, Family::kModular, n);
    auto cons = testing::RandomConstraints(rng, n, k);
    try {
      DynamicEngine engine(MakeInstance(cons, f), Lambda(1, k));
      for (int round = 0; round < 4; ++round) {
        const int steps = testing::UniformInt(rng, 0, n);
        for (int s = 0; s < steps && !engine.finished(); ++s) engine.Step();
        std::vector<double> w = cons.weights;
        for (double& x : w) x *= testing::Uniform(rng, 0.5, 1.5);
        const std::vector<int> before = engine.sigma().order();
        const UpdateReport r = engine.ApplyWeights(w);
        // Pops are the tail of the old stack, most recent first.
        std::vector<int> rebuilt = engine.sigma().order();
        for (auto it = r.popped.rbegin(); it != r.popped.rend(); ++it) {
          rebuilt.push_back(*it);
        }
        EXPECT_EQ(rebuilt, before);
        EXPECT_LE(r.kept, std::min(r.chi_old, r.chi_new));
        EXPECT_LE(r.kept, r.t_star);
        const auto fresh = SetCost(engine.instance().constraints,
                                   engine.sigma().order());
        for (int i = 0; i < k; ++i) {
          EXPECT_NEAR(engine.sigma().cost_acc()[i], fresh[i], 1e-9);
        }
        EXPECT_TRUE(testing::NaiveFeasible(engine.instance().constraints,
                                           engine.sigma().order()));
      }
    } catch (const EmptyAfterReduction&) {
    }
  }
}

}  // namespace
}  // namespace knapgreedy
