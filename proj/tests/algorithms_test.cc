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

#include <cmath>
#include <memory>
#include <random>

#include "consub/algorithms/chasing_local_opt.h"
#include "consub/algorithms/encompassing_set.h"
#include "consub/algorithms/min_swap.h"
#include "consub/algorithms/offline.h"
#include "consub/algorithms/registry.h"
#include "consub/algorithms/sieve_streaming.h"
#include "consub/algorithms/swapping.h"
#include "consub/errors.h"
#include "consub/oracles/modular.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace consub {
namespace {

using ::consub::testing::E;
using ::consub::testing::Iota;

TEST(EncompassingSetTest, AcceptsFirstElementOfValueZero) {
  const ModularOracle f({0.0, 3.0});
  EncompassingSet algo(f, 2);
  const StepRecord step = algo.Insert(E(0));
  EXPECT_EQ(algo.solution(), (ElementSet{E(0)}));
  EXPECT_EQ(step.additions, 1u);
}

TEST(EncompassingSetTest, RejectsBelowThreshold) {
  // Threshold for e2: (1.14 / 2) * 10 = 5.7 > 1.
  const ModularOracle f({10.0, 1.0});
  EncompassingSet algo(f, 2);
  algo.Insert(E(0));
  const StepRecord step = algo.Insert(E(1));
  EXPECT_EQ(algo.solution(), (ElementSet{E(0)}));
  EXPECT_EQ(algo.benchmark(), (ElementSet{E(0)}));
  EXPECT_EQ(step.additions, 0u);
  EXPECT_EQ(step.removals, 0u);
}

TEST(EncompassingSetTest, WindowEvictsOldest) {
  // Doubling weights are always accepted: gain 2^t >= (1.14/2)(2^t - 2).
  const ModularOracle f({2.0, 4.0, 8.0, 16.0});
  EncompassingSet algo(f, 2);
  for (ElementId e : Iota(4)) {
    const StepRecord step = algo.Insert(e);
    EXPECT_EQ(step.additions, 1u);
    EXPECT_LE(step.removals, 1u);
  }
  EXPECT_EQ(algo.solution()[0], E(2));
  EXPECT_EQ(algo.solution()[1], E(3));
  EXPECT_EQ(algo.benchmark().size(), 4u);
  EXPECT_EQ(algo.benchmark_value(), 30.0);
  EXPECT_EQ(algo.solution_value(), 24.0);
}

TEST(EncompassingSetTest, RejectsDuplicatesAndUnknownIds) {
  const ModularOracle f({1.0, 1.0});
  EncompassingSet algo(f, 1);
  algo.Insert(E(0));
  EXPECT_THROW(algo.Insert(E(0)), std::invalid_argument);
  EXPECT_THROW(algo.Insert(E(2)), std::invalid_argument);
}

TEST(EncompassingSetTest, MultiplierApproachesLimit) {
  // For large k the multiplier tends to (e^b - 1) / (e^b (1 + b)); at
  // b = 1.14 its reciprocal lies in [3.146, 3.147].
  const double b = 1.14;
  const double limit = (std::exp(b) - 1.0) / (std::exp(b) * (1.0 + b));
  EXPECT_NEAR(EncompassingSetMultiplier(b, 1000000), limit, 1e-6);
  EXPECT_GT(1.0 / limit, 3.146);
  EXPECT_LT(1.0 / limit, 3.147);
  // k = 1: ((1+b) - 1) / ((1+b)(1+b)).
  EXPECT_NEAR(EncompassingSetMultiplier(b, 1), b / ((1 + b) * (1 + b)), 1e-15);
}

TEST(MinSwapTest, BelowCapacityAppends) {
  const ModularOracle f({1.0});
  EXPECT_EQ(MinSwap(ElementSet{}, E(0), f, 2), (ElementSet{E(0)}));
}

TEST(MinSwapTest, EvictsSmallestMarginal) {
  const ModularOracle f({5.0, 1.0, 7.0});
  const ElementSet out = MinSwap(ElementSet{E(0), E(1)}, E(2), f, 2);
  EXPECT_EQ(out, (ElementSet{E(0), E(2)}));
  EXPECT_EQ(f.Eval(out), 12.0);
}

TEST(MinSwapTest, TiesEvictEarliestInserted) {
  const ModularOracle f({1.0, 1.0, 1.0, 1.0});
  const ElementSet out = MinSwap(ElementSet{E(2), E(0), E(1)}, E(3), f, 3);
  EXPECT_EQ(out, (ElementSet{E(0), E(1), E(3)}));
}

TEST(MinSwapTest, ReportsEvent) {
  const ModularOracle f({5.0, 1.0, 7.0});
  auto ev = f.NewEvaluator();
  ev->Add(E(0));
  ev->Add(E(1));
  const SwapEvent event = MinSwapInPlace(*ev, E(2), 2);
  EXPECT_EQ(event.removed, E(1));
  EXPECT_EQ(event.removed_loss, 1.0);
  EXPECT_LE(event.removed_loss, event.value_before / 2);
  EXPECT_EQ(event.value_after, 12.0);
  EXPECT_THROW(MinSwapInPlace(*ev, E(2), 2), std::invalid_argument);
}

TEST(ChasingLocalOptTest, SwapBudget) {
  // ceil(10 * log(120) / log(phi)) = ceil(99.49...) = 100.
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  EXPECT_EQ(SwapBudget(0.1), static_cast<std::size_t>(std::ceil(
                                 10.0 * std::log(120.0) / std::log(phi))));
  EXPECT_EQ(SwapBudget(0.1), 100u);
  EXPECT_EQ(GoldenRatio() * GoldenRatio(), GoldenRatio() + 1.0);
  EXPECT_THROW(SwapBudget(0.0), std::invalid_argument);
  EXPECT_THROW(SwapBudget(1.0), std::invalid_argument);
}

TEST(ChasingLocalOptTest, SingleElement) {
  const ModularOracle f({3.0});
  ChasingLocalOpt algo(f, 2);
  const StepRecord step = algo.Insert(E(0));
  EXPECT_EQ(algo.solution(), (ElementSet{E(0)}));
  EXPECT_EQ(step.additions, 1u);
  EXPECT_EQ(algo.consistency_bound(), 101u);
}

TEST(ChasingLocalOptTest, ConvergedStepsEndAtLocalOptimum) {
  std::mt19937_64 rng(17);
  const auto f = testing::RandomCoverage(40, 25, rng);
  ChasingLocalOpt algo(*f, 4);
  for (ElementId e : Iota(40)) {
    algo.Insert(e);
    if (algo.last_step_converged()) EXPECT_TRUE(algo.IsLocalOptimum());
  }
}

TEST(ChasingLocalOptTest, LocalOptimumDefinition) {
  const ModularOracle f({1.0, 2.0, 0.0});
  // phi * 1 <= 2: weight 2 outside the solution breaks local optimality.
  EXPECT_FALSE(IsLocalOptimum(f, ElementSet{E(0)}, Iota(2), 1));
  // Every arrived element inside the solution.
  EXPECT_TRUE(IsLocalOptimum(f, ElementSet{E(0), E(1)}, Iota(2), 2));
  // Nothing arrived.
  EXPECT_TRUE(IsLocalOptimum(f, ElementSet{}, {}, 2));
  // Zero-gain elements never qualify, even against an empty solution.
  const ElementId zero[] = {E(2)};
  EXPECT_TRUE(IsLocalOptimum(f, ElementSet{}, zero, 1));
}

TEST(ChasingLocalOptTest, SwapsNeverDecreaseValue) {
  std::mt19937_64 rng(5);
  const auto f = testing::RandomCoverage(60, 30, rng);
  ChasingLocalOpt algo(*f, 3);
  int swaps = 0;
  algo.set_swap_observer([&](const SwapEvent& event) {
    ++swaps;
    if (event.removed) {
      EXPECT_GE(event.value_after, event.value_before - 1e-9);
      EXPECT_LE(event.removed_loss, event.value_before / 3 + 1e-9);
    }
  });
  for (ElementId e : Iota(60)) algo.Insert(e);
  EXPECT_GT(swaps, 0);
}

TEST(SwappingTest, UnderCapacityAlwaysAdds) {
  const ModularOracle f({0.0, 0.0});
  Swapping algo(f, 2);
  algo.Insert(E(0));
  algo.Insert(E(1));
  EXPECT_EQ(algo.solution().size(), 2u);
  EXPECT_EQ(algo.stored_weight(E(0)), 0.0);
}

TEST(SwappingTest, NeedsTwiceTheWeakestWeight) {
  // Frozen weights {4, 4}; 7 < 2 * 4, 8 >= 2 * 4.
  const ModularOracle f({4.0, 4.0, 7.0, 8.0});
  Swapping algo(f, 2);
  algo.Insert(E(0));
  algo.Insert(E(1));
  EXPECT_EQ(algo.Insert(E(2)).additions, 0u);
  EXPECT_EQ(algo.solution(), (ElementSet{E(0), E(1)}));
  EXPECT_EQ(algo.Insert(E(3)).additions, 1u);
  // Ties on stored weight go to the earliest member.
  EXPECT_EQ(algo.solution(), (ElementSet{E(1), E(3)}));
  EXPECT_EQ(algo.stored_weight(E(2)), 7.0);
  EXPECT_EQ(algo.stored_weight(E(3)), std::optional<double>(8.0));
}

TEST(SieveStreamingTest, SingleElement) {
  const ModularOracle f({5.0});
  SieveStreaming algo(f, 3);
  const StepRecord step = algo.Insert(E(0));
  EXPECT_EQ(algo.solution(), (ElementSet{E(0)}));
  EXPECT_EQ(step.additions, 1u);
  EXPECT_EQ(algo.max_singleton(), 5.0);
}

TEST(SieveStreamingTest, ThresholdWindow) {
  const ModularOracle f({2.0, 3.0});
  SieveStreaming algo(f, 2, {0.1});
  algo.Insert(E(0));
  // Active thresholds are the powers of 1.1 in [2, 8].
  const std::vector<double> t = algo.thresholds();
  ASSERT_FALSE(t.empty());
  EXPECT_GE(t.front(), 2.0);
  EXPECT_LT(t.front() / 1.1, 2.0);
  EXPECT_LE(t.back(), 8.0);
  EXPECT_GT(t.back() * 1.1, 8.0);
  for (std::size_t i = 1; i < t.size(); ++i) {
    EXPECT_NEAR(t[i] / t[i - 1], 1.1, 1e-12);
  }
  algo.Insert(E(1));
  EXPECT_GE(algo.thresholds().front(), 3.0);
}

TEST(SieveStreamingTest, ZeroValuedStreamKeepsEmptySolution) {
  const ModularOracle f({0.0, 0.0});
  SieveStreaming algo(f, 2);
  algo.Insert(E(0));
  algo.Insert(E(1));
  EXPECT_TRUE(algo.solution().empty());
  EXPECT_TRUE(algo.thresholds().empty());
}

TEST(OfflineGreedyTest, ModularPicksLargestWeights) {
  const ModularOracle f({3.0, 9.0, 1.0, 9.0, 4.0});
  const ElementSet ground(Iota(5));
  const ElementSet s = OfflineGreedy(f, ground, 3);
  // Ties between the two 9s go to the smaller id first.
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0], E(1));
  EXPECT_EQ(s[1], E(3));
  EXPECT_EQ(s[2], E(4));
  EXPECT_EQ(OfflineGreedy(f, ground, 10), ground);
}

TEST(BruteForceTest, ModularAndEmpty) {
  const ModularOracle f({3.0, 9.0, 1.0, 5.0});
  const ElementSet ground(Iota(4));
  const OptimumResult best = BruteForceOpt(f, ground, 2);
  EXPECT_EQ(best.set, (ElementSet{E(1), E(3)}));
  EXPECT_EQ(best.value, 14.0);
  const OptimumResult none = BruteForceOpt(f, ground, 0);
  EXPECT_TRUE(none.set.empty());
  EXPECT_EQ(none.value, 0.0);
}

TEST(BruteForceTest, AtLeastGreedyAndMatchesMaskEnumeration) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const auto f = testing::RandomCoverage(10, 8, rng);
    const ElementSet ground(Iota(10));
    for (std::size_t k : {1u, 2u, 3u}) {
      const OptimumResult best = BruteForceOpt(*f, ground, k);
      EXPECT_EQ(best.value, testing::MaskOptimum(*f, Iota(10), k));
      EXPECT_GE(best.value, f->Eval(OfflineGreedy(*f, ground, k)));
    }
  }
}

TEST(BruteForceTest, CapIsEnforced) {
  const ModularOracle f(std::vector<double>(40, 1.0));
  const ElementSet ground(Iota(40));
  // C(40, 10) is about 8.5e8.
  EXPECT_THROW(BruteForceOpt(f, ground, 10), ResourceLimitError);
  EXPECT_NO_THROW(BruteForceOpt(f, ground, 2));
  EXPECT_EQ(Binomial(40, 10), 847660528u);
  EXPECT_EQ(Binomial(5, 7), 0u);
  EXPECT_EQ(Binomial(1000, 500), UINT64_MAX);
}

TEST(RegistryTest, BuildsEveryName) {
  const ModularOracle f({1.0, 2.0});
  for (const std::string& name : AlgorithmNames()) {
    auto algo = MakeAlgorithm(name, f, 1);
    EXPECT_EQ(algo->name(), name);
    algo->Insert(E(0));
    algo->Insert(E(1));
    EXPECT_EQ(algo->solution(), (ElementSet{E(1)}));
  }
  EXPECT_THROW(MakeAlgorithm("greedy", f, 1), std::invalid_argument);
}

TEST(RegistryTest, DeclaredConsistencyBounds) {
  const ModularOracle f({1.0});
  EXPECT_EQ(MakeAlgorithm("encompassing-set", f, 3)->consistency_bound(), 1u);
  EXPECT_EQ(MakeAlgorithm("swapping", f, 3)->consistency_bound(), 1u);
  EXPECT_EQ(MakeAlgorithm("chasing-local-opt", f, 3)->consistency_bound(),
            101u);
  EXPECT_FALSE(MakeAlgorithm("sieve-streaming", f, 3)->consistency_bound());
}

}  // namespace
}  // namespace consub
