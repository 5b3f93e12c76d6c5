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

#include "knapgreedy/oracle.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "knapgreedy/errors.h"

namespace knapgreedy {
namespace {

constexpr double kZeroMarginal = 1e-12;
constexpr double kNegativeMarginal = -1e-9;
constexpr double kGuaranteeSlack = 1e-9;

std::vector<int> MaskToSet(std::uint32_t mask, int n) {
  std::vector<int> out;
  for (int e = 0; e < n; ++e) {
    if (mask & (1u << e)) out.push_back(e);
  }
  return out;
}

}  // namespace

OptResult BruteForceOpt(const Instance& inst) {
  if (inst.n > kMaxOptElements) {
    throw OracleLimitExceeded("instance too large for oracle");
  }
  const int n = inst.n;
  OptResult best;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const std::vector<int> set = MaskToSet(mask, n);
    if (!IsFeasible(inst.constraints, set)) continue;
    const double value = inst.objective->Value(set);
    if (value > best.value ||
        (value == best.value && !best.set.empty() &&
         std::lexicographical_compare(set.begin(), set.end(), best.set.begin(),
                                      best.set.end()))) {
      best.value = value;
      best.set = set;
    }
  }
  return best;
}

double BruteForceCurvature(const Objective& f) {
  const int n = f.size();
  if (n > kMaxCurvatureElements) {
    throw OracleLimitExceeded("instance too large for oracle");
  }
  const std::uint32_t full = (1u << n) - 1;
  std::vector<double> table(std::size_t{1} << n);
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    table[mask] = f.Value(MaskToSet(mask, n));
  }

  double alpha = 0.0;
  for (int w = 0; w < n; ++w) {
    const std::uint32_t bit = 1u << w;
    const std::uint32_t rest = full & ~bit;
    // B ranges over subsets of rest, A over subsets of B.
    for (std::uint32_t b = rest;; b = (b - 1) & rest) {
      const double num = table[b | bit] - table[b];
      for (std::uint32_t a = b;; a = (a - 1) & b) {
        const double den = table[a | bit] - table[a];
        if (std::abs(den) <= kZeroMarginal) {
          if (num < kNegativeMarginal) {
            throw CurvatureUndefined(
                "not submodular under the curvature definition: a zero "
                "marginal turns negative");
          }
        } else {
          alpha = std::max(alpha, 1.0 - num / den);
        }
        if (a == 0) break;
      }
      if (b == 0) break;
    }
  }
  return alpha;
}

double GuaranteeBound(double lambda, double alpha) {
  return (1.0 - std::exp(-1.0 / lambda)) / (3.0 * std::max(1.0, alpha));
}

OracleReport CheckGuarantee(const Instance& inst, Lambda lambda,
                            double alg_value) {
  ValidateOrThrow(inst);
  OracleReport report;
  const OptResult opt = BruteForceOpt(inst);
  report.opt_value = opt.value;
  report.opt_set = opt.set;
  report.curvature = BruteForceCurvature(*Reduce(inst).instance.objective);
  report.lambda = lambda.value();
  report.bound = GuaranteeBound(lambda.value(), report.curvature);
  report.alg_value = alg_value;
  if (opt.value > 0.0) report.ratio = alg_value / opt.value;
  report.holds = alg_value >= report.bound * opt.value - kGuaranteeSlack;
  return report;
}

}  // namespace knapgreedy
