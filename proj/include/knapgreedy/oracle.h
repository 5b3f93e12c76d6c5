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

// Exhaustive ground truth for small instances: optimum, curvature, and the
// approximation guarantee check built from both.

#ifndef KNAPGREEDY_ORACLE_H_
#define KNAPGREEDY_ORACLE_H_

#include <optional>

#include "knapgreedy/core.h"
#include "knapgreedy/solver.h"

namespace knapgreedy {

inline constexpr int kMaxOptElements = 20;
inline constexpr int kMaxCurvatureElements = 10;

struct OptResult {
  double value = 0.0;
  ElementSet set;  // ascending; lexicographically smallest among ties
};

// Scans all 2^n subsets. Throws OracleLimitExceeded for n > 20.
OptResult BruteForceOpt(const Instance& inst);

// Smallest alpha with f_w((S u O) \ w) >= (1 - alpha) f_w(S \ w) over every
// S, O and w in S \ O, i.e. max of 1 - f_w(B)/f_w(A) over A <= B not
// containing w. Pairs with f_w(A) = 0 are skipped unless f_w(B) < 0, which
// throws CurvatureUndefined. Clamped below at 0. Throws OracleLimitExceeded
// for n > 10.
double BruteForceCurvature(const Objective& f);

// (1 - e^(-1/lambda)) / (3 max(1, alpha)).
double GuaranteeBound(double lambda, double alpha);

struct OracleReport {
  double opt_value = 0.0;
  ElementSet opt_set;
  double curvature = 0.0;
  double lambda = 1.0;
  double bound = 0.0;
  double alg_value = 0.0;
  std::optional<double> ratio;  // alg / opt; absent when opt is 0
  bool holds = false;
};

// Computes OPT on `inst` and the curvature of the objective restricted to the
// elements that fit on their own, then tests alg_value >= bound * OPT - 1e-9.
OracleReport CheckGuarantee(const Instance& inst, Lambda lambda,
                            double alg_value);

}  // namespace knapgreedy

#endif  // KNAPGREEDY_ORACLE_H_
