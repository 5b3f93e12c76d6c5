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

// Concrete submodular objectives: modular, directed cut, DPP log-det and
// Gaussian entropy, plus the quality-diversity kernel builder and partition
// budgets expressed as 0/1 knapsacks.

#ifndef KNAPGREEDY_OBJECTIVES_H_
#define KNAPGREEDY_OBJECTIVES_H_

#include <Eigen/Dense>
#include <span>
#include <string>
#include <vector>

#include "knapgreedy/core.h"

namespace knapgreedy {

// f(S) = sum of per-element values.
class ModularObjective : public Objective {
 public:
  explicit ModularObjective(std::vector<double> values);

  std::string_view kind() const override { return "modular"; }
  const std::vector<double>& values() const { return values_; }

 protected:
  double Evaluate(std::span<const int> set) const override;

 private:
  std::vector<double> values_;
};

struct Arc {
  int source = 0;
  int target = 0;
  double weight = 0.0;
};

// Total weight of arcs leaving S. Non-monotone in general.
class DirectedCutObjective : public Objective {
 public:
  DirectedCutObjective(int n, std::vector<Arc> arcs);

  std::string_view kind() const override { return "cut"; }
  const std::vector<Arc>& arcs() const { return arcs_; }

 protected:
  double Evaluate(std::span<const int> set) const override;

 private:
  std::vector<Arc> arcs_;
};

inline constexpr double kDefaultJitter = 1e-10;

// log det(M_S + jitter * I) through a Cholesky factorization of the principal
// submatrix. Indices are sorted first, so the result does not depend on the
// order of `set`. Throws NotPositiveDefinite if the factorization fails.
double LogDetPrincipal(const Eigen::MatrixXd& m, std::span<const int> set,
                       double jitter);

// f(S) = log det(L_S + jitter * I), f(empty) = 0.
//
// The 1/det(L + I) normalizer of the DPP probability is left out: it is the
// same for every S and would break f(empty) = 0. Values can be negative when
// det(L_S) < 1; scaling L is up to whoever builds the instance.
class DppLogDetObjective : public Objective {
 public:
  explicit DppLogDetObjective(Eigen::MatrixXd kernel,
                              double jitter = kDefaultJitter);

  std::string_view kind() const override { return "dpp"; }
  const Eigen::MatrixXd& kernel() const { return kernel_; }
  double jitter() const { return jitter_; }

 protected:
  double Evaluate(std::span<const int> set) const override;

 private:
  Eigen::MatrixXd kernel_;
  double jitter_;
};

// (1 + ln 2pi) / 2, the per-variable constant of the Gaussian entropy.
double EntropyUnitTerm();

// Differential entropy of a Gaussian subvector:
//   f(S) = (1 + ln 2pi)/2 * |S| + ln det(Sigma_S) / 2.
class EntropyObjective : public Objective {
 public:
  explicit EntropyObjective(Eigen::MatrixXd covariance);

  std::string_view kind() const override { return "entropy"; }
  const Eigen::MatrixXd& covariance() const { return covariance_; }

 protected:
  double Evaluate(std::span<const int> set) const override;

 private:
  Eigen::MatrixXd covariance_;
};

// 1 - 1/mu with mu the largest eigenvalue of the covariance; a known upper
// bound on the entropy objective's curvature.
double EntropyCurvatureBound(const Eigen::MatrixXd& covariance);

struct FeatureFamily {
  std::string name;
  Eigen::MatrixXd vectors;  // n rows, one feature vector per item
  double sigma = 1.0;       // bandwidth, > 0
};

struct QdKernelSpec {
  std::vector<double> quality;  // q(i) > 0
  std::vector<FeatureFamily> families;
};

// L(i,j) = q(i) * k(i,j) * q(j) with
//   k(i,j) = exp(-sum_f ||v_f(i) - v_f(j)||^2 / sigma_f).
Eigen::MatrixXd BuildQdKernel(const QdKernelSpec& spec);

// Per-group cardinality caps. Group i becomes knapsack i with cost 1 for its
// own members and 0 for everyone else.
struct PartitionBudget {
  std::vector<int> labels;   // labels[e] in [0, p)
  std::vector<int> budgets;  // p caps

  KnapsackConstraints ToKnapsacks() const;
};

}  // namespace knapgreedy

#endif  // KNAPGREEDY_OBJECTIVES_H_
