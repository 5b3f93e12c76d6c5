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

#include "knapgreedy/objectives.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "knapgreedy/errors.h"

namespace knapgreedy {
namespace {

constexpr double kSymmetryTolerance = 1e-9;

void CheckSquareSymmetric(const Eigen::MatrixXd& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw InvalidInstance(std::string(what) + " must be a nonempty square matrix");
  }
  if (!m.allFinite()) {
    throw InvalidInstance(std::string(what) + " has non-finite entries");
  }
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < m.cols(); ++j) {
      if (std::abs(m(i, j) - m(j, i)) > kSymmetryTolerance) {
        throw InvalidInstance(std::string(what) + " is not symmetric");
      }
    }
  }
}

}  // namespace

ModularObjective::ModularObjective(std::vector<double> values)
    : Objective(static_cast<int>(values.size())), values_(std::move(values)) {
  for (double v : values_) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw InvalidInstance("modular values must be finite and nonnegative");
    }
  }
}

double ModularObjective::Evaluate(std::span<const int> set) const {
  double total = 0.0;
  for (int e : set) total += values_[e];
  return total;
}

DirectedCutObjective::DirectedCutObjective(int n, std::vector<Arc> arcs)
    : Objective(n), arcs_(std::move(arcs)) {
  for (const Arc& a : arcs_) {
    if (a.source < 0 || a.source >= n || a.target < 0 || a.target >= n) {
      throw InvalidInstance("arc endpoint out of range");
    }
    if (!(a.weight >= 0.0) || !std::isfinite(a.weight)) {
      throw InvalidInstance("arc weight must be finite and nonnegative");
    }
  }
}

double DirectedCutObjective::Evaluate(std::span<const int> set) const {
  std::vector<char> in(size(), 0);
  for (int e : set) in[e] = 1;
  double total = 0.0;
  for (const Arc& a : arcs_) {
    if (in[a.source] && !in[a.target]) total += a.weight;
  }
  return total;
}

double LogDetPrincipal(const Eigen::MatrixXd& m, std::span<const int> set,
                       double jitter) {
  std::vector<int> idx(set.begin(), set.end());
  std::sort(idx.begin(), idx.end());
  const auto s = static_cast<Eigen::Index>(idx.size());
  Eigen::MatrixXd sub(s, s);
  for (Eigen::Index r = 0; r < s; ++r) {
    for (Eigen::Index c = 0; c < s; ++c) sub(r, c) = m(idx[r], idx[c]);
  }
  sub.diagonal().array() += jitter;
  Eigen::LLT<Eigen::MatrixXd> llt(sub);
  if (llt.info() != Eigen::Success) throw NotPositiveDefinite();
  const auto diag = llt.matrixLLT().diagonal();
  if ((diag.array() <= 0.0).any()) throw NotPositiveDefinite();
  return 2.0 * diag.array().log().sum();
}

DppLogDetObjective::DppLogDetObjective(Eigen::MatrixXd kernel, double jitter)
    : Objective(static_cast<int>(kernel.rows())),
      kernel_(std::move(kernel)),
      jitter_(jitter) {
  CheckSquareSymmetric(kernel_, "DPP kernel");
  if (!(jitter_ >= 0.0)) throw InvalidInstance("jitter must be nonnegative");
}

double DppLogDetObjective::Evaluate(std::span<const int> set) const {
  return LogDetPrincipal(kernel_, set, jitter_);
}

double EntropyUnitTerm() {
  return (1.0 + std::log(2.0 * std::numbers::pi)) / 2.0;
}

EntropyObjective::EntropyObjective(Eigen::MatrixXd covariance)
    : Objective(static_cast<int>(covariance.rows())),
      covariance_(std::move(covariance)) {
  CheckSquareSymmetric(covariance_, "covariance");
}

double EntropyObjective::Evaluate(std::span<const int> set) const {
  return EntropyUnitTerm() * static_cast<double>(set.size()) +
         0.5 * LogDetPrincipal(covariance_, set, 0.0);
}

double EntropyCurvatureBound(const Eigen::MatrixXd& covariance) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(covariance,
                                                     Eigen::EigenvaluesOnly);
  const double mu = eig.eigenvalues().maxCoeff();
  return 1.0 - 1.0 / mu;
}

Eigen::MatrixXd BuildQdKernel(const QdKernelSpec& spec) {
  const auto n = static_cast<Eigen::Index>(spec.quality.size());
  if (n == 0) throw InvalidInstance("quality vector is empty");
  for (double q : spec.quality) {
    if (!(q > 0.0)) throw InvalidInstance("quality must be positive");
  }
  for (const FeatureFamily& f : spec.families) {
    if (!(f.sigma > 0.0)) {
      throw InvalidInstance("sigma of feature family '" + f.name +
                            "' must be positive");
    }
    if (f.vectors.rows() != n) {
      throw InvalidInstance("feature family '" + f.name +
                            "' has the wrong number of rows");
    }
  }

  Eigen::MatrixXd exponent = Eigen::MatrixXd::Zero(n, n);
  for (const FeatureFamily& f : spec.families) {
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = i + 1; j < n; ++j) {
        const double d = (f.vectors.row(i) - f.vectors.row(j)).squaredNorm();
        exponent(i, j) += d / f.sigma;
        exponent(j, i) = exponent(i, j);
      }
    }
  }
  Eigen::MatrixXd kernel(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      kernel(i, j) =
          spec.quality[i] * std::exp(-exponent(i, j)) * spec.quality[j];
    }
  }
  return kernel;
}

KnapsackConstraints PartitionBudget::ToKnapsacks() const {
  const int p = static_cast<int>(budgets.size());
  if (p == 0) throw InvalidInstance("partition needs at least one group");
  KnapsackConstraints cons;
  cons.costs.assign(p, std::vector<double>(labels.size(), 0.0));
  for (std::size_t e = 0; e < labels.size(); ++e) {
    if (labels[e] < 0 || labels[e] >= p) {
      throw InvalidInstance("partition label out of range");
    }
    cons.costs[labels[e]][e] = 1.0;
  }
  for (int b : budgets) {
    if (b < 0) throw InvalidInstance("partition budget must be nonnegative");
    cons.weights.push_back(static_cast<double>(b));
  }
  return cons;
}

}  // namespace knapgreedy
