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

// Random instance generators and reference computations shared by the unit
// tests and the acceptance binary. The reference computations deliberately
// avoid the library's own code paths.

#ifndef KNAPGREEDY_TESTS_TEST_UTIL_H_
#define KNAPGREEDY_TESTS_TEST_UTIL_H_

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "knapgreedy/core.h"
#include "knapgreedy/objectives.h"

namespace knapgreedy::testing {

enum class Family { kModular, kCut, kDpp, kEntropy };

inline const char* FamilyName(Family f) {
  switch (f) {
    case Family::kModular: return "modular";
    case Family::kCut: return "cut";
    case Family::kDpp: return "dpp";
    case Family::kEntropy: return "entropy";
  }
  return "?";
}

inline constexpr Family kAllFamilies[] = {Family::kModular, Family::kCut,
                                          Family::kDpp, Family::kEntropy};

inline double Uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int UniformInt(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// A^T A + I with A a random d x n matrix.
inline Eigen::MatrixXd RandomSpd(std::mt19937_64& rng, int n, double scale = 1.0) {
  const int d = n + 2;
  Eigen::MatrixXd a(d, n);
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < n; ++c) a(r, c) = Uniform(rng, -1.0, 1.0) * scale;
  }
  Eigen::MatrixXd m = a.transpose() * a;
  m += Eigen::MatrixXd::Identity(n, n);
  return 0.5 * (m + m.transpose());
}

// Arbitrary random digraph: each ordered pair carries an arc with
// probability `density`.
inline std::vector<Arc> RandomDigraph(std::mt19937_64& rng, int n,
                                      double density) {
  std::vector<Arc> arcs;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && Uniform(rng, 0.0, 1.0) < density) {
        arcs.push_back({u, v, Uniform(rng, 0.1, 1.0)});
      }
    }
  }
  return arcs;
}

// Every arc comes with its reverse (independent weight), which keeps the
// curvature finite.
inline std::vector<Arc> RandomSymmetricSupportDigraph(std::mt19937_64& rng,
                                                      int n, double density) {
  std::vector<Arc> arcs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (Uniform(rng, 0.0, 1.0) < density) {
        arcs.push_back({u, v, Uniform(rng, 0.1, 1.0)});
        arcs.push_back({v, u, Uniform(rng, 0.1, 1.0)});
      }
    }
  }
  return arcs;
}

inline std::shared_ptr<const Objective> RandomObjective(std::mt19937_64& rng,
                                                        Family family, int n) {
  switch (family) {
    case Family::kModular: {
      std::vector<double> values(n);
      for (double& v : values) v = Uniform(rng, 0.0, 1.0);
      return std::make_shared<ModularObjective>(values);
    }
    case Family::kCut:
      return std::make_shared<DirectedCutObjective>(
          n, RandomSymmetricSupportDigraph(rng, n, 0.6));
    case Family::kDpp:
      return std::make_shared<DppLogDetObjective>(RandomSpd(rng, n));
    case Family::kEntropy:
      return std::make_shared<EntropyObjective>(RandomSpd(rng, n, 0.5));
  }
  return nullptr;
}

// Costs in [0, 1] with roughly one zero in five; every column keeps a
// positive entry.
inline std::vector<std::vector<double>> RandomCosts(std::mt19937_64& rng, int n,
                                                    int k) {
  std::vector<std::vector<double>> costs(k, std::vector<double>(n));
  for (int e = 0; e < n; ++e) {
    for (int i = 0; i < k; ++i) {
      costs[i][e] = Uniform(rng, 0.0, 1.0) < 0.2 ? 0.0 : Uniform(rng, 0.05, 1.0);
    }
    costs[UniformInt(rng, 0, k - 1)][e] = Uniform(rng, 0.05, 1.0);
  }
  return costs;
}

// Weights between `lo` and `hi` of each knapsack's total cost.
inline KnapsackConstraints RandomConstraints(std::mt19937_64& rng, int n, int k,
                                             double lo = 0.15, double hi = 0.6) {
  KnapsackConstraints cons;
  cons.costs = RandomCosts(rng, n, k);
  for (const auto& row : cons.costs) {
    double total = 0.0;
    for (double c : row) total += c;
    cons.weights.push_back(Uniform(rng, lo, hi) * total);
  }
  return cons;
}

inline Instance MakeInstance(KnapsackConstraints cons,
                             std::shared_ptr<const Objective> objective) {
  Instance inst;
  inst.n = objective->size();
  inst.constraints = std::move(cons);
  inst.objective = std::move(objective);
  return inst;
}

inline std::vector<int> MaskToSet(std::uint32_t mask, int n) {
  std::vector<int> out;
  for (int e = 0; e < n; ++e) {
    if ((mask >> e) & 1u) out.push_back(e);
  }
  return out;
}

// Determinant by Laplace expansion along the first row.
inline double CofactorDeterminant(const std::vector<std::vector<double>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1.0;
  if (n == 1) return m[0][0];
  double det = 0.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<std::vector<double>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<double> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != col) row.push_back(m[r][c]);
      }
      minor.push_back(row);
    }
    const double sign = (col % 2 == 0) ? 1.0 : -1.0;
    det += sign * m[0][col] * CofactorDeterminant(minor);
  }
  return det;
}

inline std::vector<std::vector<double>> Principal(const Eigen::MatrixXd& m,
                                                  std::span<const int> set,
                                                  double ridge = 0.0) {
  std::vector<std::vector<double>> out(set.size(),
                                       std::vector<double>(set.size()));
  for (std::size_t r = 0; r < set.size(); ++r) {
    for (std::size_t c = 0; c < set.size(); ++c) {
      out[r][c] = m(set[r], set[c]) + (r == c ? ridge : 0.0);
    }
  }
  return out;
}

// Largest eigenvalue of a symmetric PSD matrix by power iteration.
inline double PowerIterationTopEigenvalue(const Eigen::MatrixXd& m,
                                          int iterations = 5000) {
  const int n = static_cast<int>(m.rows());
  std::vector<double> v(n, 1.0);
  for (int i = 0; i < n; ++i) v[i] += 0.01 * i;
  double lambda = 0.0;
  for (int it = 0; it < iterations; ++it) {
    std::vector<double> w(n, 0.0);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) w[r] += m(r, c) * v[c];
    }
    double norm = 0.0;
    for (double x : w) norm += x * x;
    norm = std::sqrt(norm);
    for (int r = 0; r < n; ++r) v[r] = w[r] / norm;
    lambda = norm;
  }
  return lambda;
}

// Cut value by scanning a dense adjacency matrix.
inline double AdjacencyScanCut(int n, const std::vector<Arc>& arcs,
                               std::uint32_t mask) {
  std::vector<std::vector<double>> adj(n, std::vector<double>(n, 0.0));
  for (const Arc& a : arcs) adj[a.source][a.target] += a.weight;
  double total = 0.0;
  for (int u = 0; u < n; ++u) {
    if (!((mask >> u) & 1u)) continue;
    for (int v = 0; v < n; ++v) {
      if (!((mask >> v) & 1u)) total += adj[u][v];
    }
  }
  return total;
}

// Feasibility by plain summation, independent of SetCost/IsFeasible.
inline bool NaiveFeasible(const KnapsackConstraints& cons,
                          std::span<const int> set) {
  for (std::size_t i = 0; i < cons.costs.size(); ++i) {
    double sum = 0.0;
    for (int e : set) sum += cons.costs[i][e];
    if (sum > cons.weights[i] + 1e-9) return false;
  }
  return true;
}

// Reference density greedy written from the textual rule, without any
// library helper: one scan per step, ties to the lowest index, append only
// when feasible and the gain is nonnegative.
inline std::vector<int> ReferenceGreedy(const Objective& f,
                                        const KnapsackConstraints& cons,
                                        std::vector<int> pool) {
  std::vector<int> sigma;
  while (!pool.empty()) {
    const double base = f.Value(sigma);
    std::size_t best = 0;
    double best_density = -INFINITY;
    double best_gain = 0.0;
    for (std::size_t p = 0; p < pool.size(); ++p) {
      std::vector<int> with = sigma;
      with.push_back(pool[p]);
      const double gain = f.Value(with) - base;
      double denom = 0.0;
      for (const auto& row : cons.costs) denom = std::max(denom, row[pool[p]]);
      const double density = gain / denom;
      if (density > best_density) {
        best_density = density;
        best_gain = gain;
        best = p;
      }
    }
    const int e = pool[best];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(best));
    std::vector<int> with = sigma;
    with.push_back(e);
    if (best_gain >= 0.0 && NaiveFeasible(cons, with)) sigma = with;
  }
  return sigma;
}

// Elements with c_j(e) <= lambda W_j / k for all j, among those that fit alone.
inline std::vector<int> ReferenceCheap(const KnapsackConstraints& cons,
                                       double lambda) {
  const int k = static_cast<int>(cons.costs.size());
  std::vector<int> out;
  for (int e = 0; e < cons.n(); ++e) {
    bool fits = true;
    bool cheap = true;
    for (int i = 0; i < k; ++i) {
      if (cons.costs[i][e] > cons.weights[i] + 1e-9) fits = false;
      if (cons.costs[i][e] > lambda * cons.weights[i] / k + 1e-9) cheap = false;
    }
    if (fits && cheap) out.push_back(e);
  }
  return out;
}

}  // namespace knapgreedy::testing

#endif  // KNAPGREEDY_TESTS_TEST_UTIL_H_
