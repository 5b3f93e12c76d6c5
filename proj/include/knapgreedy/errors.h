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

#ifndef KNAPGREEDY_ERRORS_H_
#define KNAPGREEDY_ERRORS_H_

#include <stdexcept>
#include <string>

namespace knapgreedy {

// Base class for every error the library raises on bad input.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed instance, out-of-range parameter, or schema problem.
class InvalidInstance : public Error {
 public:
  using Error::Error;
};

// Every element violates some knapsack on its own.
class EmptyAfterReduction : public Error {
 public:
  EmptyAfterReduction() : Error("empty after reduction") {}
};

// Brute-force oracles refuse instances past their size caps.
class OracleLimitExceeded : public Error {
 public:
  using Error::Error;
};

class NotPositiveDefinite : public Error {
 public:
  NotPositiveDefinite() : Error("not positive definite") {}
};

// A zero marginal later turns negative, so no finite curvature exists.
class CurvatureUndefined : public Error {
 public:
  using Error::Error;
};

}  // namespace knapgreedy

#endif  // KNAPGREEDY_ERRORS_H_
