// Copyright 2026 The fullorient Authors
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

#ifndef FULLORIENT_ERROR_HPP
#define FULLORIENT_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fullorient {

// Base of every exception thrown by the library. The C API maps each
// subclass onto one fo_status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Raised by dependency queries on an orientation that contains a directed
// cycle; dependence is only defined for acyclic orientations.
class NotAcyclic : public Error {
 public:
  using Error::Error;
};

// Elementary work needed by each enumeration strategy. Values saturate at
// UINT64_MAX, which is treated as "unbounded".
struct WorkEstimate {
  std::uint64_t edge_subsets = 0;   // 2^|E|
  std::uint64_t linear_orders = 0;  // |V|!
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, WorkEstimate estimate,
                 std::uint64_t budget)
      : Error(what), estimate_(estimate), budget_(budget) {}

  WorkEstimate estimate() const noexcept { return estimate_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  WorkEstimate estimate_;
  std::uint64_t budget_;
};

// A construction disagreed with the dependency oracle. `clause` names the
// offending step (e.g. "D3" or "minimum_dependence").
class VerificationFailure : public Error {
 public:
  VerificationFailure(std::string clause, const std::string& what)
      : Error(what), clause_(std::move(clause)) {}

  const std::string& clause() const noexcept { return clause_; }

 private:
  std::string clause_;
};

}  // namespace fullorient

#endif  // FULLORIENT_ERROR_HPP
