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

#ifndef FULLORIENT_CONSTRUCTIONS_HPP
#define FULLORIENT_CONSTRUCTIONS_HPP

// Explicit orientations of the square of a cycle C_n^2 (n >= 7) realising
// every dependent-arc count from the minimum ceil(n/2) + 1 up to the maximum
// n + 1, and the triangle-breaking edge sets that certify the minimum.
//
// Vertex i is v_i on the cycle v_0 v_1 ... v_{n-1}; indices are mod n.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fullorient/graph.hpp"
#include "fullorient/orientation.hpp"
#include "fullorient/spectrum.hpp"

namespace fullorient {

// {v1v2, v3v4, ..., v_{n-1}v0} for even n,
// {v0v1, v1v2, v3v4, ..., v_{n-2}v_{n-1}} for odd n. Sorted.
std::vector<Edge> lemma2_deletion_set(std::size_t n);

// Minimum-dependency orientation D0 of C_n^2, d(D0) = ceil(n/2) + 1.
Orientation construct_d0(std::size_t n);
Orientation construct_d0(const GraphPtr& square);

// The dependent set D0 is claimed to have, sorted.
std::vector<Arc> d0_claimed_dependents(std::size_t n);

// Identity-order orientation of C_n^2 (n >= 5); its cover arcs are the path
// 0 -> 1 -> ... -> n-1 and d = n + 1.
Orientation construct_dmax_orientation(std::size_t n);
Orientation construct_dmax_orientation(const GraphPtr& square);

struct SequenceEntry {
  std::string label;  // "D0", "D1", ..., "Dmax"
  std::size_t target_d = 0;
  Orientation orientation;
  // Index of the entry this one was derived from by reversing arcs.
  std::optional<std::size_t> predecessor;
  // Arcs as directed in the predecessor.
  std::vector<Arc> reversal_from_previous;
  // Dependent set claimed for this step, when one is stated explicitly.
  std::optional<std::vector<Arc>> expected_R;
  // What the dependency oracle reports.
  DependencyReport observed;
};

struct OrientationSequence {
  std::size_t n = 0;
  GraphPtr square;
  std::vector<SequenceEntry> entries;  // ascending target_d

  std::vector<std::size_t> targets() const;
};

// D0 followed by the single-step reversals up to d = n, then the maximum
// orientation. Every entry is checked against dependent_arcs(); the first
// disagreement throws VerificationFailure naming that entry.
OrientationSequence construct_reversal_sequence(std::size_t n);

struct ClauseResult {
  std::string name;
  bool passed = false;
  // False when the exhaustive part was skipped for budget reasons.
  bool exhaustive_checked = false;
  std::string witness;
  std::string detail;
};

struct VerificationReport {
  std::size_t n = 0;
  std::vector<ClauseResult> clauses;
  std::optional<SpectrumResult> spectrum;
  double elapsed_ms = 0.0;

  bool all_passed() const;
};

// Three clauses: the triangle deletion number, the minimum dependent count,
// and gapless coverage of [ceil(n/2)+1, n+1]. Enumeration-backed checks run
// only when within `budget`. Never throws VerificationFailure; failures are
// reported per clause. Rejects n < 7 with InvalidArgument.
VerificationReport verify_theorems(std::size_t n,
                                   std::uint64_t budget = kDefaultBudget);

}  // namespace fullorient

#endif  // FULLORIENT_CONSTRUCTIONS_HPP
