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

#ifndef FULLORIENT_REPORT_HPP
#define FULLORIENT_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fullorient/constructions.hpp"
#include "fullorient/spectrum.hpp"

namespace fullorient {

// Where a graph came from, for result documents.
struct GraphLabel {
  std::string family = "custom";
  std::vector<std::pair<std::string, std::uint64_t>> params;
};

struct SpectrumDocument {
  GraphLabel label;
  std::size_t n = 0;
  std::size_t m = 0;
  SpectrumResult spectrum;
  std::size_t d_max_formula = 0;
  std::optional<std::size_t> pi_t;  // empty if the exact search was over budget
  double elapsed_ms = 0.0;
};

SpectrumDocument compute_spectrum_document(const SimpleGraph& g, GraphLabel label,
                                           Strategy strategy, std::uint64_t budget);

// {graph: {family, params, n, m}, strategy, enumerated, achievable, counts,
//  d_min, d_max, d_max_formula, pi_t, fully_orientable, gaps, elapsed_ms}
std::string spectrum_json(const SpectrumDocument& doc);
// "d,count" rows then a '#'-prefixed summary row.
std::string spectrum_csv(const SpectrumDocument& doc);

// {n, clauses: [{name, status, witness, detail, exhaustive}], elapsed_ms}
std::string verification_json(const VerificationReport& report);

// {n, entries: [{label, target_d, predecessor, reversal_from_previous,
//  expected_R, dependent, arcs}]}
std::string sequence_json(const OrientationSequence& seq);

}  // namespace fullorient

#endif  // FULLORIENT_REPORT_HPP
