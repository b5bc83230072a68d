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

#include "fullorient/report.hpp"

#include <chrono>
#include <cmath>

#include "json.hpp"

namespace fullorient {
namespace {

using Json = nlohmann::ordered_json;

Json arcs_json(const std::vector<Arc>& arcs) {
  Json out = Json::array();
  for (const Arc& a : arcs) out.push_back({a.tail, a.head});
  return out;
}

// Milliseconds with microsecond resolution keeps documents short.
double round_ms(double ms) { return std::round(ms * 1000.0) / 1000.0; }

}  // namespace

SpectrumDocument compute_spectrum_document(const SimpleGraph& g, GraphLabel label,
                                           Strategy strategy, std::uint64_t budget) {
  const auto start = std::chrono::steady_clock::now();
  SpectrumDocument doc;
  doc.label = std::move(label);
  doc.n = g.vertex_count();
  doc.m = g.edge_count();
  doc.spectrum = dependency_spectrum(g, strategy, budget);
  doc.d_max_formula = d_max_closed_form(g);
  try {
    doc.pi_t = min_triangle_edge_deletion(g).pi_t;
  } catch (const BudgetExceeded&) {
    doc.pi_t.reset();
  }
  doc.elapsed_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return doc;
}

std::string spectrum_json(const SpectrumDocument& doc) {
  const SpectrumResult& s = doc.spectrum;
  Json params = Json::object();
  for (const auto& [key, value] : doc.label.params) params[key] = value;
  Json counts = Json::object();
  for (const auto& [d, count] : s.counts) counts[std::to_string(d)] = count;

  Json j;
  j["graph"] = {{"family", doc.label.family}, {"params", params}, {"n", doc.n}, {"m", doc.m}};
  j["strategy"] = strategy_name(s.strategy);
  j["enumerated"] = s.enumerated;
  j["achievable"] = s.achievable;
  j["counts"] = counts;
  j["d_min"] = s.d_min;
  j["d_max"] = s.d_max;
  j["d_max_formula"] = doc.d_max_formula;
  j["pi_t"] = doc.pi_t ? Json(*doc.pi_t) : Json(nullptr);
  j["fully_orientable"] = s.fully_orientable;
  j["gaps"] = s.gaps;
  j["elapsed_ms"] = round_ms(doc.elapsed_ms);
  return j.dump(2) + "\n";
}

std::string spectrum_csv(const SpectrumDocument& doc) {
  const SpectrumResult& s = doc.spectrum;
  std::string out = "d,count\n";
  for (const auto& [d, count] : s.counts) {
    out += std::to_string(d) + "," + std::to_string(count) + "\n";
  }
  std::string gaps;
  for (std::size_t i = 0; i < s.gaps.size(); ++i) {
    gaps += (i ? " " : "") + std::to_string(s.gaps[i]);
  }
  out += "# family=" + doc.label.family + ",n=" + std::to_string(doc.n) +
         ",m=" + std::to_string(doc.m) + ",strategy=" +
         std::string(strategy_name(s.strategy)) + ",enumerated=" +
         std::to_string(s.enumerated) + ",d_min=" + std::to_string(s.d_min) +
         ",d_max=" + std::to_string(s.d_max) + ",d_max_formula=" +
         std::to_string(doc.d_max_formula) + ",pi_t=" +
         (doc.pi_t ? std::to_string(*doc.pi_t) : std::string("null")) +
         ",fully_orientable=" + (s.fully_orientable ? "true" : "false") +
         ",gaps=" + gaps + "\n";
  return out;
}

std::string verification_json(const VerificationReport& report) {
  Json clauses = Json::array();
  for (const ClauseResult& c : report.clauses) {
    clauses.push_back({{"name", c.name},
                       {"status", c.passed ? "pass" : "fail"},
                       {"witness", c.witness},
                       {"detail", c.detail},
                       {"exhaustive", c.exhaustive_checked ? "checked" : "skipped"}});
  }
  Json j;
  j["n"] = report.n;
  j["clauses"] = clauses;
  j["elapsed_ms"] = round_ms(report.elapsed_ms);
  return j.dump(2) + "\n";
}

std::string sequence_json(const OrientationSequence& seq) {
  Json entries = Json::array();
  for (const SequenceEntry& e : seq.entries) {
    entries.push_back(
        {{"label", e.label},
         {"target_d", e.target_d},
         {"predecessor", e.predecessor ? Json(seq.entries[*e.predecessor].label)
                                       : Json(nullptr)},
         {"reversal_from_previous", arcs_json(e.reversal_from_previous)},
         {"expected_R", e.expected_R ? arcs_json(*e.expected_R) : Json(nullptr)},
         {"dependent", arcs_json(e.observed.dependent)},
         {"arcs", arcs_json(e.orientation.arcs())}});
  }
  Json j;
  j["n"] = seq.n;
  j["entries"] = entries;
  return j.dump(2) + "\n";
}

}  // namespace fullorient
