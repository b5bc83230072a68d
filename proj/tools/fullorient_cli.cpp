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

// fullorient: command-line front end over the libfullorient C API.
//
//   fullorient gen         --family cycle-power --n 8 --k 2
//   fullorient spectrum    --family cycle-power --n 6 --k 2 [--format csv]
//   fullorient construct   --n 9 [--format dot]
//   fullorient verify      --n 9 [--dot-dir out/]
//   fullorient survey      --family complete --n 3..7
//   fullorient probe-alpha --k 2 --n 6..10
//
// Exit codes: 0 success, 2 over budget, 3 invalid input, 4 verification
// failure.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fullorient/fullorient.h"
#include "json.hpp"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitBudget = 2;
constexpr int kExitInvalid = 3;
constexpr int kExitVerification = 4;

// Carries an exit code out of a command body.
struct CliError {
  int code;
  std::string message;
};

int exit_code_for(fo_status st) {
  switch (st) {
    case FO_OK: return kExitOk;
    case FO_ERR_BUDGET: return kExitBudget;
    case FO_ERR_INVALID:
    case FO_ERR_NOT_ACYCLIC: return kExitInvalid;
    case FO_ERR_VERIFICATION:
    case FO_ERR_INTERNAL: return kExitVerification;
  }
  return kExitVerification;
}

void check(fo_status st) {
  if (st != FO_OK) throw CliError{exit_code_for(st), fo_last_error()};
}

struct GraphDeleter {
  void operator()(fo_graph* g) const { fo_graph_free(g); }
};
struct SpectrumDeleter {
  void operator()(fo_spectrum* s) const { fo_spectrum_free(s); }
};
struct OrientationDeleter {
  void operator()(fo_orientation* o) const { fo_orientation_free(o); }
};
struct SequenceDeleter {
  void operator()(fo_sequence* s) const { fo_sequence_free(s); }
};
using GraphHandle = std::unique_ptr<fo_graph, GraphDeleter>;
using SpectrumHandle = std::unique_ptr<fo_spectrum, SpectrumDeleter>;
using OrientationHandle = std::unique_ptr<fo_orientation, OrientationDeleter>;
using SequenceHandle = std::unique_ptr<fo_sequence, SequenceDeleter>;

std::string take_string(char* s) {
  std::string out = s ? s : "";
  fo_string_free(s);
  return out;
}

struct Range {
  std::uint32_t lo = 0;
  std::uint32_t hi = 0;
};

std::uint32_t parse_u32(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const unsigned long v = std::stoul(s, &used);
    if (used != s.size() || v > UINT32_MAX) throw std::out_of_range(s);
    return static_cast<std::uint32_t>(v);
  } catch (const std::exception&) {
    throw CliError{kExitInvalid, std::string("invalid ") + what + ": '" + s + "'"};
  }
}

// "7" or "6..10".
Range parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const auto v = parse_u32(s, "--n");
    return {v, v};
  }
  Range r{parse_u32(s.substr(0, dots), "--n"), parse_u32(s.substr(dots + 2), "--n")};
  if (r.lo > r.hi) throw CliError{kExitInvalid, "empty range '" + s + "'"};
  return r;
}

// Decimal or 2^x.
std::uint64_t parse_budget(const std::string& s) {
  try {
    std::size_t used = 0;
    std::uint64_t v = 0;
    if (s.rfind("2^", 0) == 0) {
      const unsigned long e = std::stoul(s.substr(2), &used);
      if (used != s.size() - 2 || e > 63) throw std::out_of_range(s);
      v = std::uint64_t{1} << e;
    } else {
      v = std::stoull(s, &used);
      if (used != s.size()) throw std::out_of_range(s);
    }
    if (v == 0) throw std::out_of_range(s);
    return v;
  } catch (const std::exception&) {
    throw CliError{kExitInvalid, "invalid budget '" + s + "' (expected a positive integer or 2^x)"};
  }
}

std::string default_budget_text() {
  if (const char* env = std::getenv("FULLORIENT_BUDGET"); env && *env) return env;
  return std::to_string(fo_default_budget());
}

fo_strategy parse_strategy(const std::string& s) {
  if (s == "auto") return FO_STRATEGY_AUTO;
  if (s == "subsets") return FO_STRATEGY_SUBSETS;
  if (s == "orders") return FO_STRATEGY_ORDERS;
  throw CliError{kExitInvalid, "unknown strategy '" + s + "'"};
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw CliError{kExitInvalid, "cannot open '" + path + "' for writing"};
  f << text;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw CliError{kExitInvalid, "cannot read '" + path + "'"};
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// Shared flag set.
struct RunConfig {
  std::string family = "cycle-power";
  std::string n = "";
  std::uint32_t k = 2;
  std::uint32_t r = 2;
  std::string graph_file;
  std::string strategy = "auto";
  std::string budget = default_budget_text();
  std::string format;
  std::string out = "-";
  std::string dot_dir;
};

GraphHandle make_family_graph(const std::string& family, std::uint32_t n,
                              std::uint32_t k, std::uint32_t r) {
  fo_graph* g = nullptr;
  if (family == "cycle") {
    check(fo_graph_cycle(n, &g));
  } else if (family == "cycle-power") {
    check(fo_graph_cycle_power(n, k, &g));
  } else if (family == "complete") {
    check(fo_graph_complete(n, &g));
  } else if (family == "multipartite") {
    check(fo_graph_multipartite(r, n, &g));
  } else {
    throw CliError{kExitInvalid, "unknown family '" + family +
                                     "' (cycle, cycle-power, complete, multipartite)"};
  }
  return GraphHandle(g);
}

GraphHandle make_graph(const RunConfig& cfg) {
  if (!cfg.graph_file.empty()) {
    fo_graph* g = nullptr;
    check(fo_graph_parse(read_file(cfg.graph_file).c_str(), &g));
    return GraphHandle(g);
  }
  if (cfg.n.empty()) throw CliError{kExitInvalid, "--n is required"};
  return make_family_graph(cfg.family, parse_u32(cfg.n, "--n"), cfg.k, cfg.r);
}

std::string join(const std::vector<std::size_t>& values, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

std::vector<std::size_t> achievable_of(const fo_spectrum* s) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < fo_spectrum_achievable_count(s); ++i) {
    out.push_back(fo_spectrum_achievable_at(s, i));
  }
  return out;
}

std::vector<std::size_t> gaps_of(const fo_spectrum* s) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < fo_spectrum_gap_count(s); ++i) out.push_back(fo_spectrum_gap_at(s, i));
  return out;
}

int cmd_gen(const RunConfig& cfg) {
  if (!cfg.format.empty() && cfg.format != "text") {
    throw CliError{kExitInvalid, "gen writes the text graph format only"};
  }
  auto g = make_graph(cfg);
  char* text = nullptr;
  check(fo_graph_to_text(g.get(), &text));
  const std::string header = "# " + std::string(fo_graph_family(g.get())) + "\n";
  write_output(cfg.out, header + take_string(text));
  return kExitOk;
}

int cmd_spectrum(const RunConfig& cfg) {
  auto g = make_graph(cfg);
  fo_spectrum* raw = nullptr;
  check(fo_spectrum_compute(g.get(), parse_strategy(cfg.strategy), parse_budget(cfg.budget), &raw));
  SpectrumHandle s(raw);
  const std::string format = cfg.format.empty() ? "json" : cfg.format;
  char* doc = nullptr;
  if (format == "json") {
    check(fo_spectrum_to_json(s.get(), &doc));
    write_output(cfg.out, take_string(doc));
  } else if (format == "csv") {
    check(fo_spectrum_to_csv(s.get(), &doc));
    write_output(cfg.out, take_string(doc));
  } else if (format == "text") {
    std::string t = "graph       " + std::string(fo_graph_family(g.get())) + " n=" +
                    std::to_string(fo_graph_vertex_count(g.get())) + " m=" +
                    std::to_string(fo_graph_edge_count(g.get())) + "\n";
    t += "achievable  {" + join(achievable_of(s.get()), ", ") + "}\n";
    t += "d_min       " + std::to_string(fo_spectrum_d_min(s.get())) + "\n";
    t += "d_max       " + std::to_string(fo_spectrum_d_max(s.get())) + " (|E|-|V|+c = " +
         std::to_string(fo_graph_d_max_formula(g.get())) + ")\n";
    t += "gaps        {" + join(gaps_of(s.get()), ", ") + "}\n";
    t += std::string("fully orientable: ") +
         (fo_spectrum_fully_orientable(s.get()) ? "yes" : "no") + "\n";
    write_output(cfg.out, t);
  } else {
    throw CliError{kExitInvalid, "spectrum supports --format json, csv, text"};
  }
  return kExitOk;
}

std::string sequence_dot(const fo_sequence* seq) {
  std::string out;
  for (std::size_t i = 0; i < fo_sequence_size(seq); ++i) {
    fo_orientation* raw = nullptr;
    check(fo_sequence_orientation(seq, i, &raw));
    OrientationHandle o(raw);
    char* dot = nullptr;
    check(fo_orientation_to_dot(o.get(), fo_sequence_label(seq, i), &dot));
    out += take_string(dot);
  }
  return out;
}

int cmd_construct(const RunConfig& cfg) {
  if (cfg.n.empty()) throw CliError{kExitInvalid, "--n is required"};
  const auto n = parse_u32(cfg.n, "--n");
  fo_sequence* raw = nullptr;
  check(fo_sequence_build(n, &raw));
  SequenceHandle seq(raw);
  const std::string format = cfg.format.empty() ? "json" : cfg.format;
  if (format == "json") {
    char* doc = nullptr;
    check(fo_sequence_to_json(seq.get(), &doc));
    write_output(cfg.out, take_string(doc));
  } else if (format == "dot") {
    write_output(cfg.out, sequence_dot(seq.get()));
  } else if (format == "text") {
    std::string t;
    for (std::size_t i = 0; i < fo_sequence_size(seq.get()); ++i) {
      t += std::string(fo_sequence_label(seq.get(), i)) + "\td=" +
           std::to_string(fo_sequence_target(seq.get(), i)) + "\n";
    }
    write_output(cfg.out, t);
  } else {
    throw CliError{kExitInvalid, "construct supports --format json, dot, text"};
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg) {
  if (cfg.n.empty()) throw CliError{kExitInvalid, "--n is required"};
  const auto n = parse_u32(cfg.n, "--n");
  if (n < 7) {
    throw CliError{kExitInvalid,
                   "verify needs n >= 7: C_n^2 is fully orientable for every n >= 7, "
                   "n = 6 being the exception (C_6^2 has spectrum {4, 6, 7})"};
  }
  char* doc = nullptr;
  const fo_status st = fo_verify_theorems(n, parse_budget(cfg.budget), &doc);
  if (st != FO_OK && st != FO_ERR_VERIFICATION) check(st);
  const std::string report = take_string(doc);
  if (st == FO_ERR_VERIFICATION && report.empty()) check(st);

  if (!cfg.dot_dir.empty()) {
    fo_sequence* raw = nullptr;
    if (fo_sequence_build(n, &raw) == FO_OK) {
      SequenceHandle seq(raw);
      std::filesystem::create_directories(cfg.dot_dir);
      for (std::size_t i = 0; i < fo_sequence_size(seq.get()); ++i) {
        fo_orientation* o_raw = nullptr;
        check(fo_sequence_orientation(seq.get(), i, &o_raw));
        OrientationHandle o(o_raw);
        char* dot = nullptr;
        const std::string label = fo_sequence_label(seq.get(), i);
        check(fo_orientation_to_dot(o.get(), label.c_str(), &dot));
        write_output((std::filesystem::path(cfg.dot_dir) /
                      ("C" + std::to_string(n) + "_" + label + ".dot"))
                         .string(),
                     take_string(dot));
      }
    }
  }

  const std::string format = cfg.format.empty() ? "json" : cfg.format;
  if (format == "json") {
    write_output(cfg.out, report);
  } else if (format == "text") {
    const Json j = Json::parse(report);
    std::string t = "C_" + std::to_string(n) + "^2\n";
    for (const auto& c : j["clauses"]) {
      t += "  " + c["status"].get<std::string>() + "  " + c["name"].get<std::string>() +
           ": " + c["detail"].get<std::string>() + "\n";
    }
    write_output(cfg.out, t);
  } else {
    throw CliError{kExitInvalid, "verify supports --format json, text"};
  }
  return st == FO_OK ? kExitOk : kExitVerification;
}

struct Row {
  std::uint32_t n = 0;
  bool computed = false;
  std::string skip_reason;
  std::size_t m = 0;
  bool fully_orientable = false;
  std::size_t d_min = 0;
  std::size_t d_max = 0;
  std::vector<std::size_t> achievable;
  std::vector<std::size_t> gaps;
  std::string note;
};

Row compute_row(const RunConfig& cfg, const std::string& family, std::uint32_t n,
                std::uint32_t k) {
  Row row;
  row.n = n;
  auto g = make_family_graph(family, n, k, cfg.r);
  row.m = fo_graph_edge_count(g.get());
  fo_spectrum* raw = nullptr;
  const fo_status st = fo_spectrum_compute(g.get(), parse_strategy(cfg.strategy),
                                           parse_budget(cfg.budget), &raw);
  if (st == FO_ERR_BUDGET) {
    row.skip_reason = fo_last_error();
    return row;
  }
  check(st);
  SpectrumHandle s(raw);
  row.computed = true;
  row.fully_orientable = fo_spectrum_fully_orientable(s.get()) != 0;
  row.d_min = fo_spectrum_d_min(s.get());
  row.d_max = fo_spectrum_d_max(s.get());
  row.achievable = achievable_of(s.get());
  row.gaps = gaps_of(s.get());
  return row;
}

std::string render_rows(const std::vector<Row>& rows, const std::string& format,
                        Json header) {
  if (format == "json") {
    Json list = Json::array();
    for (const Row& r : rows) {
      Json j{{"n", r.n}, {"m", r.m}, {"status", r.computed ? "ok" : "skipped"}};
      if (r.computed) {
        j["fully_orientable"] = r.fully_orientable;
        j["d_min"] = r.d_min;
        j["d_max"] = r.d_max;
        j["achievable"] = r.achievable;
        j["gaps"] = r.gaps;
      } else {
        j["reason"] = r.skip_reason;
      }
      if (!r.note.empty()) j["note"] = r.note;
      list.push_back(j);
    }
    header["rows"] = list;
    return header.dump(2) + "\n";
  }
  if (format == "csv") {
    std::string out = "n,m,status,fully_orientable,d_min,d_max,gaps,note\n";
    for (const Row& r : rows) {
      out += std::to_string(r.n) + "," + std::to_string(r.m) + "," +
             (r.computed ? "ok" : "skipped") + ",";
      if (r.computed) {
        out += std::string(r.fully_orientable ? "true" : "false") + "," +
               std::to_string(r.d_min) + "," + std::to_string(r.d_max) + "," +
               join(r.gaps, " ");
      } else {
        out += ",,,";
      }
      out += ",\"" + r.note + "\"\n";
    }
    return out;
  }
  std::ostringstream t;
  t << "n\tm\tstatus\tfully\td_min\td_max\tgaps\tnote\n";
  for (const Row& r : rows) {
    t << r.n << '\t' << r.m << '\t' << (r.computed ? "ok" : "skipped") << '\t';
    if (r.computed) {
      t << (r.fully_orientable ? "yes" : "no") << '\t' << r.d_min << '\t' << r.d_max
        << "\t{" << join(r.gaps, ",") << "}";
    } else {
      t << "-\t-\t-\t-";
    }
    t << '\t' << r.note << '\n';
  }
  return t.str();
}

void require_table_format(const std::string& format) {
  if (format != "text" && format != "csv" && format != "json") {
    throw CliError{kExitInvalid, "tables support --format text, csv, json"};
  }
}

int cmd_probe_alpha(const RunConfig& cfg) {
  if (cfg.k < 2) throw CliError{kExitInvalid, "probe-alpha needs k >= 2"};
  if (cfg.n.empty()) throw CliError{kExitInvalid, "--n is required"};
  const Range range = parse_range(cfg.n);
  const std::string format = cfg.format.empty() ? "text" : cfg.format;
  require_table_format(format);
  std::vector<Row> rows;
  bool any = false;
  for (std::uint32_t n = range.lo; n <= range.hi; ++n) {
    Row row = compute_row(cfg, "cycle-power", n, cfg.k);
    if (n == 2 * cfg.k + 2) {
      row.note = "C_n^k = K_{(k+1)(2)}: not fully orientable, so alpha(k) >= 2k+3";
      if (row.computed && row.fully_orientable) row.note += " (CONTRADICTED by enumeration)";
    } else if (n <= 2 * cfg.k + 1) {
      row.note = "C_n^k = K_n";
    }
    any = any || row.computed;
    rows.push_back(std::move(row));
    if (n == UINT32_MAX) break;
  }
  write_output(cfg.out, render_rows(rows, format, Json{{"k", cfg.k}, {"family", "cycle-power"}}));
  return any ? kExitOk : kExitBudget;
}

int cmd_survey(const RunConfig& cfg) {
  if (cfg.n.empty()) throw CliError{kExitInvalid, "--n is required"};
  const Range range = parse_range(cfg.n);
  const std::string format = cfg.format.empty() ? "text" : cfg.format;
  require_table_format(format);
  std::vector<Row> rows;
  bool any = false;
  for (std::uint32_t n = range.lo; n <= range.hi; ++n) {
    Row row = compute_row(cfg, cfg.family, n, cfg.k);
    any = any || row.computed;
    rows.push_back(std::move(row));
    if (n == UINT32_MAX) break;
  }
  Json header{{"family", cfg.family}};
  if (cfg.family == "cycle-power") header["k"] = cfg.k;
  if (cfg.family == "multipartite") header["r"] = cfg.r;
  write_output(cfg.out, render_rows(rows, format, header));
  return any ? kExitOk : kExitBudget;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dependent-arc spectra of acyclic orientations"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_family = [&](CLI::App* sub) {
    sub->add_option("--family", cfg.family, "cycle | cycle-power | complete | multipartite")
        ->capture_default_str();
    sub->add_option("--n", cfg.n, "vertex count (part size for multipartite)");
    sub->add_option("--k", cfg.k, "power for cycle-power")->capture_default_str();
    sub->add_option("--r", cfg.r, "number of parts for multipartite")->capture_default_str();
  };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--strategy", cfg.strategy, "auto | subsets | orders")->capture_default_str();
    sub->add_option("--budget", cfg.budget,
                    "maximum enumeration work, integer or 2^x (env FULLORIENT_BUDGET)")
        ->capture_default_str();
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "json | csv | dot | text");
    sub->add_option("--out", cfg.out, "output path, '-' for stdout")->capture_default_str();
  };

  auto* gen = app.add_subcommand("gen", "write a graph in the text edge-list format");
  add_family(gen);
  add_output(gen);

  auto* spectrum = app.add_subcommand("spectrum", "exhaustive dependency spectrum");
  add_family(spectrum);
  spectrum->add_option("--graph", cfg.graph_file, "read the graph from a text edge-list file");
  add_budget(spectrum);
  add_output(spectrum);

  auto* construct = app.add_subcommand("construct", "orientation sequence on C_n^2");
  construct->add_option("--n", cfg.n, "cycle length (>= 7)");
  add_output(construct);

  auto* verify = app.add_subcommand("verify", "check the C_n^2 constructions end to end");
  verify->add_option("--n", cfg.n, "cycle length (>= 7)");
  verify->add_option("--budget", cfg.budget, "enumeration budget")->capture_default_str();
  verify->add_option("--dot-dir", cfg.dot_dir, "write one DOT file per sequence entry");
  add_output(verify);

  auto* survey = app.add_subcommand("survey", "spectrum summary over a range of n");
  add_family(survey);
  add_budget(survey);
  add_output(survey);

  auto* probe = app.add_subcommand("probe-alpha", "full orientability of C_n^k over a range of n");
  probe->add_option("--k", cfg.k, "power (>= 2)")->capture_default_str();
  probe->add_option("--n", cfg.n, "n or lo..hi");
  add_budget(probe);
  add_output(probe);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*gen) return cmd_gen(cfg);
    if (*spectrum) return cmd_spectrum(cfg);
    if (*construct) return cmd_construct(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*survey) return cmd_survey(cfg);
    if (*probe) return cmd_probe_alpha(cfg);
  } catch (const CliError& e) {
    std::cerr << "fullorient: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "fullorient: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
