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

#include "fullorient/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <vector>

#include "fullorient/error.hpp"

namespace fullorient {
namespace {

struct LineTokens {
  std::size_t line_no;
  std::vector<std::string_view> tokens;
};

// Splits into non-empty, comment-stripped lines of whitespace-separated tokens.
std::vector<LineTokens> tokenize(std::string_view text) {
  std::vector<LineTokens> lines;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    LineTokens lt{line_no, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) lt.tokens.push_back(line.substr(i, j - i));
      i = j;
    }
    if (!lt.tokens.empty()) lines.push_back(std::move(lt));
  }
  return lines;
}

std::size_t parse_count(std::string_view tok, std::size_t line_no) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw InvalidArgument("line " + std::to_string(line_no) +
                          ": expected a non-negative integer, got '" +
                          std::string(tok) + "'");
  }
  return value;
}

}  // namespace

SimpleGraph parse_graph_text(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw InvalidArgument("empty graph document");
  const auto& header = lines.front();
  if (header.tokens.size() != 2) {
    throw InvalidArgument("line " + std::to_string(header.line_no) +
                          ": header must be 'n m'");
  }
  const std::size_t n = parse_count(header.tokens[0], header.line_no);
  const std::size_t m = parse_count(header.tokens[1], header.line_no);
  if (lines.size() - 1 != m) {
    throw InvalidArgument("header declares " + std::to_string(m) +
                          " edges but " + std::to_string(lines.size() - 1) +
                          " edge lines follow");
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& lt = lines[i];
    if (lt.tokens.size() != 2) {
      throw InvalidArgument("line " + std::to_string(lt.line_no) +
                            ": edge must be 'u v'");
    }
    const std::size_t u = parse_count(lt.tokens[0], lt.line_no);
    const std::size_t v = parse_count(lt.tokens[1], lt.line_no);
    if (!(u < v && v < n)) {
      throw InvalidArgument("line " + std::to_string(lt.line_no) +
                            ": need 0 <= u < v < n");
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  return SimpleGraph(n, edges);
}

std::string format_graph_text(const SimpleGraph& g) {
  std::string out = std::to_string(g.vertex_count()) + " " +
                    std::to_string(g.edge_count()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

}  // namespace fullorient
