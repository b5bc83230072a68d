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

#ifndef FULLORIENT_GRAPH_IO_HPP
#define FULLORIENT_GRAPH_IO_HPP

#include <string>
#include <string_view>

#include "fullorient/graph.hpp"

namespace fullorient {

// Plain-text edge list:
//
//   # optional comments, anywhere after '#'
//   n m
//   u v        (m lines, 0 <= u < v < n)
//
// parse_graph_text throws InvalidArgument with a line number on malformed
// input. Edge order is preserved in both directions.
SimpleGraph parse_graph_text(std::string_view text);
std::string format_graph_text(const SimpleGraph& g);

}  // namespace fullorient

#endif  // FULLORIENT_GRAPH_IO_HPP
