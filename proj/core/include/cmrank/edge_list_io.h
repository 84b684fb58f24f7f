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

#ifndef CMRANK_EDGE_LIST_IO_H_
#define CMRANK_EDGE_LIST_IO_H_

#include <filesystem>
#include <iosfwd>

#include "cmrank/graph.h"

namespace cmrank {

// Edge-list text: one "u v" pair per line with 0-based ids, '#' starts a
// comment, and an optional "n <count>" header fixes the node count
// (otherwise 1 + the largest id). Malformed input throws IoError.
FiniteGraph read_edge_list(std::istream& in);
FiniteGraph read_edge_list(const std::filesystem::path& path);
void write_edge_list(std::ostream& out, const FiniteGraph& g);

// One edge index per line, '#' comments allowed.
EdgeSet read_edge_set(std::istream& in, const FiniteGraph& g);
EdgeSet read_edge_set(const std::filesystem::path& path, const FiniteGraph& g);
void write_edge_set(std::ostream& out, const EdgeSet& x);

}  // namespace cmrank

#endif  // CMRANK_EDGE_LIST_IO_H_
