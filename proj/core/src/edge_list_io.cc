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

#include "cmrank/edge_list_io.h"

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "cmrank/errors.h"

namespace cmrank {
namespace {

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return in;
}

}  // namespace

FiniteGraph read_edge_list(std::istream& in) {
  std::optional<long long> declared_n;
  std::vector<Edge> edges;
  long long max_id = -1;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(strip_comment(line));
    std::string first;
    if (!(fields >> first)) continue;
    auto fail = [&](const std::string& why) {
      throw IoError("line " + std::to_string(line_no) + ": " + why);
    };
    if (first == "n") {
      long long count;
      if (!(fields >> count) || count <= 0) fail("bad node-count header");
      if (declared_n) fail("duplicate node-count header");
      declared_n = count;
    } else {
      long long u;
      long long v;
      try {
        std::size_t used = 0;
        u = std::stoll(first, &used);
        if (used != first.size()) fail("expected 'u v'");
      } catch (const std::logic_error&) {
        fail("expected 'u v'");
      }
      if (!(fields >> v)) fail("expected 'u v'");
      if (u < 0 || v < 0) fail("negative node id");
      edges.push_back({static_cast<int>(u), static_cast<int>(v)});
      max_id = std::max({max_id, u, v});
    }
    std::string extra;
    if (fields >> extra) fail("trailing tokens");
  }
  if (in.bad()) throw IoError("read error");
  const long long n = declared_n.value_or(max_id + 1);
  if (n <= 0) throw IoError("empty edge list without a node-count header");
  if (max_id >= n) throw IoError("node id " + std::to_string(max_id) + " exceeds header count");
  try {
    return FiniteGraph(static_cast<std::size_t>(n), std::move(edges));
  } catch (const UsageError& e) {
    throw IoError(e.what());
  }
}

FiniteGraph read_edge_list(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const FiniteGraph& g) {
  out << "n " << g.node_count() << "\n";
  for (const auto& e : g.edges()) out << e.u << " " << e.v << "\n";
}

EdgeSet read_edge_set(std::istream& in, const FiniteGraph& g) {
  EdgeSet x(g);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(strip_comment(line));
    long long index;
    if (!(fields >> index)) {
      std::string token;
      std::istringstream again(strip_comment(line));
      if (again >> token) throw IoError("line " + std::to_string(line_no) + ": expected an edge index");
      continue;
    }
    if (index < 0 || static_cast<std::size_t>(index) >= g.edge_count()) {
      throw IoError("line " + std::to_string(line_no) + ": edge index out of range");
    }
    x.insert(static_cast<std::size_t>(index));
  }
  return x;
}

EdgeSet read_edge_set(const std::filesystem::path& path, const FiniteGraph& g) {
  auto in = open_or_throw(path);
  return read_edge_set(in, g);
}

void write_edge_set(std::ostream& out, const EdgeSet& x) {
  for (auto e : x.indices()) out << e << "\n";
}

}  // namespace cmrank
