// Copyright 2026 The Observa Authors
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

#include "observa/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_map>

namespace observa {
namespace {

std::string edge_name(Edge e) {
  return "(" + std::to_string(e.u) + ", " + std::to_string(e.v) + ")";
}

bool parse_uint(std::string_view s, std::uint64_t& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line == 0 ? what
                                   : "line " + std::to_string(line) + ": " + what),
      line_(line) {}

Graph::Graph(std::size_t n, bool directed, std::vector<Edge> edges,
             std::vector<std::string> labels)
    : n_(n), directed_(directed), edges_(std::move(edges)), labels_(std::move(labels)) {
  if (n_ == 0) throw GraphError("graph must have at least one node");
  if (!labels_.empty() && labels_.size() != n_) {
    throw GraphError("label count " + std::to_string(labels_.size()) +
                     " does not match node count " + std::to_string(n_));
  }
  for (auto& e : edges_) {
    if (e.u >= n_ || e.v >= n_) {
      throw GraphError("edge " + edge_name(e) + " has an endpoint outside [0, " +
                       std::to_string(n_) + ")");
    }
    e = canonical(e, directed_);
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) throw GraphError("duplicate edge " + edge_name(*dup));

  std::vector<std::size_t> degree(n_, 0);
  for (const auto& e : edges_) {
    if (e.u == e.v) {
      ++num_self_loops_;
      ++degree[e.u];
      continue;
    }
    ++degree[e.u];
    if (!directed_) ++degree[e.v];
  }
  offsets_.assign(n_ + 1, 0);
  for (std::size_t i = 0; i < n_; ++i) offsets_[i + 1] = offsets_[i] + degree[i];
  adjacency_.resize(offsets_[n_]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& e : edges_) {
    adjacency_[fill[e.u]++] = e.v;
    if (!directed_ && e.u != e.v) adjacency_[fill[e.v]++] = e.u;
  }
  for (std::size_t i = 0; i < n_; ++i) {
    std::sort(adjacency_.begin() + offsets_[i], adjacency_.begin() + offsets_[i + 1]);
  }
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  return std::binary_search(edges_.begin(), edges_.end(), canonical({u, v}, directed_));
}

bool Graph::has_self_loop(NodeId u) const { return has_edge(u, u); }

std::span<const NodeId> Graph::neighbors(NodeId u) const {
  return std::span<const NodeId>(adjacency_).subspan(offsets_[u], offsets_[u + 1] - offsets_[u]);
}

std::string Graph::label(NodeId u) const {
  return labels_.empty() ? std::to_string(u) : labels_[u];
}

bool Graph::is_strongly_connected() const {
  auto reaches_all = [&](const std::vector<std::vector<NodeId>>& adj) {
    std::vector<char> seen(n_, 0);
    std::vector<NodeId> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
      NodeId u = stack.back();
      stack.pop_back();
      for (NodeId v : adj[u]) {
        if (!seen[v]) {
          seen[v] = 1;
          ++count;
          stack.push_back(v);
        }
      }
    }
    return count == n_;
  };
  std::vector<std::vector<NodeId>> fwd(n_), rev(n_);
  for (const auto& e : edges_) {
    fwd[e.u].push_back(e.v);
    rev[e.v].push_back(e.u);
  }
  if (!directed_) {
    for (NodeId u = 0; u < n_; ++u) fwd[u].insert(fwd[u].end(), rev[u].begin(), rev[u].end());
    return reaches_all(fwd);
  }
  return reaches_all(fwd) && reaches_all(rev);
}

LoadResult load_edge_list(std::istream& in) {
  bool directed = false;
  bool saw_edge = false;
  std::vector<std::pair<std::string, std::string>> raw;
  std::set<std::string> names;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0].front() == '#') continue;
    if (tokens[0].front() == '%') {
      if (tokens[0] == "%directed" || tokens[0] == "%undirected") {
        if (tokens.size() != 1) throw ParseError(lineno, "directive takes no arguments");
        if (saw_edge) throw ParseError(lineno, "directive must precede all edges");
        directed = tokens[0] == "%directed";
      } else if (tokens[0] == "%node") {
        if (tokens.size() != 2) throw ParseError(lineno, "%node expects exactly one label");
        names.emplace(tokens[1]);
      } else {
        throw ParseError(lineno, "unknown directive '" + std::string(tokens[0]) + "'");
      }
      continue;
    }
    if (tokens.size() != 2) {
      throw ParseError(lineno, "expected 2 node tokens, found " + std::to_string(tokens.size()));
    }
    saw_edge = true;
    raw.emplace_back(tokens[0], tokens[1]);
    names.emplace(tokens[0]);
    names.emplace(tokens[1]);
  }
  if (names.empty()) throw ParseError(0, "empty input: no nodes or edges");

  std::vector<std::string> labels(names.begin(), names.end());
  bool all_numeric = std::all_of(labels.begin(), labels.end(), [](const std::string& s) {
    std::uint64_t v;
    return parse_uint(s, v);
  });
  if (all_numeric) {
    std::sort(labels.begin(), labels.end(), [](const std::string& a, const std::string& b) {
      std::uint64_t x = 0, y = 0;
      parse_uint(a, x);
      parse_uint(b, y);
      return x != y ? x < y : a < b;
    });
  }
  std::unordered_map<std::string, NodeId> index;
  for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], static_cast<NodeId>(i));

  std::vector<Edge> edges;
  edges.reserve(raw.size());
  std::set<Edge> seen;
  std::size_t duplicates = 0;
  for (const auto& [a, b] : raw) {
    Edge e = canonical({index.at(a), index.at(b)}, directed);
    if (seen.insert(e).second) {
      edges.push_back(e);
    } else {
      ++duplicates;
    }
  }
  const std::size_t n = labels.size();
  return {Graph(n, directed, std::move(edges), std::move(labels)), duplicates};
}

LoadResult load_edge_list_string(std::string_view text) {
  std::istringstream in{std::string(text)};
  return load_edge_list(in);
}

LoadResult load_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return load_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << (g.directed() ? "%directed\n" : "%undirected\n");
  std::vector<char> touched(g.num_nodes(), 0);
  for (const auto& e : g.edges()) touched[e.u] = touched[e.v] = 1;
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    if (!touched[u]) out << "%node " << g.label(u) << '\n';
  }
  for (const auto& e : g.edges()) out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
}

std::string to_edge_list_string(const Graph& g) {
  std::ostringstream out;
  write_edge_list(g, out);
  return out.str();
}

Graph add_edges(const Graph& g, std::span<const Edge> additions) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  std::set<Edge> added;
  for (Edge e : additions) {
    if (e.u >= g.num_nodes() || e.v >= g.num_nodes()) {
      throw GraphError("addition " + edge_name(e) + " has an endpoint outside [0, " +
                       std::to_string(g.num_nodes()) + ")");
    }
    Edge c = canonical(e, g.directed());
    if (g.has_edge(c.u, c.v) || !added.insert(c).second) {
      throw GraphError("addition " + edge_name(e) + " duplicates an existing edge");
    }
    edges.push_back(c);
  }
  return Graph(g.num_nodes(), g.directed(), std::move(edges), g.labels());
}

}  // namespace observa
