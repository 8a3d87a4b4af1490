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

#ifndef OBSERVA_GRAPH_HPP_
#define OBSERVA_GRAPH_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace observa {

using NodeId = std::uint32_t;

/// Raised for structurally invalid graphs and edge operations.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by the edge-list reader; carries the 1-based line number (0 when
/// the error is not tied to a line, e.g. empty input).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// System graph: n state nodes, arcs u -> v (directed) or edges {u, v}
/// (undirected, stored once with u <= v). Immutable once built.
class Graph {
 public:
  /// Throws GraphError on out-of-range endpoints, duplicate edges, n == 0,
  /// or a label vector whose size is neither 0 nor n.
  Graph(std::size_t n, bool directed, std::vector<Edge> edges,
        std::vector<std::string> labels = {});

  std::size_t num_nodes() const noexcept { return n_; }
  bool directed() const noexcept { return directed_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  bool has_edge(NodeId u, NodeId v) const;
  bool has_self_loop(NodeId u) const;
  std::size_t num_self_loops() const noexcept { return num_self_loops_; }

  /// Out-neighbours for directed graphs, all neighbours for undirected ones.
  /// Sorted ascending; a self-loop lists the node itself once.
  std::span<const NodeId> neighbors(NodeId u) const;

  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// External id if labelled, else the decimal dense id.
  std::string label(NodeId u) const;

  /// True for undirected graphs that are connected, and for digraphs in
  /// which every node reaches every other node.
  bool is_strongly_connected() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.directed_ == b.directed_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_;
  bool directed_;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
  std::size_t num_self_loops_ = 0;
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> adjacency_;
};

/// Canonical form of an edge for the given directedness.
inline Edge canonical(Edge e, bool directed) {
  if (!directed && e.v < e.u) return {e.v, e.u};
  return e;
}

struct LoadResult {
  Graph graph;
  std::size_t duplicates_collapsed = 0;
};

/// Reads the edge-list text format:
///
///   # comment
///   %directed | %undirected     (optional, default undirected)
///   %node <label>               (declares a node without edges)
///   <label> <label>             (one edge per line)
///
/// Labels are renumbered densely: in increasing numeric order when every
/// label is a non-negative integer, lexicographically otherwise.
LoadResult load_edge_list(std::istream& in);
LoadResult load_edge_list_string(std::string_view text);
LoadResult load_edge_list_file(const std::string& path);

/// Inverse of load_edge_list: directive, isolated-node declarations, then
/// one edge per line in canonical order using labels when present.
void write_edge_list(const Graph& g, std::ostream& out);
std::string to_edge_list_string(const Graph& g);

/// Returns a copy of g with the additions appended. Throws GraphError naming
/// the offending edge on duplicates (against g or within additions) and on
/// out-of-range ids.
Graph add_edges(const Graph& g, std::span<const Edge> additions);

}  // namespace observa

#endif  // OBSERVA_GRAPH_HPP_
