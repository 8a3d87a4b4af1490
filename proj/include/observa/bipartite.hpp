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

#ifndef OBSERVA_BIPARTITE_HPP_
#define OBSERVA_BIPARTITE_HPP_

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "observa/graph.hpp"

namespace observa {

/// Edge (j-, i+) of the bipartite representation: left (sender) j, right
/// (receiver) i, one per system-graph arc j -> i.
struct BipartiteEdge {
  NodeId left = 0;
  NodeId right = 0;

  friend auto operator<=>(const BipartiteEdge&, const BipartiteEdge&) = default;
};

/// Two copies of the node set, V- (left) and V+ (right), each of size n.
/// Immutable; adjacency is kept in both directions, sorted.
class BipartiteGraph {
 public:
  BipartiteGraph(std::size_t n, std::vector<BipartiteEdge> edges);

  std::size_t size() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  std::span<const BipartiteEdge> edges() const noexcept { return edges_; }

  std::span<const NodeId> right_of(NodeId left) const;
  std::span<const NodeId> left_of(NodeId right) const;
  bool has_edge(BipartiteEdge e) const;

  friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_;
  std::vector<BipartiteEdge> edges_;
  std::vector<std::size_t> left_offsets_;
  std::vector<NodeId> left_adj_;
  std::vector<std::size_t> right_offsets_;
  std::vector<NodeId> right_adj_;
};

/// Arc j -> i becomes (j-, i+); an undirected edge {u, v} becomes both
/// (u-, v+) and (v-, u+); a self-loop (u, u) becomes (u-, u+).
BipartiteGraph to_bipartite(const Graph& g);

}  // namespace observa

#endif  // OBSERVA_BIPARTITE_HPP_
