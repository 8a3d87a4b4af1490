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

#include "observa/bipartite.hpp"

#include <algorithm>
#include <string>

namespace observa {
namespace {

void build_csr(std::size_t n, const std::vector<BipartiteEdge>& edges, bool by_left,
               std::vector<std::size_t>& offsets, std::vector<NodeId>& adj) {
  offsets.assign(n + 1, 0);
  for (const auto& e : edges) ++offsets[(by_left ? e.left : e.right) + 1];
  for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
  adj.resize(edges.size());
  std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
  // edges are sorted by (left, right), so per-left lists come out sorted;
  // per-right lists are filled in increasing left order, also sorted.
  for (const auto& e : edges) {
    if (by_left) {
      adj[fill[e.left]++] = e.right;
    } else {
      adj[fill[e.right]++] = e.left;
    }
  }
}

}  // namespace

BipartiteGraph::BipartiteGraph(std::size_t n, std::vector<BipartiteEdge> edges)
    : n_(n), edges_(std::move(edges)) {
  for (const auto& e : edges_) {
    if (e.left >= n_ || e.right >= n_) {
      throw GraphError("bipartite edge (" + std::to_string(e.left) + "-, " +
                       std::to_string(e.right) + "+) out of range");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  build_csr(n_, edges_, true, left_offsets_, left_adj_);
  build_csr(n_, edges_, false, right_offsets_, right_adj_);
}

std::span<const NodeId> BipartiteGraph::right_of(NodeId left) const {
  return std::span<const NodeId>(left_adj_).subspan(
      left_offsets_[left], left_offsets_[left + 1] - left_offsets_[left]);
}

std::span<const NodeId> BipartiteGraph::left_of(NodeId right) const {
  return std::span<const NodeId>(right_adj_).subspan(
      right_offsets_[right], right_offsets_[right + 1] - right_offsets_[right]);
}

bool BipartiteGraph::has_edge(BipartiteEdge e) const {
  if (e.left >= n_ || e.right >= n_) return false;
  auto r = right_of(e.left);
  return std::binary_search(r.begin(), r.end(), e.right);
}

BipartiteGraph to_bipartite(const Graph& g) {
  std::vector<BipartiteEdge> edges;
  edges.reserve(g.directed() ? g.num_edges() : 2 * g.num_edges());
  for (const auto& e : g.edges()) {
    edges.push_back({e.u, e.v});
    if (!g.directed() && e.u != e.v) edges.push_back({e.v, e.u});
  }
  return BipartiteGraph(g.num_nodes(), std::move(edges));
}

}  // namespace observa
