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

#include "observa/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace observa {

std::vector<std::vector<NodeId>> simple_adjacency(const Graph& g) {
  std::vector<std::vector<NodeId>> adj(g.num_nodes());
  for (const auto& e : g.edges()) {
    if (e.u == e.v) continue;
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& a : adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  return adj;
}

MetricsReport global_clustering(const Graph& g) {
  MetricsReport rep;
  rep.symmetrized = g.directed();
  rep.degenerate = g.num_nodes() < 3;
  const auto stats = degree_stats(g);
  rep.average_degree = stats.average_degree;
  rep.degree_histogram = stats.histogram;

  const auto adj = simple_adjacency(g);
  const std::size_t n = adj.size();
  for (const auto& a : adj) {
    std::uint64_t d = a.size();
    rep.open_triplets += d * (d - (d > 0 ? 1 : 0)) / 2;
  }

  // Orient each edge from lower to higher (degree, id) rank; every triangle
  // is then found exactly once at its lowest-ranked vertex.
  auto before = [&](NodeId a, NodeId b) {
    return adj[a].size() != adj[b].size() ? adj[a].size() < adj[b].size() : a < b;
  };
  std::vector<std::vector<NodeId>> out(n);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v : adj[u]) {
      if (before(u, v)) out[u].push_back(v);
    }
  }
  std::vector<char> mark(n, 0);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v : out[u]) mark[v] = 1;
    for (NodeId v : out[u]) {
      for (NodeId w : out[v]) rep.triangles += mark[w];
    }
    for (NodeId v : out[u]) mark[v] = 0;
  }

  if (rep.open_triplets > 0) {
    rep.gcc = 3.0 * static_cast<double>(rep.triangles) / static_cast<double>(rep.open_triplets);
  }
  return rep;
}

DegreeStats degree_stats(const Graph& g) {
  std::vector<std::size_t> degree(g.num_nodes(), 0);
  for (const auto& e : g.edges()) {
    ++degree[e.u];
    ++degree[e.v];
  }
  DegreeStats s;
  for (std::size_t d : degree) ++s.histogram[d];
  s.average_degree = 2.0 * static_cast<double>(g.num_edges()) / static_cast<double>(g.num_nodes());
  return s;
}

std::string loglog_histogram(const DegreeHistogram& histogram) {
  std::string out;
  char buf[64];
  for (const auto& [degree, count] : histogram) {
    if (degree == 0 || count == 0) continue;
    std::snprintf(buf, sizeof buf, "%.6g %.6g\n", std::log10(static_cast<double>(degree)),
                  std::log10(static_cast<double>(count)));
    out += buf;
  }
  return out;
}

}  // namespace observa
