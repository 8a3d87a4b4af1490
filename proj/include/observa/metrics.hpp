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

#ifndef OBSERVA_METRICS_HPP_
#define OBSERVA_METRICS_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>

#include "observa/graph.hpp"

namespace observa {

using DegreeHistogram = std::map<std::size_t, std::size_t>;

struct MetricsReport {
  double gcc = 0.0;
  std::uint64_t triangles = 0;
  /// Connected triplets counted at their centre: sum over v of C(deg v, 2).
  std::uint64_t open_triplets = 0;
  double average_degree = 0.0;
  DegreeHistogram degree_histogram;
  /// Fewer than three nodes.
  bool degenerate = false;
  /// Input was directed and was symmetrized first.
  bool symmetrized = false;
};

/// Global clustering coefficient 3 * triangles / triplets (0 without
/// triplets). Self-loops take no part in triangles or triplets.
MetricsReport global_clustering(const Graph& g);

struct DegreeStats {
  double average_degree = 0.0;
  DegreeHistogram histogram;
};

/// Degree is the number of incident edge ends (a self-loop adds 2); for a
/// directed graph that is in-degree plus out-degree. Mean is 2|E| / n.
DegreeStats degree_stats(const Graph& g);

/// "log10(degree) log10(count)" lines, degree 0 skipped.
std::string loglog_histogram(const DegreeHistogram& histogram);

/// Simple undirected adjacency (no loops, no parallel edges), sorted.
/// Directed inputs are symmetrized.
std::vector<std::vector<NodeId>> simple_adjacency(const Graph& g);

}  // namespace observa

#endif  // OBSERVA_METRICS_HPP_
