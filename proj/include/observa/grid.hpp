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

#ifndef OBSERVA_GRID_HPP_
#define OBSERVA_GRID_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "observa/contractions.hpp"
#include "observa/graph.hpp"
#include "observa/metrics.hpp"

namespace observa {

struct GridAnalysis {
  ContractionReport contractions;
  MetricsReport metrics;
};

/// Sensor-placement view of an infrastructure graph: the unmatched nodes
/// (labelled with the graph's own ids) are the mandatory sensor sites.
GridAnalysis analyze_grid(const Graph& g, std::uint64_t tiebreak_seed = 0);

struct SuggestOptions {
  /// Consider every non-adjacent pair instead of distance-2 pairs touching a
  /// contraction. Quadratic; meant for small graphs.
  bool full_scan = false;
};

struct EdgeSuggestion {
  std::vector<Edge> edges;
  /// Unmatched count before any addition and after each accepted edge.
  std::vector<std::size_t> unmatched_trajectory;
  /// GCC before any addition and after each accepted edge.
  std::vector<double> gcc_trajectory;
  /// Set when fewer than `budget` edges were returned.
  std::string notice;
};

/// Greedy GCC-raising edge additions for an undirected graph.
///
/// Each round scores every candidate pair {u, w} (not adjacent, u != w; by
/// default at distance 2 with an endpoint in some contraction) by the drop in
/// unmatched count it causes, then by the resulting GCC, then by
/// hash_words({strategy_seed, u, w}). The best candidate is added unless it
/// neither lowers the unmatched count nor raises the GCC, which ends the
/// search. Throws GraphError for directed graphs and ConfigError-like
/// std::invalid_argument for budget 0.
EdgeSuggestion suggest_edge_additions(const Graph& g, std::size_t budget,
                                      std::uint64_t strategy_seed = 0,
                                      const SuggestOptions& options = {});

struct GridRow {
  std::size_t links = 0;
  double average_degree = 0.0;
  double gcc = 0.0;
  std::size_t num_contractions = 0;

  friend bool operator==(const GridRow&, const GridRow&) = default;
};

struct GridComparison {
  GridRow before;
  GridRow after;
  std::vector<Edge> added_edges;
};

GridComparison compare(const Graph& g, std::span<const Edge> additions,
                       std::uint64_t tiebreak_seed = 0);

/// "links  average degree  GCC  contractions" table, one row each.
std::string comparison_table(const GridComparison& c);
std::string comparison_csv(const GridComparison& c);

}  // namespace observa

#endif  // OBSERVA_GRID_HPP_
