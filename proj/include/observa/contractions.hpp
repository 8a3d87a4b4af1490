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

#ifndef OBSERVA_CONTRACTIONS_HPP_
#define OBSERVA_CONTRACTIONS_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "observa/bipartite.hpp"
#include "observa/graph.hpp"
#include "observa/matching.hpp"

namespace observa {

enum class Side : std::uint8_t { kLeft, kRight };

struct AuxVertex {
  Side side = Side::kLeft;
  NodeId id = 0;

  friend auto operator<=>(const AuxVertex&, const AuxVertex&) = default;
};

struct AuxArc {
  AuxVertex from;
  AuxVertex to;

  friend auto operator<=>(const AuxArc&, const AuxArc&) = default;
};

/// The bipartite graph with matching edges reversed: a matched pair (l-, r+)
/// is the arc r+ -> l-, every other edge keeps l- -> r+.
///
/// A node i+ is reachable from unmatched j+ by an alternating path exactly
/// when i+ reaches j+ in this orientation (j+ <- l- over a free edge,
/// l- <- mate(l)+ over a matched one), so alternating reach is computed by
/// walking arcs backwards.
class AuxiliaryGraph {
 public:
  AuxiliaryGraph(const BipartiteGraph& base, Matching matching);

  const BipartiteGraph& base() const noexcept { return *base_; }
  const Matching& matching() const noexcept { return matching_; }

  /// All arcs, one per bipartite edge.
  std::vector<AuxArc> arcs() const;

  /// Right nodes reachable from `start` (usually unmatched) by alternating
  /// paths, `start` included. Ascending.
  std::vector<NodeId> alternating_reach(NodeId start) const;

 private:
  const BipartiteGraph* base_;
  Matching matching_;
};

/// Output of the contraction search.
///
/// contractions[i] belongs to unmatched[i]. A contraction is the set of
/// right nodes alternating-reachable from its unmatched node, merged with
/// every other unmatched node's reach set that overlaps it. Merged sets are
/// a property of the graph alone, and a set holding k unmatched nodes is
/// listed k times.
struct ContractionReport {
  std::size_t num_nodes = 0;
  std::size_t matching_size = 0;
  std::size_t structural_rank = 0;
  std::vector<NodeId> unmatched;
  std::vector<std::vector<NodeId>> contractions;
  /// Labels of `unmatched`, filled when the source graph carries labels.
  std::vector<std::string> unmatched_labels;
};

ContractionReport find_contractions(const Graph& g, std::uint64_t tiebreak_seed = 0);
ContractionReport find_contractions(const Graph& g, const BipartiteGraph& bg,
                                    const Matching& m);

/// One representative per contraction. picker_seed 0 returns the unmatched
/// nodes themselves; other seeds draw, for every distinct contraction set
/// listed k times, k distinct members of it. Ascending.
std::vector<NodeId> minimum_measurement_set(const ContractionReport& r,
                                            std::uint64_t picker_seed = 0);

struct Replacements {
  enum class Status { kNotCritical, kNoReplacement, kFound };
  Status status = Status::kNotCritical;
  std::vector<NodeId> candidates;
};

/// Nodes that can stand in for a failed measurement at `failed`: the union
/// of all contractions containing it, minus `failed`.
Replacements equivalent_replacements(const ContractionReport& r, NodeId failed);

struct ContractionStats {
  std::size_t count = 0;
  double mean_size = 0.0;
};

ContractionStats contraction_stats(const ContractionReport& r);

/// JSON document: matching_size, structural_rank, contractions as
/// {unmatched_node, members[]} records.
std::string to_json(const ContractionReport& r, int indent = 2);

}  // namespace observa

#endif  // OBSERVA_CONTRACTIONS_HPP_
