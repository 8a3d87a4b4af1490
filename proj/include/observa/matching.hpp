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

#ifndef OBSERVA_MATCHING_HPP_
#define OBSERVA_MATCHING_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "observa/bipartite.hpp"

namespace observa {

class MatchingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Pairwise-disjoint set of bipartite edges, stored as two mutually inverse
/// partner maps.
class Matching {
 public:
  static constexpr NodeId kNone = std::numeric_limits<NodeId>::max();

  explicit Matching(std::size_t n) : left_(n, kNone), right_(n, kNone) {}

  /// Throws MatchingError if two pairs share an endpoint or an id is >= n.
  static Matching from_pairs(std::size_t n, std::span<const BipartiteEdge> pairs);

  std::size_t num_nodes() const noexcept { return left_.size(); }
  std::size_t size() const noexcept { return size_; }

  NodeId mate_of_left(NodeId left) const { return left_[left]; }
  NodeId mate_of_right(NodeId right) const { return right_[right]; }
  bool left_matched(NodeId left) const { return left_[left] != kNone; }
  bool right_matched(NodeId right) const { return right_[right] != kNone; }
  bool contains(BipartiteEdge e) const {
    return e.left < left_.size() && left_[e.left] == e.right;
  }

  /// Pairs sorted by left endpoint.
  std::vector<BipartiteEdge> pairs() const;

  /// Throws MatchingError if either endpoint is already matched.
  void match(BipartiteEdge e);
  void unmatch_left(NodeId left);

  /// Same node count and every pair is an edge of bg.
  bool is_valid_for(const BipartiteGraph& bg) const;

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  std::vector<NodeId> left_;
  std::vector<NodeId> right_;
  std::size_t size_ = 0;
};

/// Maximum cardinality matching by Hopcroft-Karp phases, O(sqrt(V) E).
///
/// tiebreak_seed 0 explores left vertices and their neighbours in ascending
/// id order; any other seed shuffles both orders with Rng(tiebreak_seed).
/// The cardinality never depends on the seed, the chosen pairs may.
Matching maximum_matching(const BipartiteGraph& bg, std::uint64_t tiebreak_seed = 0);

/// An augmenting path given as its edges in order: edges 0, 2, 4, ... lie
/// outside m, edges 1, 3, ... inside m, consecutive edges share one node and
/// both terminal nodes are unmatched. Returns m XOR path.
Matching augment(const BipartiteGraph& bg, const Matching& m,
                 std::span<const BipartiteEdge> path);

/// Shortest augmenting path from any unmatched right node, if one exists.
/// `extra` lists edges treated as present in addition to those of bg.
std::optional<std::vector<BipartiteEdge>> find_augmenting_path(
    const BipartiteGraph& bg, const Matching& m, std::span<const BipartiteEdge> extra = {});

/// Unmatched right nodes (the set that must be measured), ascending.
std::vector<NodeId> unmatched_right(const Matching& m, const BipartiteGraph& bg);
std::vector<NodeId> unmatched_left(const Matching& m, const BipartiteGraph& bg);

}  // namespace observa

#endif  // OBSERVA_MATCHING_HPP_
