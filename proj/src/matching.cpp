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

#include "observa/matching.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "observa/random.hpp"

namespace observa {
namespace {

std::string show(BipartiteEdge e) {
  return "(" + std::to_string(e.left) + "-, " + std::to_string(e.right) + "+)";
}

constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();

// Per-run exploration order. Seed 0 keeps the graph's sorted order.
struct SearchOrder {
  std::vector<NodeId> lefts;
  std::vector<std::size_t> offsets;
  std::vector<NodeId> adj;

  SearchOrder(const BipartiteGraph& bg, std::uint64_t seed) : lefts(bg.size()) {
    const std::size_t n = bg.size();
    std::iota(lefts.begin(), lefts.end(), NodeId{0});
    offsets.assign(n + 1, 0);
    adj.reserve(bg.num_edges());
    for (NodeId l = 0; l < n; ++l) {
      auto r = bg.right_of(l);
      adj.insert(adj.end(), r.begin(), r.end());
      offsets[l + 1] = adj.size();
    }
    if (seed == 0) return;
    Rng rng(seed);
    rng.shuffle(std::span<NodeId>(lefts));
    for (NodeId l = 0; l < n; ++l) {
      rng.shuffle(std::span<NodeId>(adj).subspan(offsets[l], offsets[l + 1] - offsets[l]));
    }
  }

  std::span<const NodeId> neighbors(NodeId l) const {
    return std::span<const NodeId>(adj).subspan(offsets[l], offsets[l + 1] - offsets[l]);
  }
};

}  // namespace

Matching Matching::from_pairs(std::size_t n, std::span<const BipartiteEdge> pairs) {
  Matching m(n);
  for (const auto& e : pairs) m.match(e);
  return m;
}

std::vector<BipartiteEdge> Matching::pairs() const {
  std::vector<BipartiteEdge> out;
  out.reserve(size_);
  for (NodeId l = 0; l < left_.size(); ++l) {
    if (left_[l] != kNone) out.push_back({l, left_[l]});
  }
  return out;
}

void Matching::match(BipartiteEdge e) {
  if (e.left >= left_.size() || e.right >= right_.size()) {
    throw MatchingError("pair " + show(e) + " out of range");
  }
  if (left_[e.left] != kNone || right_[e.right] != kNone) {
    throw MatchingError("pair " + show(e) + " shares an endpoint with the matching");
  }
  left_[e.left] = e.right;
  right_[e.right] = e.left;
  ++size_;
}

void Matching::unmatch_left(NodeId left) {
  NodeId r = left_[left];
  if (r == kNone) return;
  left_[left] = kNone;
  right_[r] = kNone;
  --size_;
}

bool Matching::is_valid_for(const BipartiteGraph& bg) const {
  if (bg.size() != left_.size()) return false;
  for (NodeId l = 0; l < left_.size(); ++l) {
    if (left_[l] != kNone && !bg.has_edge({l, left_[l]})) return false;
  }
  return true;
}

Matching maximum_matching(const BipartiteGraph& bg, std::uint64_t tiebreak_seed) {
  const std::size_t n = bg.size();
  const SearchOrder order(bg, tiebreak_seed);
  std::vector<NodeId> mate_l(n, Matching::kNone), mate_r(n, Matching::kNone);
  std::vector<std::uint32_t> dist(n);
  std::vector<NodeId> queue;
  queue.reserve(n);

  // Layers left vertices by alternating distance from the free ones; returns
  // whether some free right vertex is reachable.
  auto bfs = [&] {
    queue.clear();
    for (NodeId l : order.lefts) {
      if (mate_l[l] == Matching::kNone) {
        dist[l] = 0;
        queue.push_back(l);
      } else {
        dist[l] = kInf;
      }
    }
    bool found = false;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      NodeId l = queue[head];
      for (NodeId r : order.neighbors(l)) {
        NodeId next = mate_r[r];
        if (next == Matching::kNone) {
          found = true;
        } else if (dist[next] == kInf) {
          dist[next] = dist[l] + 1;
          queue.push_back(next);
        }
      }
    }
    return found;
  };

  std::vector<std::size_t> cursor(n);
  std::vector<NodeId> stack;
  // Iterative layered DFS from a free left vertex; augments on success.
  auto dfs = [&](NodeId root) {
    stack.assign(1, root);
    while (!stack.empty()) {
      NodeId l = stack.back();
      auto nbrs = order.neighbors(l);
      bool advanced = false;
      while (cursor[l] < nbrs.size()) {
        NodeId r = nbrs[cursor[l]];
        NodeId next = mate_r[r];
        if (next == Matching::kNone) {
          // Flip the path root .. l, ending at free r.
          NodeId right = r;
          for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
            NodeId left = *it;
            NodeId prev = mate_l[left];
            mate_l[left] = right;
            mate_r[right] = left;
            right = prev;
          }
          return true;
        }
        if (dist[next] == dist[l] + 1) {
          stack.push_back(next);
          advanced = true;
          break;
        }
        ++cursor[l];
      }
      if (!advanced) {
        dist[l] = kInf;
        stack.pop_back();
        if (!stack.empty()) ++cursor[stack.back()];
      }
    }
    return false;
  };

  while (bfs()) {
    std::fill(cursor.begin(), cursor.end(), 0);
    for (NodeId l : order.lefts) {
      if (mate_l[l] == Matching::kNone) dfs(l);
    }
  }

  Matching m(n);
  for (NodeId l = 0; l < n; ++l) {
    if (mate_l[l] != Matching::kNone) m.match({l, mate_l[l]});
  }
  return m;
}

Matching augment(const BipartiteGraph& bg, const Matching& m,
                 std::span<const BipartiteEdge> path) {
  if (path.empty() || path.size() % 2 == 0) {
    throw MatchingError("augmenting path must have an odd, nonzero number of edges");
  }
  for (std::size_t i = 0; i < path.size(); ++i) {
    const auto& e = path[i];
    if (!bg.has_edge(e)) throw MatchingError("path edge " + show(e) + " is not in the graph");
    bool in_m = m.contains(e);
    if (in_m != (i % 2 == 1)) {
      throw MatchingError("path is not alternating at edge " + std::to_string(i) + " " + show(e));
    }
    if (i + 1 < path.size()) {
      const auto& f = path[i + 1];
      bool share_left = e.left == f.left, share_right = e.right == f.right;
      if (share_left == share_right) {
        throw MatchingError("path edges " + show(e) + " and " + show(f) +
                            " do not share exactly one node");
      }
    }
  }
  // Terminal nodes: the endpoint of the first/last edge not shared with its
  // neighbour on the path.
  auto check_free = [&](const BipartiteEdge& end, const BipartiteEdge* inner) {
    bool left_free_side = inner == nullptr || inner->right == end.right;
    bool right_free_side = inner == nullptr || inner->left == end.left;
    if (left_free_side && m.left_matched(end.left)) {
      throw MatchingError("path endpoint " + std::to_string(end.left) + "- is matched");
    }
    if (right_free_side && m.right_matched(end.right)) {
      throw MatchingError("path endpoint " + std::to_string(end.right) + "+ is matched");
    }
  };
  check_free(path.front(), path.size() > 1 ? &path[1] : nullptr);
  check_free(path.back(), path.size() > 1 ? &path[path.size() - 2] : nullptr);

  Matching out = m;
  for (std::size_t i = 1; i < path.size(); i += 2) out.unmatch_left(path[i].left);
  for (std::size_t i = 0; i < path.size(); i += 2) out.match(path[i]);
  return out;
}

std::optional<std::vector<BipartiteEdge>> find_augmenting_path(
    const BipartiteGraph& bg, const Matching& m, std::span<const BipartiteEdge> extra) {
  const std::size_t n = bg.size();
  // parent_of_left[l] = right node from which l was entered.
  std::vector<NodeId> parent_of_left(n, Matching::kNone);
  std::vector<char> seen_right(n, 0);
  std::vector<NodeId> queue;
  for (NodeId r = 0; r < n; ++r) {
    if (!m.right_matched(r)) {
      seen_right[r] = 1;
      queue.push_back(r);
    }
  }
  std::vector<NodeId> lefts;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    NodeId r = queue[head];
    auto base = bg.left_of(r);
    lefts.assign(base.begin(), base.end());
    for (const auto& e : extra) {
      if (e.right == r) lefts.push_back(e.left);
    }
    for (NodeId l : lefts) {
      if (m.mate_of_right(r) == l || parent_of_left[l] != Matching::kNone) continue;
      parent_of_left[l] = r;
      if (!m.left_matched(l)) {
        std::vector<BipartiteEdge> path;
        NodeId cur = l;
        while (true) {
          NodeId from = parent_of_left[cur];
          path.push_back({cur, from});
          NodeId back = m.mate_of_right(from);
          if (back == Matching::kNone) break;
          path.push_back({back, from});
          cur = back;
        }
        std::reverse(path.begin(), path.end());
        return path;
      }
      NodeId next = m.mate_of_left(l);
      if (!seen_right[next]) {
        seen_right[next] = 1;
        queue.push_back(next);
      }
    }
  }
  return std::nullopt;
}

std::vector<NodeId> unmatched_right(const Matching& m, const BipartiteGraph& bg) {
  if (m.num_nodes() != bg.size()) {
    throw MatchingError("matching has " + std::to_string(m.num_nodes()) +
                        " nodes per side, graph has " + std::to_string(bg.size()));
  }
  std::vector<NodeId> out;
  for (NodeId r = 0; r < bg.size(); ++r) {
    if (!m.right_matched(r)) out.push_back(r);
  }
  return out;
}

std::vector<NodeId> unmatched_left(const Matching& m, const BipartiteGraph& bg) {
  if (m.num_nodes() != bg.size()) {
    throw MatchingError("matching has " + std::to_string(m.num_nodes()) +
                        " nodes per side, graph has " + std::to_string(bg.size()));
  }
  std::vector<NodeId> out;
  for (NodeId l = 0; l < bg.size(); ++l) {
    if (!m.left_matched(l)) out.push_back(l);
  }
  return out;
}

}  // namespace observa
