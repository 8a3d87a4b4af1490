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

#include "observa/grid.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "observa/bipartite.hpp"
#include "observa/format.hpp"
#include "observa/matching.hpp"
#include "observa/random.hpp"

namespace observa {
namespace {

using u128 = unsigned __int128;

GridRow row_of(const Graph& g, std::uint64_t seed) {
  const GridAnalysis a = analyze_grid(g, seed);
  return {g.num_edges(), a.metrics.average_degree, a.metrics.gcc, a.contractions.contractions.size()};
}

// Left and right nodes that some maximum matching leaves free, found by
// alternating search from the free nodes of m (m must be maximum).
struct FreeableSets {
  std::vector<char> right;
  std::vector<char> left;
};

FreeableSets freeable(const BipartiteGraph& bg, const Matching& m) {
  const std::size_t n = bg.size();
  FreeableSets s{std::vector<char>(n, 0), std::vector<char>(n, 0)};
  std::vector<NodeId> stack;
  for (NodeId r = 0; r < n; ++r) {
    if (!m.right_matched(r)) {
      s.right[r] = 1;
      stack.push_back(r);
    }
  }
  while (!stack.empty()) {
    NodeId r = stack.back();
    stack.pop_back();
    for (NodeId l : bg.left_of(r)) {
      NodeId next = m.mate_of_left(l);
      if (next == Matching::kNone || next == r || s.right[next]) continue;
      s.right[next] = 1;
      stack.push_back(next);
    }
  }
  for (NodeId l = 0; l < n; ++l) {
    if (!m.left_matched(l)) {
      s.left[l] = 1;
      stack.push_back(l);
    }
  }
  while (!stack.empty()) {
    NodeId l = stack.back();
    stack.pop_back();
    for (NodeId r : bg.right_of(l)) {
      NodeId next = m.mate_of_right(r);
      if (next == Matching::kNone || next == l || s.left[next]) continue;
      s.left[next] = 1;
      stack.push_back(next);
    }
  }
  return s;
}

void apply_path(Matching& m, std::span<const BipartiteEdge> path) {
  for (std::size_t i = 1; i < path.size(); i += 2) m.unmatch_left(path[i].left);
  for (std::size_t i = 0; i < path.size(); i += 2) m.match(path[i]);
}

// Grows m to a maximum matching of bg (+ extra) and returns the number of
// augmentations, stopping after `limit`.
std::size_t saturate(const BipartiteGraph& bg, Matching& m, std::span<const BipartiteEdge> extra,
                     std::size_t limit) {
  std::size_t gained = 0;
  while (gained < limit) {
    auto path = find_augmenting_path(bg, m, extra);
    if (!path) break;
    apply_path(m, *path);
    ++gained;
  }
  return gained;
}

struct Candidate {
  Edge edge;
  std::uint64_t triangles = 0;  // after adding
  std::uint64_t triplets = 0;   // after adding
  std::uint64_t key = 0;
  std::size_t reduction = 0;
};

// Higher GCC first, then higher tiebreak key, then lower edge.
bool better_gcc(const Candidate& a, const Candidate& b) {
  u128 lhs = u128(a.triangles) * b.triplets, rhs = u128(b.triangles) * a.triplets;
  if (lhs != rhs) return lhs > rhs;
  if (a.key != b.key) return a.key > b.key;
  return a.edge < b.edge;
}

std::size_t common_count(const std::vector<NodeId>& a, const std::vector<NodeId>& b) {
  std::size_t count = 0;
  auto i = a.begin(), j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

}  // namespace

GridAnalysis analyze_grid(const Graph& g, std::uint64_t tiebreak_seed) {
  return {find_contractions(g, tiebreak_seed), global_clustering(g)};
}

EdgeSuggestion suggest_edge_additions(const Graph& g, std::size_t budget,
                                      std::uint64_t strategy_seed, const SuggestOptions& options) {
  if (g.directed()) throw GraphError("edge suggestions need an undirected graph");
  if (budget < 1) throw std::invalid_argument("budget must be >= 1");

  const std::size_t n = g.num_nodes();
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  auto adj = simple_adjacency(g);
  const MetricsReport start = global_clustering(g);
  std::uint64_t triangles = start.triangles, triplets = start.open_triplets;

  BipartiteGraph bg = to_bipartite(g);
  Matching m = maximum_matching(bg, strategy_seed);

  EdgeSuggestion out;
  out.unmatched_trajectory.push_back(n - m.size());
  out.gcc_trajectory.push_back(start.gcc);

  auto adjacent = [&](NodeId a, NodeId b) {
    return std::binary_search(adj[a].begin(), adj[a].end(), b);
  };

  while (out.edges.size() < budget) {
    const FreeableSets sets = freeable(bg, m);

    std::vector<Edge> pairs;
    if (options.full_scan) {
      for (NodeId u = 0; u < n; ++u) {
        for (NodeId w = u + 1; w < n; ++w) {
          if (!adjacent(u, w)) pairs.push_back({u, w});
        }
      }
    } else {
      for (NodeId x = 0; x < n; ++x) {
        if (!sets.right[x]) continue;
        for (NodeId c : adj[x]) {
          for (NodeId y : adj[c]) {
            if (y != x && !adjacent(x, y)) pairs.push_back({std::min(x, y), std::max(x, y)});
          }
        }
      }
      std::sort(pairs.begin(), pairs.end());
      pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    }
    if (pairs.empty()) {
      out.notice = "candidate edges exhausted after " + std::to_string(out.edges.size()) + " additions";
      break;
    }

    std::vector<Candidate> matching_gain;
    std::optional<Candidate> best_plain;
    for (Edge e : pairs) {
      Candidate c;
      c.edge = e;
      c.triangles = triangles + common_count(adj[e.u], adj[e.v]);
      c.triplets = triplets + adj[e.u].size() + adj[e.v].size();
      c.key = hash_words({strategy_seed, e.u, e.v});
      bool can_augment = (sets.right[e.v] && sets.left[e.u]) || (sets.right[e.u] && sets.left[e.v]);
      if (can_augment) {
        matching_gain.push_back(c);
      } else if (!best_plain || better_gcc(c, *best_plain)) {
        best_plain = c;
      }
    }

    // Exact gain for augmenting candidates, best GCC first; a gain of 2 is the
    // most one undirected edge can give, so the first one found wins.
    std::sort(matching_gain.begin(), matching_gain.end(), better_gcc);
    std::optional<Candidate> best_gain;
    for (auto& c : matching_gain) {
      const BipartiteEdge extra[] = {{c.edge.u, c.edge.v}, {c.edge.v, c.edge.u}};
      Matching trial = m;
      c.reduction = saturate(bg, trial, extra, 2);
      if (c.reduction == 0) {
        if (!best_plain || better_gcc(c, *best_plain)) best_plain = c;
        continue;
      }
      if (!best_gain || c.reduction > best_gain->reduction) best_gain = c;
      if (c.reduction == 2) break;
    }

    Candidate chosen;
    if (best_gain) {
      chosen = *best_gain;
    } else {
      const auto& c = *best_plain;
      bool raises = triplets == 0 ? c.triangles > 0
                                  : u128(c.triangles) * triplets > u128(triangles) * c.triplets;
      if (!raises) {
        out.notice = "no candidate lowers the unmatched count or raises GCC after " +
                     std::to_string(out.edges.size()) + " additions";
        break;
      }
      chosen = c;
    }

    const Edge e = chosen.edge;
    triangles = chosen.triangles;
    triplets = chosen.triplets;
    adj[e.u].insert(std::lower_bound(adj[e.u].begin(), adj[e.u].end(), e.v), e.v);
    adj[e.v].insert(std::lower_bound(adj[e.v].begin(), adj[e.v].end(), e.u), e.u);
    edges.push_back(e);
    out.edges.push_back(e);

    bg = to_bipartite(Graph(n, false, edges));
    saturate(bg, m, {}, 2);
    out.unmatched_trajectory.push_back(n - m.size());
    out.gcc_trajectory.push_back(triplets == 0 ? 0.0 : 3.0 * double(triangles) / double(triplets));
  }
  if (out.notice.empty() && out.edges.size() < budget) {
    out.notice = "stopped after " + std::to_string(out.edges.size()) + " additions";
  }
  return out;
}

GridComparison compare(const Graph& g, std::span<const Edge> additions,
                       std::uint64_t tiebreak_seed) {
  GridComparison c;
  c.before = row_of(g, tiebreak_seed);
  c.after = additions.empty() ? c.before : row_of(add_edges(g, additions), tiebreak_seed);
  c.added_edges.assign(additions.begin(), additions.end());
  return c;
}

std::string comparison_table(const GridComparison& c) {
  std::string out = "        links  average degree         GCC  contractions\n";
  char buf[128];
  for (const auto* r : {&c.before, &c.after}) {
    std::snprintf(buf, sizeof buf, "%13zu %15s %11s %13zu\n", r->links,
                  format_sig6(r->average_degree).c_str(), format_sig6(r->gcc).c_str(),
                  r->num_contractions);
    out += buf;
  }
  return out;
}

std::string comparison_csv(const GridComparison& c) {
  std::string out = "row,links,average_degree,gcc,num_contractions\n";
  auto line = [&](const char* name, const GridRow& r) {
    out += std::string(name) + ',' + std::to_string(r.links) + ',' + format_sig6(r.average_degree) +
           ',' + format_sig6(r.gcc) + ',' + std::to_string(r.num_contractions) + '\n';
  };
  line("before", c.before);
  line("after", c.after);
  return out;
}

}  // namespace observa
