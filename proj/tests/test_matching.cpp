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

#include "doctest.h"

#include "catalog.hpp"
#include "observa/bipartite.hpp"
#include "observa/matching.hpp"
#include "oracles.hpp"

using namespace observa;

namespace {

bool is_matching_of(const Matching& m, const BipartiteGraph& bg) {
  if (!m.is_valid_for(bg)) return false;
  std::size_t count = 0;
  for (NodeId l = 0; l < bg.size(); ++l) {
    if (!m.left_matched(l)) continue;
    ++count;
    if (m.mate_of_right(m.mate_of_left(l)) != l) return false;
  }
  return count == m.size();
}

}  // namespace

TEST_CASE("maximum_matching: small examples") {
  SUBCASE("directed 3-cycle is perfectly matched") {
    auto bg = to_bipartite(catalog::cycle(3, true));
    auto m = maximum_matching(bg);
    CHECK(m.size() == 3);
    CHECK(unmatched_right(m, bg).empty());
  }
  SUBCASE("star K1,3") {
    auto bg = to_bipartite(catalog::star(3));
    // Exhaustive enumeration over the 6-edge bipartite graph.
    CHECK(oracle::all_maximum_matchings(catalog::star(3)).size == 2);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      auto m = maximum_matching(bg, seed);
      CHECK(m.size() == 2);
      CHECK(unmatched_right(m, bg).size() == 2);
    }
  }
  SUBCASE("no edges") {
    auto bg = to_bipartite(Graph(4, false, {}));
    CHECK(maximum_matching(bg).size() == 0);
    CHECK(unmatched_right(maximum_matching(bg), bg).size() == 4);
  }
}

TEST_CASE("K1,3: the set of unmatched right nodes over all maximum matchings") {
  // Every maximum matching leaves exactly two right nodes free; the centre
  // is always matched (its only in-neighbours are the leaves).
  auto mm = oracle::all_maximum_matchings(catalog::star(3));
  for (const auto& mates : mm.right_mates) {
    std::size_t free_count = 0;
    for (int mate : mates) free_count += mate == -1;
    CHECK(free_count == 2);
    CHECK(mates[0] != -1);
  }
}

TEST_CASE("augment") {
  SUBCASE("single edge from the empty matching") {
    BipartiteGraph bg(2, {{0, 1}});
    Matching m(2);
    std::vector<BipartiteEdge> path{{0, 1}};
    auto out = augment(bg, m, path);
    CHECK(out.size() == 1);
    CHECK(out.contains({0, 1}));
  }
  SUBCASE("K1,3: second edge") {
    auto bg = to_bipartite(catalog::star(3));
    auto m = Matching::from_pairs(4, std::vector<BipartiteEdge>{{0, 1}});
    std::vector<BipartiteEdge> path{{2, 0}};
    auto out = augment(bg, m, path);
    CHECK(out.size() == 2);
    CHECK(is_matching_of(out, bg));
    CHECK_FALSE(find_augmenting_path(bg, out).has_value());
  }
  SUBCASE("three-edge path through a matched pair") {
    // Undirected path 0-1-2-3 with (1-, 2+) matched: 0+ .. 1- = 2+ .. 3-.
    auto bg = to_bipartite(catalog::path(4));
    auto m = Matching::from_pairs(4, std::vector<BipartiteEdge>{{1, 2}});
    std::vector<BipartiteEdge> path{{1, 0}, {1, 2}, {3, 2}};
    auto out = augment(bg, m, path);
    CHECK(out.size() == 2);
    CHECK(out.contains({1, 0}));
    CHECK(out.contains({3, 2}));
    CHECK_FALSE(out.contains({1, 2}));
  }
  SUBCASE("rejections") {
    auto bg = to_bipartite(catalog::star(3));
    auto m = Matching::from_pairs(4, std::vector<BipartiteEdge>{{0, 1}});
    std::vector<BipartiteEdge> matched_edge{{0, 1}};
    CHECK_THROWS_AS(augment(bg, m, matched_edge), MatchingError);
    std::vector<BipartiteEdge> not_edge{{1, 2}};
    CHECK_THROWS_AS(augment(bg, m, not_edge), MatchingError);
    std::vector<BipartiteEdge> even{{2, 0}, {0, 1}};
    CHECK_THROWS_AS(augment(bg, m, even), MatchingError);
    // 0- is matched, so (0-, 2+) cannot start a path.
    std::vector<BipartiteEdge> matched_end{{0, 2}};
    CHECK_THROWS_AS(augment(bg, m, matched_end), MatchingError);
    CHECK_THROWS_AS(augment(bg, m, std::vector<BipartiteEdge>{}), MatchingError);
  }
  SUBCASE("maximum matchings admit no augmenting path") {
    for (std::uint64_t s = 0; s < 50; ++s) {
      auto bg = to_bipartite(catalog::random_small(s, 10));
      CHECK_FALSE(find_augmenting_path(bg, maximum_matching(bg, s)).has_value());
    }
  }
}

TEST_CASE("matching invariants") {
  CHECK_THROWS_AS(Matching::from_pairs(3, std::vector<BipartiteEdge>{{0, 1}, {0, 2}}),
                  MatchingError);
  CHECK_THROWS_AS(Matching::from_pairs(3, std::vector<BipartiteEdge>{{0, 1}, {2, 1}}),
                  MatchingError);
  auto bg = to_bipartite(catalog::cycle(3, true));
  CHECK_THROWS_AS(unmatched_right(Matching(4), bg), MatchingError);
  CHECK_FALSE(Matching::from_pairs(3, std::vector<BipartiteEdge>{{1, 0}}).is_valid_for(bg));
}

TEST_CASE("property: cardinality equals brute force and ignores the seed") {
  for (const auto& [name, g] : catalog::small_suite(200)) {
    CAPTURE(name);
    auto bg = to_bipartite(g);
    const std::size_t want = oracle::all_maximum_matchings(g).size;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      auto m = maximum_matching(bg, seed);
      CHECK(m.size() == want);
      CHECK(is_matching_of(m, bg));
      CHECK(unmatched_right(m, bg).size() == g.num_nodes() - m.size());
    }
  }
}

TEST_CASE("property: larger random graphs are saturated") {
  for (std::uint64_t s = 0; s < 30; ++s) {
    Rng rng(s);
    const std::size_t n = 50 + rng.below(200);
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < 2 * n; ++k) {
      edges.push_back({static_cast<NodeId>(rng.below(n)), static_cast<NodeId>(rng.below(n))});
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    Graph g(n, true, edges);
    auto bg = to_bipartite(g);
    auto m0 = maximum_matching(bg, 0);
    auto m1 = maximum_matching(bg, s + 1);
    CHECK(m0.size() == m1.size());
    CHECK_FALSE(find_augmenting_path(bg, m0).has_value());
    CHECK_FALSE(find_augmenting_path(bg, m1).has_value());
  }
}
