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
#include "observa/metrics.hpp"
#include "oracles.hpp"

using namespace observa;

TEST_CASE("global_clustering: exact small cases") {
  auto k3 = global_clustering(catalog::complete(3));
  CHECK(k3.gcc == 1.0);
  CHECK(k3.triangles == 1);
  CHECK(k3.open_triplets == 3);

  auto p3 = global_clustering(catalog::path(3));
  CHECK(p3.triangles == 0);
  CHECK(p3.open_triplets == 1);
  CHECK(p3.gcc == 0.0);

  CHECK(global_clustering(catalog::complete(4)).gcc == 1.0);
  CHECK(global_clustering(catalog::complete(4)).triangles == 4);
  CHECK(global_clustering(catalog::cycle(5)).gcc == 0.0);
  CHECK(global_clustering(catalog::star(3)).gcc == 0.0);
}

TEST_CASE("global_clustering: degenerate and directed inputs") {
  auto tiny = global_clustering(Graph(2, false, {{0, 1}}));
  CHECK(tiny.degenerate);
  CHECK(tiny.gcc == 0.0);

  auto directed = global_clustering(catalog::cycle(3, true));
  CHECK(directed.symmetrized);
  CHECK(directed.gcc == 1.0);

  // Both arcs of a 2-cycle collapse to one undirected edge.
  Graph both(3, true, {{0, 1}, {1, 0}, {1, 2}, {2, 0}});
  CHECK(global_clustering(both).triangles == 1);
}

TEST_CASE("global_clustering: self-loops ignored") {
  Graph g(3, false, {{0, 0}, {0, 1}, {1, 2}, {0, 2}});
  auto m = global_clustering(g);
  CHECK(m.triangles == 1);
  CHECK(m.open_triplets == 3);
  CHECK(m.gcc == 1.0);
  // ...but a loop adds 2 to its node's degree.
  CHECK(m.average_degree == doctest::Approx(8.0 / 3.0));
  CHECK(m.degree_histogram.at(4) == 1);
}

TEST_CASE("degree_stats") {
  auto k3 = degree_stats(catalog::complete(3));
  CHECK(k3.average_degree == 2.0);
  CHECK(k3.histogram.at(2) == 3);
  auto star = degree_stats(catalog::star(4));
  CHECK(star.histogram.at(1) == 4);
  CHECK(star.histogram.at(4) == 1);
  CHECK(loglog_histogram(star.histogram) == "0 0.60206\n0.60206 0\n");
}

TEST_CASE("property: triangle count matches the triple loop, gcc in [0, 1]") {
  for (std::uint64_t s = 0; s < 300; ++s) {
    Graph g = catalog::random_small(s, 30);
    auto m = global_clustering(g);
    CAPTURE(s);
    CHECK(m.triangles == oracle::triangles_brute(g));
    CHECK(m.gcc >= 0.0);
    CHECK(m.gcc <= 1.0);
  }
}

TEST_CASE("property: closing a triplet never lowers the triangle count") {
  for (std::uint64_t s = 0; s < 100; ++s) {
    Graph g = catalog::random_small(s, 15);
    if (g.directed()) continue;
    auto adj = simple_adjacency(g);
    for (NodeId c = 0; c < g.num_nodes(); ++c) {
      if (adj[c].size() < 2) continue;
      NodeId a = adj[c][0], b = adj[c][1];
      if (g.has_edge(a, b)) continue;
      Graph closed = add_edges(g, std::vector<Edge>{{a, b}});
      CHECK(global_clustering(closed).triangles > global_clustering(g).triangles);
      break;
    }
  }
}
