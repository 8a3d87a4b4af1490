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

#include <algorithm>

#include "observa/generators.hpp"
#include "observa/metrics.hpp"

using namespace observa;

namespace {

GeneratorConfig sf(std::size_t n, std::size_t m, std::uint64_t seed) {
  GeneratorConfig c;
  c.kind = GraphKind::kSF;
  c.n = n;
  c.m = m;
  c.seed = seed;
  return c;
}

GeneratorConfig csf(std::size_t n, std::size_t mr, std::size_t ms, std::uint64_t seed) {
  GeneratorConfig c;
  c.kind = GraphKind::kCSF;
  c.n = n;
  c.m_r = mr;
  c.m_s = ms;
  c.seed = seed;
  return c;
}

bool simple(const Graph& g) {
  return g.num_self_loops() == 0 && !g.directed();  // duplicates rejected by Graph
}

}  // namespace

TEST_CASE("generate_sf: no growth yields the seed clique") {
  auto c = sf(5, 2, 3);
  c.m0 = 5;
  Graph g = generate_sf(c);
  CHECK(g.num_edges() == 10);
  CHECK(global_clustering(g).gcc == 1.0);
}

TEST_CASE("generate_sf: edge bookkeeping") {
  Graph g = generate_sf(sf(1000, 2, 7));
  CHECK(g.num_nodes() == 1000);
  CHECK(g.num_edges() == 3 + 2 * (1000 - 3));
  auto c = sf(200, 3, 1);
  c.m0 = 6;
  CHECK(generate_sf(c).num_edges() == 15 + 3 * (200 - 6));
}

TEST_CASE("generate_csf: same counts as SF with m = m_r + m_s") {
  Graph s = generate_sf(sf(1000, 2, 7));
  Graph c = generate_csf(csf(1000, 1, 1, 7));
  CHECK(c.num_nodes() == s.num_nodes());
  CHECK(c.num_edges() == s.num_edges());
}

TEST_CASE("generate_csf: m_s = 0 reproduces SF exactly") {
  for (std::uint64_t seed : {1ULL, 2ULL, 99ULL}) {
    CHECK(generate_csf(csf(500, 2, 0, seed)) == generate_sf(sf(500, 2, seed)));
    CHECK(to_edge_list_string(generate_csf(csf(300, 2, 0, seed))) ==
          to_edge_list_string(generate_sf(sf(300, 2, seed))));
  }
}

TEST_CASE("generators: determinism and seed sensitivity") {
  CHECK(generate_sf(sf(400, 2, 11)) == generate_sf(sf(400, 2, 11)));
  CHECK(generate_csf(csf(400, 1, 1, 11)) == generate_csf(csf(400, 1, 1, 11)));
  CHECK_FALSE(generate_sf(sf(400, 2, 11)) == generate_sf(sf(400, 2, 12)));
}

TEST_CASE("generators: configuration errors") {
  CHECK_THROWS_AS(generate_sf(sf(100, 0, 1)), ConfigError);
  CHECK_THROWS_AS(generate_csf(csf(100, 0, 2, 1)), ConfigError);
  auto small_seed = sf(100, 2, 1);
  small_seed.m0 = 2;
  CHECK_THROWS_AS(generate_sf(small_seed), ConfigError);
  CHECK_THROWS_AS(generate_sf(sf(2, 2, 1)), ConfigError);
  CHECK_THROWS_AS(generate_sf(csf(100, 1, 1, 1)), ConfigError);
  CHECK_THROWS_AS(parse_graph_kind("er"), ConfigError);
  CHECK(parse_graph_kind("CSF") == GraphKind::kCSF);
}

TEST_CASE("property: generated graphs are simple and connected") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    for (const auto& cfg : {sf(300, 2, seed), csf(300, 1, 1, seed), csf(300, 2, 1, seed),
                            sf(150, 1, seed)}) {
      Graph g = generate(cfg);
      CHECK(simple(g));
      CHECK(g.is_strongly_connected());
    }
  }
}

TEST_CASE("ensemble: heavy tails and clustering gap at n = 1000") {
  double sf_ratio = 0, csf_ratio = 0, sf_gcc = 0, csf_gcc = 0;
  const int runs = 50;
  for (int i = 0; i < runs; ++i) {
    for (GraphKind kind : {GraphKind::kSF, GraphKind::kCSF}) {
      Graph g = kind == GraphKind::kSF ? generate_sf(sf(1000, 2, 1000 + i))
                                       : generate_csf(csf(1000, 1, 1, 1000 + i));
      auto stats = degree_stats(g);
      double ratio = double(stats.histogram.rbegin()->first) / stats.average_degree;
      double gcc = global_clustering(g).gcc;
      (kind == GraphKind::kSF ? sf_ratio : csf_ratio) += ratio / runs;
      (kind == GraphKind::kSF ? sf_gcc : csf_gcc) += gcc / runs;
    }
  }
  CHECK(sf_ratio > 10.0);
  CHECK(csf_ratio > 10.0);
  CHECK(csf_gcc > 5.0 * sf_gcc);
}
