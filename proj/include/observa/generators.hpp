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

#ifndef OBSERVA_GENERATORS_HPP_
#define OBSERVA_GENERATORS_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "observa/graph.hpp"

namespace observa {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class GraphKind { kSF, kCSF };

std::string_view to_string(GraphKind kind);
/// Accepts "sf"/"csf" in any case; throws ConfigError otherwise.
GraphKind parse_graph_kind(std::string_view text);

struct GeneratorConfig {
  GraphKind kind = GraphKind::kSF;
  std::size_t n = 100;
  /// Links per new node (SF).
  std::size_t m = 2;
  /// Preferential and triad links per new node (CSF).
  std::size_t m_r = 1;
  std::size_t m_s = 1;
  std::uint64_t seed = 1;
  /// Seed clique size; 0 selects links-per-node + 1.
  std::size_t m0 = 0;

  std::size_t links_per_node() const { return kind == GraphKind::kSF ? m : m_r + m_s; }
  std::size_t seed_clique_size() const { return m0 == 0 ? links_per_node() + 1 : m0; }
};

/// Throws ConfigError describing the first violated constraint.
void validate(const GeneratorConfig& cfg);

/// Preferential attachment growth.
///
/// Starts from the complete graph on m0 nodes. Node t = m0, ..., n-1 then
/// draws m distinct targets: each draw picks a uniform entry of the
/// endpoint list (every node appears once per incident edge end, so the pick
/// is degree-proportional) and duplicates are redrawn. The endpoint list is
/// extended only after node t is complete. Rng is Rng(cfg.seed).
Graph generate_sf(const GeneratorConfig& cfg);

/// Clustered growth with triad formation.
///
/// Node t first draws m_r targets exactly as generate_sf does. Each of the
/// m_s triad links then takes, among the fresh preferential targets that
/// still have a neighbour not linked to t, one uniformly at random, and links
/// t to a uniformly chosen such neighbour. With no eligible target the link
/// falls back to a preferential draw. m_s = 0 reproduces generate_sf with
/// m = m_r bit for bit.
Graph generate_csf(const GeneratorConfig& cfg);

/// Dispatches on cfg.kind.
Graph generate(const GeneratorConfig& cfg);

}  // namespace observa

#endif  // OBSERVA_GENERATORS_HPP_
