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

#include "observa/generators.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <vector>

#include "observa/random.hpp"

namespace observa {
namespace {

class Growth {
 public:
  Growth(const GeneratorConfig& cfg) : rng_(cfg.seed), adj_(cfg.n) {
    const std::size_t m0 = cfg.seed_clique_size();
    for (NodeId u = 0; u < m0; ++u) {
      for (NodeId v = u + 1; v < m0; ++v) link(u, v);
    }
    flush();
    edges_.reserve(edges_.size() + (cfg.n - m0) * cfg.links_per_node());
  }

  NodeId preferential(NodeId t) {
    while (true) {
      NodeId v = endpoints_[rng_.below(endpoints_.size())];
      if (!linked(t, v)) return v;
    }
  }

  // One triad link for t; false when no fresh target has a usable neighbour.
  bool triad(NodeId t, const std::vector<NodeId>& fresh) {
    std::vector<NodeId> eligible;
    for (NodeId s : fresh) {
      if (std::any_of(adj_[s].begin(), adj_[s].end(), [&](NodeId w) { return usable(t, w); })) {
        eligible.push_back(s);
      }
    }
    if (eligible.empty()) return false;
    NodeId s = eligible[rng_.below(eligible.size())];
    std::vector<NodeId> candidates;
    for (NodeId w : adj_[s]) {
      if (usable(t, w)) candidates.push_back(w);
    }
    link(t, candidates[rng_.below(candidates.size())]);
    return true;
  }

  void link(NodeId u, NodeId v) {
    edges_.push_back({std::min(u, v), std::max(u, v)});
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    pending_.push_back(u);
    pending_.push_back(v);
  }

  // Makes the edges added since the last flush visible to preferential draws.
  void flush() {
    endpoints_.insert(endpoints_.end(), pending_.begin(), pending_.end());
    pending_.clear();
  }

  Graph finish(std::size_t n) { return Graph(n, false, std::move(edges_)); }

 private:
  bool linked(NodeId t, NodeId v) const {
    return v == t || std::find(adj_[t].begin(), adj_[t].end(), v) != adj_[t].end();
  }
  bool usable(NodeId t, NodeId w) const { return !linked(t, w); }

  Rng rng_;
  std::vector<std::vector<NodeId>> adj_;
  std::vector<Edge> edges_;
  std::vector<NodeId> endpoints_;
  std::vector<NodeId> pending_;
};

}  // namespace

std::string_view to_string(GraphKind kind) { return kind == GraphKind::kSF ? "SF" : "CSF"; }

GraphKind parse_graph_kind(std::string_view text) {
  std::string lower(text);
  for (char& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "sf") return GraphKind::kSF;
  if (lower == "csf") return GraphKind::kCSF;
  throw ConfigError("unknown graph kind '" + std::string(text) + "' (expected sf or csf)");
}

void validate(const GeneratorConfig& cfg) {
  if (cfg.kind == GraphKind::kSF && cfg.m < 1) throw ConfigError("SF requires m >= 1");
  if (cfg.kind == GraphKind::kCSF && cfg.m_r < 1) throw ConfigError("CSF requires m_r >= 1");
  const std::size_t links = cfg.links_per_node();
  const std::size_t m0 = cfg.seed_clique_size();
  if (m0 < links + 1) {
    throw ConfigError("seed graph size m0 = " + std::to_string(m0) + " must be at least " +
                      std::to_string(links + 1));
  }
  if (cfg.n < m0) {
    throw ConfigError("n = " + std::to_string(cfg.n) + " is smaller than the seed graph (m0 = " +
                      std::to_string(m0) + ")");
  }
  if (cfg.n > std::numeric_limits<NodeId>::max()) throw ConfigError("n too large");
}

Graph generate_sf(const GeneratorConfig& cfg) {
  if (cfg.kind != GraphKind::kSF) throw ConfigError("generate_sf needs kind SF");
  validate(cfg);
  Growth growth(cfg);
  for (NodeId t = static_cast<NodeId>(cfg.seed_clique_size()); t < cfg.n; ++t) {
    for (std::size_t k = 0; k < cfg.m; ++k) growth.link(t, growth.preferential(t));
    growth.flush();
  }
  return growth.finish(cfg.n);
}

Graph generate_csf(const GeneratorConfig& cfg) {
  if (cfg.kind != GraphKind::kCSF) throw ConfigError("generate_csf needs kind CSF");
  validate(cfg);
  Growth growth(cfg);
  std::vector<NodeId> fresh;
  for (NodeId t = static_cast<NodeId>(cfg.seed_clique_size()); t < cfg.n; ++t) {
    fresh.clear();
    for (std::size_t k = 0; k < cfg.m_r; ++k) {
      NodeId v = growth.preferential(t);
      growth.link(t, v);
      fresh.push_back(v);
    }
    for (std::size_t k = 0; k < cfg.m_s; ++k) {
      if (!growth.triad(t, fresh)) growth.link(t, growth.preferential(t));
    }
    growth.flush();
  }
  return growth.finish(cfg.n);
}

Graph generate(const GeneratorConfig& cfg) {
  return cfg.kind == GraphKind::kSF ? generate_sf(cfg) : generate_csf(cfg);
}

}  // namespace observa
