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

#include "observa/contractions.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "json.hpp"
#include "observa/random.hpp"

namespace observa {
namespace {

// Union-find over unmatched-node indices.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

AuxiliaryGraph::AuxiliaryGraph(const BipartiteGraph& base, Matching matching)
    : base_(&base), matching_(std::move(matching)) {
  if (!matching_.is_valid_for(base)) {
    throw MatchingError("matching is not a matching of the given bipartite graph");
  }
}

std::vector<AuxArc> AuxiliaryGraph::arcs() const {
  std::vector<AuxArc> out;
  out.reserve(base_->num_edges());
  for (const auto& e : base_->edges()) {
    AuxVertex l{Side::kLeft, e.left}, r{Side::kRight, e.right};
    out.push_back(matching_.contains(e) ? AuxArc{r, l} : AuxArc{l, r});
  }
  return out;
}

std::vector<NodeId> AuxiliaryGraph::alternating_reach(NodeId start) const {
  const std::size_t n = base_->size();
  std::vector<char> seen_right(n, 0), seen_left(n, 0);
  std::vector<NodeId> stack{start};
  std::vector<NodeId> reached{start};
  seen_right[start] = 1;
  while (!stack.empty()) {
    NodeId r = stack.back();
    stack.pop_back();
    for (NodeId l : base_->left_of(r)) {
      // Only free edges (l-, r+) point into r+.
      if (matching_.mate_of_right(r) == l || seen_left[l]) continue;
      seen_left[l] = 1;
      NodeId next = matching_.mate_of_left(l);
      // A free l- here would mean an augmenting path; the matching is
      // maximum whenever contractions are requested.
      if (next == Matching::kNone || seen_right[next]) continue;
      seen_right[next] = 1;
      reached.push_back(next);
      stack.push_back(next);
    }
  }
  std::sort(reached.begin(), reached.end());
  return reached;
}

ContractionReport find_contractions(const Graph& g, std::uint64_t tiebreak_seed) {
  BipartiteGraph bg = to_bipartite(g);
  Matching m = maximum_matching(bg, tiebreak_seed);
  return find_contractions(g, bg, m);
}

ContractionReport find_contractions(const Graph& g, const BipartiteGraph& bg,
                                    const Matching& m) {
  AuxiliaryGraph aux(bg, m);
  ContractionReport report;
  report.num_nodes = bg.size();
  report.matching_size = m.size();
  report.structural_rank = m.size();
  report.unmatched = unmatched_right(m, bg);

  const std::size_t k = report.unmatched.size();
  std::vector<std::vector<NodeId>> reach(k);
  for (std::size_t i = 0; i < k; ++i) reach[i] = aux.alternating_reach(report.unmatched[i]);

  DisjointSets sets(k);
  std::vector<std::size_t> owner(bg.size(), k);
  for (std::size_t i = 0; i < k; ++i) {
    for (NodeId v : reach[i]) {
      if (owner[v] == k) {
        owner[v] = i;
      } else {
        sets.unite(owner[v], i);
      }
    }
  }
  std::map<std::size_t, std::vector<NodeId>> merged;
  for (std::size_t i = 0; i < k; ++i) {
    auto& dst = merged[sets.find(i)];
    dst.insert(dst.end(), reach[i].begin(), reach[i].end());
  }
  for (auto& [root, members] : merged) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
  }
  report.contractions.reserve(k);
  for (std::size_t i = 0; i < k; ++i) report.contractions.push_back(merged[sets.find(i)]);

  if (g.has_labels()) {
    for (NodeId u : report.unmatched) report.unmatched_labels.push_back(g.label(u));
  }
  return report;
}

std::vector<NodeId> minimum_measurement_set(const ContractionReport& r,
                                            std::uint64_t picker_seed) {
  std::vector<NodeId> picked;
  if (picker_seed == 0) {
    picked = r.unmatched;
  } else {
    Rng rng(picker_seed);
    std::map<std::vector<NodeId>, std::size_t> copies;
    for (const auto& c : r.contractions) ++copies[c];
    for (const auto& [members, k] : copies) {
      std::vector<NodeId> pool = members;
      rng.shuffle(std::span<NodeId>(pool));
      picked.insert(picked.end(), pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
    }
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

Replacements equivalent_replacements(const ContractionReport& r, NodeId failed) {
  Replacements out;
  bool member = false;
  for (const auto& c : r.contractions) {
    if (!std::binary_search(c.begin(), c.end(), failed)) continue;
    member = true;
    for (NodeId v : c) {
      if (v != failed) out.candidates.push_back(v);
    }
  }
  std::sort(out.candidates.begin(), out.candidates.end());
  out.candidates.erase(std::unique(out.candidates.begin(), out.candidates.end()),
                       out.candidates.end());
  if (!member) {
    out.status = Replacements::Status::kNotCritical;
  } else if (out.candidates.empty()) {
    out.status = Replacements::Status::kNoReplacement;
  } else {
    out.status = Replacements::Status::kFound;
  }
  return out;
}

ContractionStats contraction_stats(const ContractionReport& r) {
  ContractionStats s;
  s.count = r.contractions.size();
  if (s.count == 0) return s;
  std::size_t total = 0;
  for (const auto& c : r.contractions) total += c.size();
  s.mean_size = static_cast<double>(total) / static_cast<double>(s.count);
  return s;
}

std::string to_json(const ContractionReport& r, int indent) {
  nlohmann::ordered_json doc;
  doc["num_nodes"] = r.num_nodes;
  doc["matching_size"] = r.matching_size;
  doc["structural_rank"] = r.structural_rank;
  doc["num_contractions"] = r.contractions.size();
  auto records = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < r.unmatched.size(); ++i) {
    nlohmann::ordered_json rec;
    rec["unmatched_node"] = r.unmatched[i];
    if (!r.unmatched_labels.empty()) rec["unmatched_label"] = r.unmatched_labels[i];
    rec["members"] = r.contractions[i];
    records.push_back(std::move(rec));
  }
  doc["contractions"] = std::move(records);
  return doc.dump(indent);
}

}  // namespace observa
