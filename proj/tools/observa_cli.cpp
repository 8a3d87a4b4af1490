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

// observa: contraction analysis, graph generation, Monte-Carlo sweeps and the
// sensor-placement edge-addition workflow.
//
// Exit codes: 0 success, 1 usage or configuration error, 2 input parse
// error, 3 missing input file.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "observa/contractions.hpp"
#include "observa/experiments.hpp"
#include "observa/format.hpp"
#include "observa/generators.hpp"
#include "observa/graph.hpp"
#include "observa/grid.hpp"
#include "observa/metrics.hpp"

namespace {

using namespace observa;

constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitMissing = 3;

struct MissingInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Graph load_input(const std::string& path) {
  if (!std::filesystem::exists(path)) throw MissingInput("input file '" + path + "' not found");
  LoadResult loaded = load_edge_list_file(path);
  if (loaded.duplicates_collapsed > 0) {
    std::cerr << "warning: collapsed " << loaded.duplicates_collapsed << " duplicate edge line(s)\n";
  }
  if (loaded.graph.directed() && !loaded.graph.is_strongly_connected()) {
    std::cerr << "warning: directed input is not strongly connected; contraction results are "
                 "necessary conditions only\n";
  }
  return std::move(loaded.graph);
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

std::string metrics_line(const Graph& g, const MetricsReport& m) {
  return "nodes=" + std::to_string(g.num_nodes()) + " edges=" + std::to_string(g.num_edges()) +
         " average_degree=" + format_sig6(m.average_degree) + " gcc=" + format_sig6(m.gcc) +
         " triangles=" + std::to_string(m.triangles) + " triplets=" + std::to_string(m.open_triplets);
}

nlohmann::ordered_json metrics_json(const MetricsReport& m) {
  nlohmann::ordered_json j;
  j["gcc"] = round_sig6(m.gcc);
  j["triangles"] = m.triangles;
  j["open_triplets"] = m.open_triplets;
  j["average_degree"] = round_sig6(m.average_degree);
  j["degenerate"] = m.degenerate;
  j["symmetrized"] = m.symmetrized;
  auto hist = nlohmann::ordered_json::object();
  for (const auto& [d, c] : m.degree_histogram) hist[std::to_string(d)] = c;
  j["degree_histogram"] = std::move(hist);
  return j;
}

std::string edges_text(const Graph& g, const std::vector<Edge>& edges) {
  std::string out = "# added edges\n";
  for (const auto& e : edges) out += g.label(e.u) + ' ' + g.label(e.v) + '\n';
  return out;
}

// Comma-separated list parsed by CLI11 into a vector; also accepts
// "a:b:step" ranges for n values.
std::vector<std::size_t> expand_n_values(const std::vector<std::string>& items) {
  std::vector<std::size_t> out;
  for (const auto& item : items) {
    auto first = item.find(':');
    if (first == std::string::npos) {
      out.push_back(std::stoul(item));
      continue;
    }
    auto second = item.find(':', first + 1);
    std::size_t lo = std::stoul(item.substr(0, first));
    std::size_t hi = std::stoul(item.substr(first + 1, second - first - 1));
    std::size_t step = second == std::string::npos ? 1 : std::stoul(item.substr(second + 1));
    if (step == 0) throw ConfigError("n range step must be positive");
    for (std::size_t v = lo; v <= hi; v += step) out.push_back(v);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Contraction analysis for structural observability"};
  app.require_subcommand(1);
  app.allow_extras(false);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate an SF or CSF graph as an edge list");
  std::string gen_kind = "sf", gen_out;
  GeneratorConfig gcfg;
  gen->add_option("--kind", gen_kind, "sf or csf")->default_val("sf");
  gen->add_option("--n", gcfg.n, "Node count")->default_val(100);
  gen->add_option("--m", gcfg.m, "Links per new node (sf)")->default_val(2);
  gen->add_option("--mr", gcfg.m_r, "Preferential links per new node (csf)")->default_val(1);
  gen->add_option("--ms", gcfg.m_s, "Triad links per new node (csf)")->default_val(1);
  gen->add_option("--m0", gcfg.m0, "Seed clique size (0: links per node + 1)")->default_val(0);
  gen->add_option("--seed", gcfg.seed, "Generator seed")->default_val(1);
  gen->add_option("--out", gen_out, "Output edge list (default stdout)");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Contractions and clustering of an edge list");
  std::string an_in, an_out;
  std::uint64_t an_seed = 0, an_picker = 0;
  analyze->add_option("--in,in", an_in, "Input edge list")->required();
  analyze->add_option("--seed", an_seed, "Matching tie-break seed")->default_val(0);
  analyze->add_option("--picker-seed", an_picker, "Representative picker seed (0: unmatched nodes)")
      ->default_val(0);
  analyze->add_option("--out", an_out, "Report JSON path (default stdout)");

  // mc
  auto* mc = app.add_subcommand("mc", "Monte-Carlo sweep over SF/CSF ensembles");
  ExperimentConfig ecfg;
  std::vector<std::string> mc_kinds{"sf", "csf"}, mc_n{"100:1000:100"};
  std::string mc_records = "records.csv", mc_aggregates = "aggregates.csv";
  bool mc_quiet = false;
  mc->add_option("--kinds", mc_kinds, "Graph kinds")->delimiter(',');
  mc->add_option("--n-values", mc_n, "Node counts, e.g. 100,200 or 100:1000:100")->delimiter(',');
  mc->add_option("--realizations", ecfg.realizations, "Realizations per (kind, n)")->default_val(50);
  mc->add_option("--m", ecfg.generator.m, "Links per new node (sf)")->default_val(2);
  mc->add_option("--mr", ecfg.generator.m_r, "Preferential links (csf)")->default_val(1);
  mc->add_option("--ms", ecfg.generator.m_s, "Triad links (csf)")->default_val(1);
  mc->add_option("--m0", ecfg.generator.m0, "Seed clique size (0: auto)")->default_val(0);
  mc->add_option("--base-seed", ecfg.base_seed, "Base seed")->default_val(1);
  mc->add_option("--jobs", ecfg.jobs, "Worker threads")->default_val(1);
  mc->add_flag("--shared-seeds", ecfg.shared_seeds, "Use the same realization seeds for every kind");
  mc->add_option("--records", mc_records, "Records CSV path");
  mc->add_option("--aggregates", mc_aggregates, "Aggregates CSV path");
  mc->add_flag("--quiet", mc_quiet, "No progress or summary output");

  // grid
  auto* grid = app.add_subcommand("grid", "Sensor sites and greedy GCC-raising edge additions");
  std::string gr_in, gr_edges, gr_csv, gr_report;
  std::size_t gr_budget = 40;
  std::uint64_t gr_seed = 0;
  bool gr_full = false;
  grid->add_option("--in,in", gr_in, "Input edge list")->required();
  grid->add_option("--budget", gr_budget, "Maximum edges to add")->default_val(40);
  grid->add_option("--seed", gr_seed, "Strategy / tie-break seed")->default_val(0);
  grid->add_flag("--full-scan", gr_full, "Score all non-adjacent pairs (small graphs)");
  grid->add_option("--out-edges", gr_edges, "Added edges as an edge list");
  grid->add_option("--out-csv", gr_csv, "Before/after comparison CSV");
  grid->add_option("--out-report", gr_report, "Contraction report JSON of the input");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*gen) {
      gcfg.kind = parse_graph_kind(gen_kind);
      const Graph g = generate(gcfg);
      write_text(gen_out, to_edge_list_string(g));
      const std::string line = metrics_line(g, global_clustering(g)) + '\n';
      (gen_out.empty() || gen_out == "-" ? std::cerr : std::cout) << line;
    } else if (*analyze) {
      const Graph g = load_input(an_in);
      const ContractionReport report = find_contractions(g, an_seed);
      const MetricsReport metrics = global_clustering(g);
      if (metrics.symmetrized) std::cerr << "notice: directed input symmetrized for GCC\n";
      const auto stats = contraction_stats(report);
      nlohmann::ordered_json doc;
      doc["contraction_report"] = nlohmann::ordered_json::parse(to_json(report));
      doc["mean_contraction_size"] = round_sig6(stats.mean_size);
      doc["measurement_set"] = minimum_measurement_set(report, an_picker);
      doc["metrics"] = metrics_json(metrics);
      write_text(an_out, doc.dump(2) + '\n');
      if (!an_out.empty() && an_out != "-") {
        std::cout << "contractions=" << stats.count << " mean_size=" << format_sig6(stats.mean_size)
                  << ' ' << metrics_line(g, metrics) << '\n';
      }
    } else if (*mc) {
      ecfg.kinds.clear();
      for (const auto& k : mc_kinds) ecfg.kinds.push_back(parse_graph_kind(k));
      ecfg.n_values = expand_n_values(mc_n);
      ProgressFn progress;
      if (!mc_quiet) {
        progress = [](std::size_t done, std::size_t total) {
          if (done == total || done % 50 == 0) std::cerr << "\r" << done << "/" << total << std::flush;
          if (done == total) std::cerr << '\n';
        };
      }
      const ExperimentResult result = run_monte_carlo(ecfg, progress);
      write_text(mc_records, records_csv(result));
      write_text(mc_aggregates, aggregates_csv(result));
      if (!mc_quiet) std::cout << summarize(result);
    } else if (*grid) {
      const Graph g = load_input(gr_in);
      if (g.directed()) throw ConfigError("grid workflow needs an undirected graph");
      const GridAnalysis a = analyze_grid(g, gr_seed);
      std::cout << "unmatched nodes (" << a.contractions.unmatched.size() << "):";
      for (NodeId u : a.contractions.unmatched) std::cout << ' ' << g.label(u);
      std::cout << '\n';
      if (!gr_report.empty()) write_text(gr_report, to_json(a.contractions) + '\n');
      SuggestOptions opts;
      opts.full_scan = gr_full;
      const EdgeSuggestion s = suggest_edge_additions(g, gr_budget, gr_seed, opts);
      if (!s.notice.empty()) std::cerr << "notice: " << s.notice << '\n';
      const GridComparison c = compare(g, s.edges, gr_seed);
      std::cout << comparison_table(c);
      if (!gr_csv.empty()) write_text(gr_csv, comparison_csv(c));
      if (!gr_edges.empty()) write_text(gr_edges, edges_text(g, s.edges));
    }
  } catch (const MissingInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMissing;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return 0;
}
