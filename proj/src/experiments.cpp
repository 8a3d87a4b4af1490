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

#include "observa/experiments.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <thread>
#include <utility>

#include "observa/contractions.hpp"
#include "observa/format.hpp"
#include "observa/metrics.hpp"
#include "observa/random.hpp"

namespace observa {
namespace {

std::uint64_t kind_code(GraphKind kind) { return kind == GraphKind::kSF ? 0 : 1; }

GeneratorConfig realization_config(const GeneratorConfig& tmpl, GraphKind kind, std::size_t n,
                                   std::uint64_t seed) {
  GeneratorConfig cfg = tmpl;
  cfg.kind = kind;
  cfg.n = n;
  cfg.seed = seed;
  return cfg;
}

class Accumulator {
 public:
  void add(double x) { values_.push_back(x); }
  MeanStd finish() const {
    MeanStd s;
    s.count = values_.size();
    if (s.count == 0) return s;
    double sum = 0.0;
    for (double x : values_) sum += x;
    s.mean = sum / static_cast<double>(s.count);
    if (s.count > 1) {
      double sq = 0.0;
      for (double x : values_) sq += (x - s.mean) * (x - s.mean);
      s.std = std::sqrt(sq / static_cast<double>(s.count - 1));
    }
    return s;
  }

 private:
  std::vector<double> values_;
};

struct GroupAccumulator {
  Accumulator contractions, size, gcc, degree;

  void add(const ExperimentRecord& r) {
    contractions.add(static_cast<double>(r.num_contractions));
    if (!r.size_flagged()) size.add(r.mean_contraction_size);
    gcc.add(r.gcc);
    degree.add(r.average_degree);
  }
  Aggregate finish(GraphKind kind, std::optional<std::size_t> n) const {
    return {kind, n, contractions.finish(), size.finish(), gcc.finish(), degree.finish()};
  }
};

std::string aggregate_row(const Aggregate& a) {
  std::string row(to_string(a.kind));
  row += ',' + (a.n ? std::to_string(*a.n) : std::string("all"));
  row += ',' + std::to_string(a.num_contractions.count);
  for (const MeanStd* s : {&a.num_contractions, &a.mean_contraction_size}) {
    row += ',' + format_sig6(s->mean) + ',' + format_sig6(s->std);
  }
  row += ',' + std::to_string(a.mean_contraction_size.count);
  for (const MeanStd* s : {&a.gcc, &a.average_degree}) {
    row += ',' + format_sig6(s->mean) + ',' + format_sig6(s->std);
  }
  return row + '\n';
}

}  // namespace

void validate(const ExperimentConfig& cfg) {
  if (cfg.realizations < 1) throw ConfigError("realizations must be >= 1");
  if (cfg.kinds.empty()) throw ConfigError("at least one graph kind is required");
  if (cfg.n_values.empty()) throw ConfigError("at least one n value is required");
  if (cfg.jobs < 1) throw ConfigError("jobs must be >= 1");
  for (GraphKind kind : cfg.kinds) {
    for (std::size_t n : cfg.n_values) {
      try {
        validate(realization_config(cfg.generator, kind, n, 0));
      } catch (const ConfigError& e) {
        throw ConfigError("(" + std::string(to_string(kind)) + ", n=" + std::to_string(n) +
                          "): " + e.what());
      }
    }
  }
}

std::uint64_t realization_seed(std::uint64_t base_seed, GraphKind kind, std::size_t n,
                               std::size_t index) {
  return hash_words({base_seed, kind_code(kind), n, index});
}

ExperimentRecord run_realization(const ExperimentConfig& cfg, GraphKind kind, std::size_t n,
                                 std::size_t index) {
  ExperimentRecord rec;
  rec.kind = kind;
  rec.n = n;
  rec.realization = index;
  rec.seed = realization_seed(cfg.base_seed, cfg.shared_seeds ? GraphKind::kSF : kind, n, index);
  const Graph g = generate(realization_config(cfg.generator, kind, n, rec.seed));
  const ContractionReport report = find_contractions(g);
  const ContractionStats stats = contraction_stats(report);
  const MetricsReport metrics = global_clustering(g);
  rec.num_contractions = stats.count;
  rec.matching_size = report.matching_size;
  rec.mean_contraction_size = round_sig6(stats.mean_size);
  rec.gcc = round_sig6(metrics.gcc);
  rec.average_degree = round_sig6(metrics.average_degree);
  return rec;
}

ExperimentResult run_monte_carlo(const ExperimentConfig& cfg, const ProgressFn& progress) {
  validate(cfg);
  struct Task {
    GraphKind kind;
    std::size_t n;
    std::size_t index;
  };
  std::vector<Task> tasks;
  for (GraphKind kind : cfg.kinds) {
    for (std::size_t n : cfg.n_values) {
      for (std::size_t i = 0; i < cfg.realizations; ++i) tasks.push_back({kind, n, i});
    }
  }

  ExperimentResult result;
  result.records.resize(tasks.size());
  std::atomic<std::size_t> next{0};
  std::size_t done = 0;
  std::mutex progress_mutex;
  auto worker = [&] {
    for (std::size_t t = next++; t < tasks.size(); t = next++) {
      const Task& task = tasks[t];
      result.records[t] = run_realization(cfg, task.kind, task.n, task.index);
      if (progress) {
        std::lock_guard lock(progress_mutex);
        progress(++done, tasks.size());
      }
    }
  };
  const std::size_t threads = std::min(cfg.jobs, tasks.size());
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  aggregate(result);
  return result;
}

void aggregate(ExperimentResult& result) {
  std::vector<std::pair<GraphKind, std::size_t>> group_order;
  std::vector<GraphKind> kind_order;
  std::map<std::pair<GraphKind, std::size_t>, GroupAccumulator> groups;
  std::map<GraphKind, GroupAccumulator> grand;
  for (const auto& r : result.records) {
    auto key = std::make_pair(r.kind, r.n);
    if (!groups.contains(key)) group_order.push_back(key);
    if (!grand.contains(r.kind)) kind_order.push_back(r.kind);
    groups[key].add(r);
    grand[r.kind].add(r);
  }
  result.aggregates.clear();
  for (const auto& key : group_order) {
    result.aggregates.push_back(groups[key].finish(key.first, key.second));
  }
  result.grand.clear();
  for (GraphKind kind : kind_order) result.grand.push_back(grand[kind].finish(kind, std::nullopt));
}

std::string records_csv(const ExperimentResult& result) {
  std::string out =
      "kind,n,realization,seed,num_contractions,mean_contraction_size,gcc,average_degree\n";
  for (const auto& r : result.records) {
    out += std::string(to_string(r.kind)) + ',' + std::to_string(r.n) + ',' +
           std::to_string(r.realization) + ',' + std::to_string(r.seed) + ',' +
           std::to_string(r.num_contractions) + ',' + format_sig6(r.mean_contraction_size) + ',' +
           format_sig6(r.gcc) + ',' + format_sig6(r.average_degree) + '\n';
  }
  return out;
}

std::string aggregates_csv(const ExperimentResult& result) {
  std::string out =
      "# mean_contraction_size excludes realizations with zero contractions "
      "(size_realizations counts the rest); n=all rows pool every n\n"
      "kind,n,realizations,mean_num_contractions,std_num_contractions,"
      "mean_contraction_size,std_contraction_size,size_realizations,"
      "mean_gcc,std_gcc,mean_average_degree,std_average_degree\n";
  for (const auto& a : result.aggregates) out += aggregate_row(a);
  for (const auto& a : result.grand) out += aggregate_row(a);
  return out;
}

std::string summarize(const ExperimentResult& result) {
  std::string out;
  char buf[160];
  out += "Graph type                      ";
  for (const auto& g : result.grand) {
    std::snprintf(buf, sizeof buf, "%12s", std::string(to_string(g.kind)).c_str());
    out += buf;
  }
  out += '\n';
  auto row = [&](const char* name, auto field) {
    std::snprintf(buf, sizeof buf, "%-32s", name);
    out += buf;
    for (const auto& g : result.grand) {
      std::snprintf(buf, sizeof buf, "%12s", format_sig6(field(g)).c_str());
      out += buf;
    }
    out += '\n';
  };
  row("Average size of contraction", [](const Aggregate& a) { return a.mean_contraction_size.mean; });
  row("Average number of contractions", [](const Aggregate& a) { return a.num_contractions.mean; });
  row("Average GCC", [](const Aggregate& a) { return a.gcc.mean; });

  out += "\nkind      n  realizations  contractions  mean_size         gcc  avg_degree\n";
  for (const auto& a : result.aggregates) {
    std::snprintf(buf, sizeof buf, "%-4s %6zu %13zu %13s %10s %11s %11s\n",
                  std::string(to_string(a.kind)).c_str(), *a.n, a.num_contractions.count,
                  format_sig6(a.num_contractions.mean).c_str(),
                  format_sig6(a.mean_contraction_size.mean).c_str(),
                  format_sig6(a.gcc.mean).c_str(), format_sig6(a.average_degree.mean).c_str());
    out += buf;
  }
  return out;
}

}  // namespace observa
