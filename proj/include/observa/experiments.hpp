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

#ifndef OBSERVA_EXPERIMENTS_HPP_
#define OBSERVA_EXPERIMENTS_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "observa/generators.hpp"

namespace observa {

struct ExperimentConfig {
  std::vector<GraphKind> kinds{GraphKind::kSF, GraphKind::kCSF};
  std::vector<std::size_t> n_values{100, 200, 300, 400, 500, 600, 700, 800, 900, 1000};
  std::size_t realizations = 50;
  /// Template; kind, n and seed are set per realization.
  GeneratorConfig generator;
  std::uint64_t base_seed = 1;
  /// Drop the kind from the seed hash so every kind sees the same seeds.
  bool shared_seeds = false;
  /// Worker threads; results do not depend on it.
  std::size_t jobs = 1;
};

/// Throws ConfigError, naming the offending (kind, n) for generator errors.
void validate(const ExperimentConfig& cfg);

/// Seed of realization (kind, n, index): hash_words({base, kind, n, index})
/// with kind encoded as 0 for SF and 1 for CSF (always 0 with shared seeds).
std::uint64_t realization_seed(std::uint64_t base_seed, GraphKind kind, std::size_t n,
                               std::size_t index);

struct ExperimentRecord {
  GraphKind kind = GraphKind::kSF;
  std::size_t n = 0;
  std::size_t realization = 0;
  std::uint64_t seed = 0;
  std::size_t num_contractions = 0;
  std::size_t matching_size = 0;
  /// Stored rounded to six significant digits, as written to CSV.
  double mean_contraction_size = 0.0;
  double gcc = 0.0;
  double average_degree = 0.0;

  /// A realization without contractions has no mean size.
  bool size_flagged() const { return num_contractions == 0; }
};

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;  // sample standard deviation, 0 for fewer than 2 values
  std::size_t count = 0;
};

/// Per (kind, n) when n is set, else the grand aggregate over all n.
struct Aggregate {
  GraphKind kind = GraphKind::kSF;
  std::optional<std::size_t> n;
  MeanStd num_contractions;
  MeanStd mean_contraction_size;  // flagged records excluded
  MeanStd gcc;
  MeanStd average_degree;
};

struct ExperimentResult {
  /// Sorted by (kind order in config, n order in config, realization).
  std::vector<ExperimentRecord> records;
  std::vector<Aggregate> aggregates;
  std::vector<Aggregate> grand;
};

ExperimentRecord run_realization(const ExperimentConfig& cfg, GraphKind kind, std::size_t n,
                                 std::size_t index);

using ProgressFn = std::function<void(std::size_t done, std::size_t total)>;

ExperimentResult run_monte_carlo(const ExperimentConfig& cfg, const ProgressFn& progress = {});

/// Aggregates by folding over records in order; grouping follows first
/// appearance.
void aggregate(ExperimentResult& result);

std::string records_csv(const ExperimentResult& result);
std::string aggregates_csv(const ExperimentResult& result);

/// Table of mean contraction size, count and GCC per kind, followed by the
/// per-n rows.
std::string summarize(const ExperimentResult& result);

}  // namespace observa

#endif  // OBSERVA_EXPERIMENTS_HPP_
