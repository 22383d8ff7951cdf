// Copyright 2026 The submax Authors.
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

#ifndef SUBMAX_EXPERIMENT_H_
#define SUBMAX_EXPERIMENT_H_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "submax/constraints.hpp"
#include "submax/independence.hpp"
#include "submax/objective.hpp"
#include "submax/objectives.hpp"

namespace submax {

// Feature CSV rows: first column is a unique label, the rest real features.
struct FeatureTable {
  std::vector<std::string> labels;
  std::vector<std::vector<double>> vectors;
};

// Metadata CSV rows: label, semicolon-separated genre labels, integer year,
// rating (NaN when the field is empty).
struct MetadataTable {
  std::vector<std::string> labels;
  std::vector<std::vector<std::string>> genres;
  std::vector<int> years;
  std::vector<double> ratings;
};

// Errors on missing file, ragged rows, non-numeric features, all-zero
// feature vectors, and duplicate labels. Messages name the path.
FeatureTable ingest_features(const std::string& path);

// Dense n x n similarity CSV. Symmetry is required within 1e-9; entries
// outside [0,1] are clamped (query clamped_entries() to warn).
SimilarityMatrix ingest_similarity(const std::string& path);

// Errors on missing file, ragged rows, non-numeric year/rating, duplicate
// labels. A missing rating parses as NaN; whether that is an error depends
// on whether a knapsack asks for the rating column.
MetadataTable ingest_metadata(const std::string& path);

struct ObjectiveSpec {
  std::string kind;  // "modular" | "coverage" | "cut" | "diverse"
  double lambda = 1.0;
  // Kernel width for building similarities from feature vectors. There is no
  // default: it must be set whenever `features` is used.
  double sigma = -1.0;
  std::string features;    // path; diverse via the cosine kernel
  std::string similarity;  // path; diverse via an explicit matrix
  // Inline data for the small synthetic kinds.
  std::vector<double> weights;  // modular
  double bias = 0.0;            // modular
  std::vector<std::vector<int>> covers;  // coverage
  std::vector<double> universe_weights;  // coverage
  std::vector<double> cut_weights;       // cut, row-major n x n
};

struct ConstraintSpec {
  std::string kind;  // "cardinality" | "partition" | "interval" | "hardness"
  int limit = -1;    // cardinality
  // Partition limits. Explicit per-genre limits win; otherwise limits come
  // from d_g = round(t * q_g) with q_g the dataset genre frequency unless
  // overridden in `fractions`.
  std::map<std::string, int> limits;
  std::map<std::string, double> fractions;
  double t = -1.0;
  int gap = 1;               // interval
  int k = 1, h = 2, m = 1;   // structured hard family
};

// One budget constraint fed by the metadata rating column:
// raw cost max(rating - 5, 0), normalized by `budget`.
struct KnapsackSpec {
  std::string column = "rating";
  double budget = 1.0;
};

struct AlgorithmSpec {
  std::string name;
  // ell, epsilon, delta, rho, beta, alpha, seed, probability, monotone,
  // ell_max; unset keys fall back to per-algorithm defaults.
  std::map<std::string, double> params;
};

struct SweepSpec {
  std::string param;  // "" (none) | "t" | "budget"
  std::vector<double> values;
};

struct ExperimentConfig {
  std::string metadata;  // path; required by partition/interval/knapsacks
  ObjectiveSpec objective;
  ConstraintSpec constraint;
  std::vector<KnapsackSpec> knapsacks;
  std::vector<AlgorithmSpec> algorithms;
  SweepSpec sweep;
  std::string output;  // report path; empty means stdout
};

// Parses and validates a JSON config file. Throws std::runtime_error with a
// message naming the file or offending field.
ExperimentConfig load_config(const std::string& path);

// A ready-to-run problem built from a config: elements whose singletons are
// infeasible (zero-limit genre, over-budget cost) have been dropped with a
// recorded warning and the survivors renumbered densely.
struct AssembledInstance {
  GroundSet ground{0};
  std::shared_ptr<const Objective> objective;
  std::shared_ptr<const IndependenceSystem> constraint;
  KnapsackSet knapsacks;
  bool monotone = false;
  std::vector<std::string> labels;  // original label of each dense id
  std::vector<std::string> warnings;
};

// Builds the instance at one sweep point (nullopt = the base config values).
AssembledInstance assemble_instance(const ExperimentConfig& config,
                                    std::optional<double> sweep_value = {});

// Runs every algorithm at every sweep point and writes one CSV row per
// (param point, algorithm) with columns
//   algorithm,params,size,value,value_calls,independence_calls,E,ms
// in that order, rows ordered by param point then algorithm (the ell-sweep
// protocol expands to one row per ell). E is blank without knapsacks. The
// output is byte-identical across runs except for the ms column. Warnings
// (dropped elements, clamped similarities) go to `log` when given.
void run_experiment(const ExperimentConfig& config, std::ostream& csv,
                    std::ostream* log = nullptr);

}  // namespace submax

#endif  // SUBMAX_EXPERIMENT_H_
