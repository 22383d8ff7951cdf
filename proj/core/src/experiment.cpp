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

#include "submax/experiment.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "submax/element_set.hpp"
#include "submax/repeated.hpp"
#include "submax/report.hpp"
#include "submax/sgs.hpp"

namespace submax {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) {
  throw std::runtime_error(msg);
}

std::string trim(std::string s) {
  auto keep = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), keep));
  s.erase(std::find_if(s.rbegin(), s.rend(), keep).base(), s.end());
  return s;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

double parse_double(const std::string& raw, const std::string& where) {
  const std::string s = trim(raw);
  double v = 0.0;
  auto [last, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || last != s.data() + s.size()) {
    fail(where + ": not a number: '" + raw + "'");
  }
  return v;
}

int parse_int(const std::string& raw, const std::string& where) {
  const std::string s = trim(raw);
  int v = 0;
  auto [last, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || last != s.data() + s.size()) {
    fail(where + ": not an integer: '" + raw + "'");
  }
  return v;
}

// Rows of trimmed-newline, comma-split cells; blank lines skipped.
std::vector<std::vector<std::string>> read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(path + ": cannot open file");
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    rows.push_back(split(line, ','));
  }
  return rows;
}

std::string row_tag(const std::string& path, std::size_t r) {
  return path + " row " + std::to_string(r + 1);
}

}  // namespace

FeatureTable ingest_features(const std::string& path) {
  const auto rows = read_csv(path);
  if (rows.empty()) fail(path + ": no data rows");
  const std::size_t width = rows[0].size();
  if (width < 2) fail(path + ": rows need a label plus at least one feature");
  FeatureTable table;
  std::set<std::string> seen;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != width) fail(row_tag(path, r) + ": ragged row");
    std::string label = trim(rows[r][0]);
    if (!seen.insert(label).second) {
      fail(path + ": duplicate label '" + label + "'");
    }
    std::vector<double> v(width - 1);
    double norm2 = 0.0;
    for (std::size_t c = 1; c < width; ++c) {
      v[c - 1] = parse_double(rows[r][c], row_tag(path, r));
      norm2 += v[c - 1] * v[c - 1];
    }
    if (norm2 == 0.0) fail(row_tag(path, r) + ": zero feature vector");
    table.labels.push_back(std::move(label));
    table.vectors.push_back(std::move(v));
  }
  return table;
}

SimilarityMatrix ingest_similarity(const std::string& path) {
  const auto rows = read_csv(path);
  const int n = static_cast<int>(rows.size());
  if (n == 0) fail(path + ": no data rows");
  std::vector<double> entries;
  entries.reserve(static_cast<std::size_t>(n) * n);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (static_cast<int>(rows[r].size()) != n) {
      fail(row_tag(path, r) + ": expected " + std::to_string(n) +
           " columns in a dense similarity matrix");
    }
    for (int c = 0; c < n; ++c) {
      entries.push_back(parse_double(rows[r][c], row_tag(path, r)));
    }
  }
  try {
    return SimilarityMatrix(n, std::move(entries));
  } catch (const std::exception& e) {
    fail(path + ": " + e.what());
  }
}

MetadataTable ingest_metadata(const std::string& path) {
  const auto rows = read_csv(path);
  if (rows.empty()) fail(path + ": no data rows");
  MetadataTable table;
  std::set<std::string> seen;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != 4) {
      fail(row_tag(path, r) + ": expected id,genres,year,rating");
    }
    std::string label = trim(rows[r][0]);
    if (!seen.insert(label).second) {
      fail(path + ": duplicate label '" + label + "'");
    }
    std::vector<std::string> genres;
    for (std::string& g : split(rows[r][1], ';')) {
      g = trim(g);
      if (!g.empty()) genres.push_back(std::move(g));
    }
    const int year = parse_int(rows[r][2], row_tag(path, r));
    const std::string rating_raw = trim(rows[r][3]);
    const double rating =
        rating_raw.empty() ? std::numeric_limits<double>::quiet_NaN()
                           : parse_double(rows[r][3], row_tag(path, r));
    table.labels.push_back(std::move(label));
    table.genres.push_back(std::move(genres));
    table.years.push_back(year);
    table.ratings.push_back(rating);
  }
  return table;
}

namespace {

const std::set<std::string>& objective_kinds() {
  static const std::set<std::string> kinds = {"modular", "coverage", "cut",
                                              "diverse"};
  return kinds;
}

const std::set<std::string>& constraint_kinds() {
  static const std::set<std::string> kinds = {"cardinality", "partition",
                                              "interval", "hardness"};
  return kinds;
}

// Algorithms that honor budget constraints; the rest must not be configured
// alongside knapsacks.
bool knapsack_capable(const std::string& name) {
  return name == "knapsack-sgs" || name == "density-search-sgs" ||
         name == "modified-greedy" || name == "modified-repeated-greedy" ||
         name == "density-search-rg";
}

bool known_algorithm(const std::string& name) {
  return knapsack_capable(name) || name == "greedy" || name == "sgs" ||
         name == "fast-sgs" || name == "sgs-ell-sweep" ||
         name == "repeated-greedy" || name == "sample-greedy";
}

void require_file(const std::string& config_path, const std::string& path) {
  if (!std::filesystem::exists(path)) {
    fail(config_path + ": file not found: " + path);
  }
}

void check_unit_interval_half(const std::string& config_path,
                              const std::string& key, double v) {
  if (!(v > 0.0 && v < 0.5)) {
    fail(config_path + ": " + key + " must lie in (0, 1/2), got " +
         format_double(v));
  }
}

}  // namespace

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(path + ": cannot open config file");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    fail(path + ": " + e.what());
  }

  ExperimentConfig cfg;
  try {
    cfg.metadata = doc.value("metadata", std::string());
    cfg.output = doc.value("output", std::string());

    if (!doc.contains("objective")) fail(path + ": missing objective");
    const json& obj = doc.at("objective");
    ObjectiveSpec& os = cfg.objective;
    os.kind = obj.value("kind", std::string());
    os.lambda = obj.value("lambda", 1.0);
    os.sigma = obj.value("sigma", -1.0);
    os.features = obj.value("features", std::string());
    os.similarity = obj.value("similarity", std::string());
    os.bias = obj.value("bias", 0.0);
    if (obj.contains("weights")) {
      os.weights = obj.at("weights").get<std::vector<double>>();
    }
    if (obj.contains("covers")) {
      os.covers = obj.at("covers").get<std::vector<std::vector<int>>>();
    }
    if (obj.contains("universe_weights")) {
      os.universe_weights =
          obj.at("universe_weights").get<std::vector<double>>();
    }
    if (obj.contains("cut_weights")) {
      os.cut_weights = obj.at("cut_weights").get<std::vector<double>>();
    }

    if (!doc.contains("constraint")) fail(path + ": missing constraint");
    const json& con = doc.at("constraint");
    ConstraintSpec& cs = cfg.constraint;
    cs.kind = con.value("kind", std::string());
    cs.limit = con.value("limit", -1);
    cs.t = con.value("t", -1.0);
    cs.gap = con.value("gap", 1);
    cs.k = con.value("k", 1);
    cs.h = con.value("h", 2);
    cs.m = con.value("m", 1);
    if (con.contains("limits")) {
      cs.limits = con.at("limits").get<std::map<std::string, int>>();
    }
    if (con.contains("fractions")) {
      cs.fractions =
          con.at("fractions").get<std::map<std::string, double>>();
    }

    if (doc.contains("knapsacks")) {
      for (const json& k : doc.at("knapsacks")) {
        KnapsackSpec spec;
        spec.column = k.value("column", std::string("rating"));
        spec.budget = k.value("budget", 1.0);
        cfg.knapsacks.push_back(std::move(spec));
      }
    }

    if (doc.contains("algorithms")) {
      for (const json& a : doc.at("algorithms")) {
        AlgorithmSpec spec;
        spec.name = a.value("name", std::string());
        for (auto it = a.begin(); it != a.end(); ++it) {
          if (it.key() == "name") continue;
          if (it.value().is_boolean()) {
            spec.params[it.key()] = it.value().get<bool>() ? 1.0 : 0.0;
          } else if (it.value().is_number()) {
            spec.params[it.key()] = it.value().get<double>();
          } else {
            fail(path + ": algorithm parameter '" + it.key() +
                 "' must be a number");
          }
        }
        cfg.algorithms.push_back(std::move(spec));
      }
    }

    if (doc.contains("sweep")) {
      const json& sw = doc.at("sweep");
      cfg.sweep.param = sw.value("param", std::string());
      if (sw.contains("values")) {
        cfg.sweep.values = sw.at("values").get<std::vector<double>>();
      }
    }
  } catch (const json::exception& e) {
    fail(path + ": " + e.what());
  }

  // Semantic validation: fail here, before any data is read or run.
  const ObjectiveSpec& os = cfg.objective;
  if (!objective_kinds().count(os.kind)) {
    fail(path + ": objective.kind must be one of modular, coverage, cut, "
                "diverse");
  }
  if (os.kind == "modular" && os.weights.empty()) {
    fail(path + ": modular objective needs weights");
  }
  if (os.kind == "coverage" &&
      (os.covers.empty() || os.universe_weights.empty())) {
    fail(path + ": coverage objective needs covers and universe_weights");
  }
  if (os.kind == "cut") {
    const auto size = os.cut_weights.size();
    const auto n = static_cast<std::size_t>(std::llround(std::sqrt(
        static_cast<double>(size))));
    if (size == 0 || n * n != size) {
      fail(path + ": cut_weights must be a dense square matrix");
    }
  }
  if (os.kind == "diverse") {
    if (os.features.empty() == os.similarity.empty()) {
      fail(path +
           ": diverse objective needs exactly one of features, similarity");
    }
    if (!os.features.empty()) {
      require_file(path, os.features);
      if (!(os.sigma > 0.0)) {
        fail(path + ": objective.sigma (> 0) is required with features");
      }
    }
    if (!os.similarity.empty()) require_file(path, os.similarity);
    if (os.lambda < 0.0 || os.lambda > 1.0) {
      fail(path + ": objective.lambda must lie in [0, 1]");
    }
  }

  const ConstraintSpec& cs = cfg.constraint;
  if (!constraint_kinds().count(cs.kind)) {
    fail(path + ": constraint.kind must be one of cardinality, partition, "
                "interval, hardness");
  }
  if (cs.kind == "cardinality" && cs.limit < 0) {
    fail(path + ": cardinality constraint needs limit >= 0");
  }
  if (cs.kind == "partition" && cs.limits.empty() && cs.t <= 0.0 &&
      cfg.sweep.param != "t") {
    fail(path + ": partition constraint needs limits, t > 0, or a t sweep");
  }
  if (cs.kind == "interval" && cs.gap < 1) {
    fail(path + ": interval constraint needs gap >= 1");
  }
  if (cs.kind == "hardness") {
    if (cs.k < 1 || cs.m < 1 || cs.h < 1 || cs.h % (2 * cs.k) != 0) {
      fail(path + ": hardness constraint needs k, m >= 1 and h a positive "
                  "multiple of 2k");
    }
  }
  const bool needs_metadata = cs.kind == "partition" ||
                              cs.kind == "interval" || !cfg.knapsacks.empty();
  if (needs_metadata) {
    if (cfg.metadata.empty()) {
      fail(path + ": this constraint/knapsack setup needs a metadata file");
    }
    require_file(path, cfg.metadata);
  }

  for (const KnapsackSpec& k : cfg.knapsacks) {
    if (k.column != "rating") {
      fail(path + ": knapsack column must be 'rating', got '" + k.column +
           "'");
    }
    if (!(k.budget > 0.0)) fail(path + ": knapsack budget must be > 0");
  }

  if (cfg.algorithms.empty()) fail(path + ": no algorithms configured");
  for (const AlgorithmSpec& a : cfg.algorithms) {
    if (!known_algorithm(a.name)) {
      fail(path + ": unknown algorithm '" + a.name + "'");
    }
    if (!cfg.knapsacks.empty() && !knapsack_capable(a.name)) {
      fail(path + ": algorithm '" + a.name +
           "' ignores budget constraints; use knapsack-sgs, "
           "density-search-sgs, modified-greedy, modified-repeated-greedy, "
           "or density-search-rg");
    }
    if (auto it = a.params.find("epsilon"); it != a.params.end()) {
      check_unit_interval_half(path, a.name + ".epsilon", it->second);
    }
    if (auto it = a.params.find("delta"); it != a.params.end()) {
      check_unit_interval_half(path, a.name + ".delta", it->second);
    }
    if (auto it = a.params.find("probability"); it != a.params.end()) {
      if (!(it->second > 0.0 && it->second <= 1.0)) {
        fail(path + ": " + a.name + ".probability must lie in (0, 1]");
      }
    }
  }

  if (!cfg.sweep.param.empty()) {
    if (cfg.sweep.param != "t" && cfg.sweep.param != "budget") {
      fail(path + ": sweep.param must be 't' or 'budget'");
    }
    if (cfg.sweep.values.empty()) fail(path + ": sweep.values is empty");
    if (cfg.sweep.param == "t" && cs.kind != "partition") {
      fail(path + ": a t sweep needs a partition constraint");
    }
    if (cfg.sweep.param == "budget" && cfg.knapsacks.empty()) {
      fail(path + ": a budget sweep needs at least one knapsack");
    }
    for (double v : cfg.sweep.values) {
      if (!(v > 0.0)) fail(path + ": sweep values must be > 0");
    }
  }

  return cfg;
}

namespace {

std::vector<double> submatrix(const std::vector<double>& entries, int n,
                              const std::vector<int>& ids) {
  std::vector<double> out;
  out.reserve(ids.size() * ids.size());
  for (int i : ids) {
    for (int j : ids) {
      out.push_back(entries[static_cast<std::size_t>(i) * n + j]);
    }
  }
  return out;
}

}  // namespace

AssembledInstance assemble_instance(const ExperimentConfig& config,
                                    std::optional<double> sweep_value) {
  const ObjectiveSpec& os = config.objective;
  const ConstraintSpec& cs = config.constraint;
  AssembledInstance out;

  // Ground size, and the similarity matrix when the objective needs one.
  std::shared_ptr<SimilarityMatrix> sim;
  std::vector<std::string> feature_labels;
  int n = 0;
  if (os.kind == "modular") {
    n = static_cast<int>(os.weights.size());
  } else if (os.kind == "coverage") {
    n = static_cast<int>(os.covers.size());
  } else if (os.kind == "cut") {
    n = static_cast<int>(std::llround(
        std::sqrt(static_cast<double>(os.cut_weights.size()))));
  } else {
    if (!os.similarity.empty()) {
      sim = std::make_shared<SimilarityMatrix>(ingest_similarity(os.similarity));
    } else {
      FeatureTable features = ingest_features(os.features);
      sim = std::make_shared<SimilarityMatrix>(
          cosine_kernel(features.vectors, os.sigma));
      feature_labels = std::move(features.labels);
    }
    n = sim->size();
    if (sim->clamped_entries() > 0) {
      out.warnings.push_back("clamped " +
                             std::to_string(sim->clamped_entries()) +
                             " similarity entries into [0, 1]");
    }
  }
  if (n <= 0) fail("config: empty ground set");

  const bool needs_metadata = cs.kind == "partition" ||
                              cs.kind == "interval" ||
                              !config.knapsacks.empty();
  MetadataTable meta;
  if (needs_metadata) {
    meta = ingest_metadata(config.metadata);
    if (static_cast<int>(meta.labels.size()) != n) {
      fail(config.metadata + ": " + std::to_string(meta.labels.size()) +
           " rows but the objective has " + std::to_string(n) + " elements");
    }
    if (!feature_labels.empty() && feature_labels != meta.labels) {
      fail(config.metadata + ": labels disagree with the feature file");
    }
  }

  std::vector<std::string> labels;
  if (needs_metadata) {
    labels = meta.labels;
  } else if (!feature_labels.empty()) {
    labels = feature_labels;
  } else {
    for (int u = 0; u < n; ++u) labels.push_back(std::to_string(u));
  }

  if (cs.kind == "hardness" && n != cs.h * cs.k * cs.m) {
    fail("config: the hardness constraint needs exactly h*k*m = " +
         std::to_string(cs.h * cs.k * cs.m) + " elements, got " +
         std::to_string(n));
  }

  // Effective partition limits by genre name, from explicit limits or
  // d_g = round(t * q_g) with dataset frequencies (overridable) as q_g.
  std::map<std::string, int> limits;
  if (cs.kind == "partition") {
    std::map<std::string, int> freq;
    for (int u = 0; u < n; ++u) {
      std::set<std::string> uniq(meta.genres[u].begin(), meta.genres[u].end());
      for (const std::string& g : uniq) ++freq[g];
    }
    if (freq.empty()) fail(config.metadata + ": no genres in metadata");
    if (!cs.limits.empty()) {
      for (const auto& [g, count] : freq) {
        auto it = cs.limits.find(g);
        if (it == cs.limits.end()) {
          fail("config: no partition limit for genre '" + g + "'");
        }
        limits[g] = it->second;
      }
    } else {
      const double t = (config.sweep.param == "t" && sweep_value)
                           ? *sweep_value
                           : cs.t;
      if (!(t > 0.0)) fail("config: partition limits need t > 0");
      for (const auto& [g, count] : freq) {
        auto it = cs.fractions.find(g);
        const double q =
            it != cs.fractions.end() ? it->second : double(count) / n;
        limits[g] = static_cast<int>(std::llround(t * q));
      }
    }
  }

  // Budgets at this sweep point; knapsacks need every rating present.
  std::vector<double> budgets;
  for (const KnapsackSpec& spec : config.knapsacks) {
    budgets.push_back((config.sweep.param == "budget" && sweep_value)
                          ? *sweep_value
                          : spec.budget);
  }
  if (!budgets.empty()) {
    for (int u = 0; u < n; ++u) {
      if (std::isnan(meta.ratings[u])) {
        fail(config.metadata + ": missing rating for element '" + labels[u] +
             "' but a knapsack uses the rating column");
      }
    }
  }

  // Drop every element whose own singleton is infeasible, then renumber.
  std::vector<char> keep(n, 1);
  if (cs.kind == "partition") {
    for (int u = 0; u < n; ++u) {
      for (const std::string& g : meta.genres[u]) {
        if (limits.at(g) == 0) {
          keep[u] = 0;
          out.warnings.push_back("dropped element '" + labels[u] +
                                 "': genre '" + g + "' has limit 0");
          break;
        }
      }
    }
  }
  if (!budgets.empty()) {
    std::vector<std::vector<double>> costs(
        budgets.size(), std::vector<double>(n, 0.0));
    for (std::size_t r = 0; r < budgets.size(); ++r) {
      for (int u = 0; u < n; ++u) {
        costs[r][u] = std::max(meta.ratings[u] - 5.0, 0.0);
      }
    }
    KnapsackSet probe(costs, budgets);
    for (int u : probe.dropped()) {
      if (!keep[u]) continue;
      keep[u] = 0;
      out.warnings.push_back("dropped element '" + labels[u] +
                             "': cost exceeds a knapsack budget");
    }
  }

  std::vector<int> ids;
  for (int u = 0; u < n; ++u) {
    if (keep[u]) ids.push_back(u);
  }
  const int kept = static_cast<int>(ids.size());
  if (kept == 0) fail("config: every element was dropped at ingestion");
  if (cs.kind == "hardness" && kept != n) {
    fail("config: ingestion dropped elements from a structured hard "
         "instance, breaking its h*k*m layout");
  }

  out.ground = GroundSet{kept};
  for (int i : ids) out.labels.push_back(labels[i]);

  if (os.kind == "modular") {
    std::vector<double> weights;
    for (int i : ids) weights.push_back(os.weights[i]);
    out.monotone =
        *std::min_element(weights.begin(), weights.end()) >= 0.0;
    out.objective = make_modular(std::move(weights), os.bias);
  } else if (os.kind == "coverage") {
    std::vector<std::vector<int>> covers;
    for (int i : ids) covers.push_back(os.covers[i]);
    out.monotone = true;
    out.objective = make_coverage(std::move(covers), os.universe_weights);
  } else if (os.kind == "cut") {
    out.objective = make_cut(kept, submatrix(os.cut_weights, n, ids));
  } else {
    std::shared_ptr<const SimilarityMatrix> active = sim;
    if (kept != n) {
      std::vector<double> entries;
      entries.reserve(static_cast<std::size_t>(kept) * kept);
      for (int i : ids) {
        for (int j : ids) entries.push_back(sim->at(i, j));
      }
      active = std::make_shared<SimilarityMatrix>(kept, std::move(entries));
    }
    out.objective = make_diverse_summarization(active, os.lambda);
  }

  if (cs.kind == "cardinality") {
    out.constraint = build_cardinality(kept, cs.limit);
  } else if (cs.kind == "partition") {
    std::set<std::string> present;
    for (int i : ids) present.insert(meta.genres[i].begin(),
                                     meta.genres[i].end());
    std::map<std::string, int> index;
    std::vector<int> limit_vec;
    for (const std::string& g : present) {
      index[g] = static_cast<int>(limit_vec.size());
      limit_vec.push_back(limits.at(g));
    }
    std::vector<std::vector<int>> groups(kept);
    for (int i = 0; i < kept; ++i) {
      std::set<int> uniq;
      for (const std::string& g : meta.genres[ids[i]]) uniq.insert(index.at(g));
      groups[i].assign(uniq.begin(), uniq.end());
    }
    out.constraint = build_partition_limit(std::move(groups), limit_vec);
  } else if (cs.kind == "interval") {
    std::vector<int> keys;
    for (int i : ids) keys.push_back(meta.years[i]);
    out.constraint = build_interval_separation(std::move(keys), cs.gap);
  } else {
    out.constraint = build_hardness_system(cs.k, cs.h, cs.m);
  }

  if (!budgets.empty()) {
    std::vector<std::vector<double>> costs(
        budgets.size(), std::vector<double>(kept, 0.0));
    for (std::size_t r = 0; r < budgets.size(); ++r) {
      for (int i = 0; i < kept; ++i) {
        costs[r][i] = std::max(meta.ratings[ids[i]] - 5.0, 0.0);
      }
    }
    out.knapsacks = KnapsackSet(std::move(costs), budgets);
  }

  return out;
}

namespace {

double get_param(const std::map<std::string, double>& params, const char* key,
                 double fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

void emit_row(std::ostream& csv, const RunReport& report,
              const std::string& sweep_key,
              std::optional<double> sweep_value, double ms) {
  std::map<std::string, std::string> params = report.params;
  if (!sweep_key.empty() && sweep_value) {
    params[sweep_key] = format_double(*sweep_value);
  }
  csv << report.algorithm << ',' << format_params(params) << ','
      << report.solution.size() << ',' << format_double(report.value) << ','
      << report.value_calls << ',' << report.independence_calls << ',';
  if (report.knapsack_rejected) {
    csv << (*report.knapsack_rejected ? '1' : '0');
  }
  csv << ',' << static_cast<long long>(std::llround(ms)) << '\n';
}

// Runs one configured algorithm at one param point and appends its row(s).
void run_algorithm(const AssembledInstance& inst, const AlgorithmSpec& spec,
                   const std::string& sweep_key,
                   std::optional<double> sweep_value, std::ostream& csv) {
  const auto& P = spec.params;
  const int m = inst.knapsacks.num_knapsacks();
  const int k = inst.constraint->declared_k();
  const SystemClass cls = inst.constraint->declared_class();
  const bool monotone =
      get_param(P, "monotone", inst.monotone ? 1.0 : 0.0) != 0.0;
  const double eps = get_param(P, "epsilon", 0.1);
  const double delta = get_param(P, "delta", 0.25);
  const double rho = get_param(P, "rho", 0.0);
  const double beta = get_param(P, "beta", -1.0);
  const double alpha = get_param(P, "alpha", kUsmAlpha);
  const double probability = get_param(P, "probability", -1.0);
  const auto seed =
      static_cast<std::uint64_t>(std::llround(get_param(P, "seed", 1.0)));

  auto timed = [&](auto&& run) {
    CountedObjective f(inst.objective);
    CountedIndependence indep(inst.constraint);
    const auto t0 = std::chrono::steady_clock::now();
    RunReport report = run(f, indep);
    const std::chrono::duration<double, std::milli> elapsed =
        std::chrono::steady_clock::now() - t0;
    emit_row(csv, report, sweep_key, sweep_value, elapsed.count());
  };

  const int ell_sgs = [&] {
    int ell = static_cast<int>(get_param(P, "ell", 0.0));
    return ell > 0 ? ell : choose_num_solutions(cls, k, m, monotone);
  }();
  const int ell_rg = [&] {
    int ell = static_cast<int>(get_param(P, "ell", 0.0));
    return ell > 0 ? ell : choose_num_iterations(k, m, alpha, monotone);
  }();

  const std::string& name = spec.name;
  if (name == "greedy") {
    timed([&](auto& f, auto& i) { return greedy(inst.ground, f, i); });
  } else if (name == "sgs") {
    timed([&](auto& f, auto& i) {
      return simultaneous_greedys(inst.ground, f, i, ell_sgs);
    });
  } else if (name == "fast-sgs") {
    timed([&](auto& f, auto& i) {
      return fast_sgs(inst.ground, f, i, ell_sgs, eps);
    });
  } else if (name == "sgs-ell-sweep") {
    const int ell_max =
        std::max(1, static_cast<int>(get_param(P, "ell_max", 10.0)));
    for (int ell = 1; ell <= ell_max; ++ell) {
      timed([&](auto& f, auto& i) {
        return simultaneous_greedys(inst.ground, f, i, ell);
      });
    }
  } else if (name == "knapsack-sgs") {
    timed([&](auto& f, auto& i) {
      return knapsack_sgs(inst.ground, f, i, inst.knapsacks, ell_sgs, rho,
                          eps);
    });
  } else if (name == "density-search-sgs") {
    timed([&](auto& f, auto& i) {
      return density_search_sgs(inst.ground, f, i, inst.knapsacks, ell_sgs,
                                delta, eps, beta);
    });
  } else if (name == "repeated-greedy") {
    timed([&](auto& f, auto& i) {
      return repeated_greedy(inst.ground, f, i, ell_rg);
    });
  } else if (name == "modified-greedy") {
    timed([&](auto& f, auto& i) {
      return modified_greedy(inst.ground, f, i, inst.knapsacks, rho, eps);
    });
  } else if (name == "modified-repeated-greedy") {
    timed([&](auto& f, auto& i) {
      return modified_repeated_greedy(inst.ground, f, i, inst.knapsacks,
                                      ell_rg, rho, eps);
    });
  } else if (name == "density-search-rg") {
    timed([&](auto& f, auto& i) {
      return density_search_rg(inst.ground, f, i, inst.knapsacks, ell_rg,
                               delta, eps, beta, alpha);
    });
  } else if (name == "sample-greedy") {
    const int sample_k = std::max(1, static_cast<int>(get_param(P, "k", k)));
    timed([&](auto& f, auto& i) {
      return sample_greedy(inst.ground, f, i, sample_k, seed, probability);
    });
  } else {
    fail("config: unknown algorithm '" + name + "'");
  }
}

}  // namespace

void run_experiment(const ExperimentConfig& config, std::ostream& csv,
                    std::ostream* log) {
  std::vector<std::optional<double>> points;
  if (config.sweep.param.empty()) {
    points.emplace_back(std::nullopt);
  } else {
    for (double v : config.sweep.values) points.emplace_back(v);
  }

  // Assemble everything first so ingestion or constraint errors abort
  // before any algorithm runs.
  std::vector<AssembledInstance> instances;
  instances.reserve(points.size());
  for (const auto& p : points) instances.push_back(assemble_instance(config, p));

  if (log) {
    for (std::size_t i = 0; i < instances.size(); ++i) {
      for (const std::string& w : instances[i].warnings) {
        *log << "warning";
        if (points[i]) {
          *log << " [" << config.sweep.param << '='
               << format_double(*points[i]) << ']';
        }
        *log << ": " << w << '\n';
      }
    }
  }

  csv << "algorithm,params,size,value,value_calls,independence_calls,E,ms\n";
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (const AlgorithmSpec& spec : config.algorithms) {
      run_algorithm(instances[i], spec, config.sweep.param, points[i], csv);
    }
  }
}

}  // namespace submax
