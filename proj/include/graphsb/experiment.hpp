#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "graphsb/graph.hpp"
#include "graphsb/metrics.hpp"
#include "graphsb/trainer.hpp"

namespace graphsb {

struct DatasetSpec {
  enum class Kind { kSbm, kFiles, kLinqs };
  Kind kind = Kind::kSbm;
  // kSbm
  SbmSpec sbm{50, 500, 0.1, 0.01, 0};
  std::size_t feature_dim = 16;
  double centroid_gap = 1.0;
  // kFiles: edges / features / labels; kLinqs: content / cites
  std::filesystem::path edges, features, labels;
  std::filesystem::path content, cites;
  bool row_normalize = false;  // L1-normalize feature rows before training
};

enum class Ablation { kNone, kSe, kRd, kBoth };

Ablation parse_ablation(const std::string& s);
const char* to_string(Ablation a);

/// Switches modules off. kBoth is the plain pipeline without any imbalance
/// handling: no enhancement, no diffusion, no synthesis, no edge objective.
void apply_ablation(TrainConfig& config, Ablation ablation);

/// One minority class: the smallest one.
inline SplitSpec default_split() {
  SplitSpec s;
  s.k_smallest = 1;
  return s;
}

struct ExperimentConfig {
  DatasetSpec dataset;
  SplitSpec split = default_split();  // seed is replaced per run
  TrainConfig train;
  Ablation ablation = Ablation::kNone;
  std::vector<std::uint64_t> seeds = {0, 1, 2, 3, 4};
  std::filesystem::path output_dir;
  bool write_artifacts = true;
  bool write_checkpoints = false;
};

nlohmann::json to_json(const ExperimentConfig& config);
ExperimentConfig config_from_json(const nlohmann::json& j, ExperimentConfig base = {});

/// FNV-1a over the canonical JSON of the config (seeds and output dir
/// excluded), as 16 hex digits.
std::string config_hash(const ExperimentConfig& config);

/// Loads or generates the graph (without split). SBM graphs are regenerated
/// for each seed so the seed also covers the graph draw.
Graph load_dataset(const DatasetSpec& spec, std::uint64_t seed, IdMapping* mapping = nullptr);

struct RunRecord {
  std::uint64_t seed = 0;
  bool ok = false;
  std::string error;
  Metrics test;
  DistanceRatio separation;
  int best_epoch = -1;
  int epochs = 0;
  double wall_seconds = 0.0;
  std::vector<double> final_scales;
  std::size_t edges_added = 0;
};

struct ExperimentResult {
  std::string config_hash;
  std::vector<RunRecord> runs;
  Summary accuracy, macro_f1, roc_auc, distance_ratio;
  std::size_t failed = 0;
};

/// One training run per seed: split, balance, train, evaluate on the test
/// mask. Failures are recorded per seed. Seeds run on up to SB_THREADS
/// threads; results are ordered by seed position so aggregates do not
/// depend on scheduling.
ExperimentResult run_experiment(const ExperimentConfig& config);

/// Aggregate without timing fields, so repeated runs produce identical files.
nlohmann::json aggregate_json(const ExperimentConfig& config, const ExperimentResult& result);
nlohmann::json run_json(const RunRecord& run, const std::string& config_hash);

struct SweepRow {
  double rho = 0.0;
  ExperimentResult result;
};
std::vector<SweepRow> sweep_rho(const ExperimentConfig& config, const std::vector<double>& rhos);

struct AblationRow {
  Ablation ablation = Ablation::kNone;
  ExperimentResult result;
};
std::vector<AblationRow> run_ablations(const ExperimentConfig& config, const std::vector<Ablation>& ablations);

/// Structural balance only: writes the enhanced edge list and the dense
/// (optionally masked) diffusion operator for external trainers.
struct PluginOutput {
  Adjacency adjacency;
  Eigen::MatrixXd op;
  EnhancementReport enhancement;
};
PluginOutput plugin_mode(const ExperimentConfig& config, std::uint64_t seed);

void write_matrix_csv(const Eigen::MatrixXd& m, const std::filesystem::path& path);
Eigen::MatrixXd read_matrix_csv(const std::filesystem::path& path);
void write_edge_list(const Adjacency& adjacency, const std::filesystem::path& path);

/// Per-node prediction dump: node,label,split,p_0..p_{C-1}.
void write_predictions(const Graph& g, const Eigen::MatrixXd& probabilities, const std::filesystem::path& path);
/// Recomputes test-split metrics from a prediction dump.
Metrics metrics_from_dump(const std::filesystem::path& path);

nlohmann::json metrics_json(const Metrics& m);

/// Thread cap from SB_THREADS (default 1).
unsigned thread_budget();

}  // namespace graphsb
