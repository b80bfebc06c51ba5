#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "graphsb/graph.hpp"
#include "graphsb/model.hpp"
#include "graphsb/structural_balance.hpp"
#include "graphsb/synthesis.hpp"

namespace graphsb {

enum class Oversample { kNone, kFixed, kRl };

struct TrainConfig {
  // Model and optimizer.
  Eigen::Index hidden = 32;
  int layers = 2;
  double lr = 0.001;
  double weight_decay = 5e-4;
  double feature_dropout = 0.5;
  int max_epochs = 4000;
  int patience = 1000;  // joint epochs without a validation gain
  int pretrain_epochs = 100;

  // Structural balance.
  bool structure_enhancement = true;
  bool relation_diffusion = true;
  int max_hops = 4;
  double alpha = 0.5;
  int steps = 4;
  double p_drop = 0.1;
  double diffusion_threshold = kDiffusionThreshold;

  // Quantity balance.
  Oversample oversample = Oversample::kRl;
  double fixed_scale = 1.0;
  int rl_interval = 10;
  QControllerConfig rl;
  bool edge_losses = true;  // off means no edge predictor and no pretraining
  double edge_weight = 1.0;
  double eta = 0.5;
  int pair_factor = 10;
  int kmeans_iterations = 50;
  RecReduction reduction = RecReduction::kBalanced;

  std::uint64_t seed = 0;

  void validate() const;
};

/// Operator and graph fed to the learner after structural balancing.
struct Preprocessed {
  Adjacency adjacency;          // A' (or A when enhancement is off)
  SparseMatrix op;              // thresholded diffusion of A', or A_hat
  EnhancementReport enhancement;
  bool enhanced = false;
  bool diffused = false;
};

Preprocessed preprocess(const Graph& g, std::span<const int> minority_classes, const TrainConfig& config);

struct EpochRecord {
  int epoch = 0;
  bool pretrain = false;
  LossBreakdown loss;
  double train_accuracy = 0.0;
  double val_accuracy = 0.0;
  double val_macro_f1 = 0.0;
  std::size_t synthetic = 0;
  std::size_t synthetic_edges = 0;
};

struct RlEvent {
  int epoch = 0;
  int cls = 0;
  double scale = 0.0;
  double reward = 0.0;
  ScaleAction action = ScaleAction::kHold;
};

/// Every parameter tensor, optimizer moments and the epoch counter.
struct Checkpoint {
  Parameters params;
  Parameters adam_m;
  Parameters adam_v;
  long adam_steps = 0;
  std::vector<long> adam_block_steps;
  int epoch = 0;
  std::uint64_t seed = 0;
  std::string phase;
};

struct TrainResult {
  Parameters params;  // best validation checkpoint
  Preprocessed prep;
  std::vector<EpochRecord> history;
  std::vector<RlEvent> rl_trace;
  std::vector<int> minority_classes;
  std::vector<double> initial_scales;
  std::vector<double> final_scales;
  std::vector<NodeId> anchors;
  int best_epoch = -1;
  double best_val_f1 = -1.0;
  int epochs_run = 0;
  Checkpoint final_state;  // last iterate, not the best one
};

/// Phase 1 optimizes the edge objective alone (encoder and edge predictor).
/// Phase 2 optimizes L_node + edge_weight * L_edge with per-epoch edge
/// dropout, mixup synthesis and predicted synthetic edges, and stops early
/// on validation macro-F1. Throws std::runtime_error on a non-finite loss.
TrainResult train(const Graph& g, std::span<const int> minority_classes, const TrainConfig& config);

/// Evaluation-mode embeddings and class probabilities under a trained model.
struct Evaluation {
  Eigen::MatrixXd embeddings;
  Eigen::MatrixXd probabilities;
};
Evaluation evaluate(const Graph& g, const TrainResult& result);

/// Versioned JSON dump of a checkpoint.
void write_checkpoint(const Checkpoint& checkpoint, const std::filesystem::path& path);
Checkpoint read_checkpoint(const std::filesystem::path& path);

}  // namespace graphsb
