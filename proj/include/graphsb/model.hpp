#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "graphsb/graph.hpp"
#include "graphsb/synthesis.hpp"

namespace graphsb {

/// Propagation operator of the encoder. Diffused operators are usually
/// nearly full, where a dense product beats a sparse one by a wide margin,
/// so the storage follows the fill ratio.
class Propagator {
 public:
  static constexpr double kDenseFill = 0.25;

  Propagator() = default;
  Propagator(const SparseMatrix& s);  // NOLINT: implicit on purpose
  explicit Propagator(Eigen::MatrixXd s) : dense_(std::move(s)), is_dense_(true) {}

  Eigen::Index rows() const { return is_dense_ ? dense_.rows() : sparse_.rows(); }
  Eigen::Index cols() const { return is_dense_ ? dense_.cols() : sparse_.cols(); }
  bool is_dense() const { return is_dense_; }
  const Eigen::MatrixXd& dense() const { return dense_; }
  const SparseMatrix& sparse() const { return sparse_; }

  Eigen::MatrixXd apply(const Eigen::MatrixXd& x) const;            // S x
  Eigen::MatrixXd apply_transpose(const Eigen::MatrixXd& x) const;  // S^T x

 private:
  SparseMatrix sparse_;
  Eigen::MatrixXd dense_;
  bool is_dense_ = false;
};

struct ModelShape {
  Eigen::Index input_dim = 0;
  Eigen::Index hidden = 32;
  int layers = 2;
  int num_classes = 2;
  Eigen::Index clusters = 2;  // global-consistency targets per node
};

/// Every trainable tensor. Biases are stored as 1 x k matrices so the
/// optimizer and the gradient checker can treat all blocks alike.
struct Parameters {
  std::vector<Eigen::MatrixXd> enc_w;  // layer 0: p0 x F, then F x F
  std::vector<Eigen::MatrixXd> enc_b;  // 1 x F
  Eigen::MatrixXd cls_w1;              // F x 2F
  Eigen::MatrixXd cls_w2;              // C x F
  EdgePredictor edge;

  enum class Group { kEncoder, kClassifier, kEdge };

  struct Block {
    std::string name;
    Group group;
    Eigen::MatrixXd* value;
  };
  struct ConstBlock {
    std::string name;
    Group group;
    const Eigen::MatrixXd* value;
  };

  std::vector<Block> blocks();
  std::vector<ConstBlock> blocks() const;

  /// Same shapes, all zeros.
  Parameters zeros_like() const;
};

/// Glorot-uniform weights, zero biases.
Parameters init_parameters(const ModelShape& shape, std::uint64_t seed);

/// Inverted-dropout masks for each encoder layer (entries 0 or 1/(1-p)).
std::vector<Eigen::MatrixXd> sample_feature_dropout(Eigen::Index rows, Eigen::Index hidden, int layers, double p,
                                                    std::mt19937_64& rng);

struct EncoderCache {
  std::vector<Eigen::MatrixXd> inputs;     // input of each layer
  std::vector<Eigen::MatrixXd> pre;        // S X W + b
};

/// h = dropout(relu(S X W + b)) applied once per layer with S shared. An
/// empty `dropout` span means evaluation mode.
Eigen::MatrixXd encode(const Propagator& s, const Eigen::MatrixXd& x, const Parameters& params,
                       std::span<const Eigen::MatrixXd> dropout = {}, EncoderCache* cache = nullptr);

/// Row-wise mean of neighbor embeddings; zero for isolated rows.
Eigen::MatrixXd aggregate(const Adjacency& adjacency, const Eigen::MatrixXd& h);

/// softmax(W2 relu(W1 [self || aggregate])) row by row.
Eigen::MatrixXd classify(const Eigen::MatrixXd& self_rows, const Eigen::MatrixXd& aggregate_rows,
                         const Parameters& params);

/// Class probabilities for node `v` of an augmented node set. `h_aug` holds
/// one embedding row per node, `columns[v]` lists the nodes u with
/// A_O[u, v] = 1.
Eigen::VectorXd classify_node(const Eigen::MatrixXd& h_aug, std::span<const std::vector<NodeId>> columns, NodeId v,
                              const Parameters& params);

/// Mean cross-entropy of `probabilities` against `labels` (one row each).
double node_loss(const Eigen::MatrixXd& probabilities, std::span<const int> labels);

/// Evaluation-mode class probabilities for every original node.
Eigen::MatrixXd predict_proba(const Propagator& s, const Eigen::MatrixXd& x, const Adjacency& adjacency,
                              const Parameters& params);

/// One fully specified training step. Everything stochastic (dropout masks,
/// synthetic plan, predicted synthetic edges, pair sample) is fixed here so
/// the loss is a deterministic function of the parameters.
struct StepInputs {
  const Propagator* s = nullptr;
  const Eigen::MatrixXd* x = nullptr;
  const Adjacency* adjacency = nullptr;
  std::span<const int> labels;
  std::vector<NodeId> labeled;
  std::vector<SyntheticNode> synthetic;
  std::vector<std::vector<NodeId>> synthetic_edges;
  std::vector<Eigen::MatrixXd> dropout;
  PairSample pairs;
  Eigen::MatrixXd distance_targets;
  RecReduction reduction = RecReduction::kBalanced;
  double node_weight = 1.0;
  double edge_weight = 1.0;
};

struct LossBreakdown {
  double node = 0.0;
  double rec = 0.0;
  double local = 0.0;
  double global = 0.0;
  double total = 0.0;
};

/// node_weight * L_node + edge_weight * (L_rec + L_local + L_global) and,
/// when `grad` is non-null, its exact gradient for every parameter block.
LossBreakdown loss_and_gradients(const Parameters& params, const StepInputs& in, Parameters* grad);

/// Adam with L2 weight decay added to the gradient.
class Adam {
 public:
  Adam(const Parameters& like, double lr = 0.001, double weight_decay = 5e-4, double beta1 = 0.9,
       double beta2 = 0.999, double eps = 1e-8);

  /// Updates blocks whose group is enabled in `active` (indexed by Group).
  void step(Parameters& params, const Parameters& grad, std::array<bool, 3> active = {true, true, true});

  long steps() const { return t_; }
  const Parameters& first_moment() const { return m_; }
  const Parameters& second_moment() const { return v_; }
  const std::vector<long>& block_steps() const { return block_steps_; }

  /// Reinstates moments and counters saved from another instance.
  void restore(Parameters m, Parameters v, long steps, std::vector<long> block_steps);

 private:
  double lr_, weight_decay_, beta1_, beta2_, eps_;
  long t_ = 0;
  std::vector<long> block_steps_;  // bias correction is per block so late-enabled groups start fresh
  Parameters m_, v_;
};

}  // namespace graphsb
