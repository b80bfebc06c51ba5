#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "graphsb/graph.hpp"

namespace graphsb {

// ---------------------------------------------------------------------------
// Mixup minority synthesis
// ---------------------------------------------------------------------------

/// Nearest node to `v` in `pool` with the same label, by Euclidean distance
/// between rows of `h`; ties go to the smaller id. Returns `v` itself when it
/// has no same-class partner in the pool.
NodeId nearest_same_class(const Eigen::MatrixXd& h, std::span<const int> labels, std::span<const NodeId> pool,
                          NodeId v);

struct SyntheticNode {
  NodeId source = 0;
  NodeId neighbor = 0;  // == source when the class is a singleton
  double lambda = 1.0;
  int label = 0;
};

/// Per-class scale bookkeeping for one training run.
struct SynthesisPlan {
  std::vector<int> classes;
  std::vector<double> scale;
  std::vector<double> scale_init;
  std::vector<std::size_t> labeled;  // labeled count per planned class
  std::vector<SyntheticNode> nodes;
};

/// alpha_init for class c = N / (M * |C_c|) with N labeled nodes over M
/// classes and |C_c| labeled nodes of class c.
std::vector<double> initial_scales(std::span<const int> labels, std::span<const std::uint8_t> train_mask,
                                   int num_classes, std::span<const int> classes);

/// round(scale * labeled).
std::size_t synthetic_count(double scale, std::size_t labeled);

/// Draws round(scale_i * |C_i|) synthetic nodes per class: source nodes
/// uniformly from the labeled members, partner = nearest labeled same-class
/// node in the current embedding, lambda ~ U[0, 1].
std::vector<SyntheticNode> draw_synthetic_nodes(const Eigen::MatrixXd& h, std::span<const int> labels,
                                                std::span<const NodeId> labeled_nodes, std::span<const int> classes,
                                                std::span<const double> scales, std::mt19937_64& rng);

/// Rows lambda * h[source] + (1 - lambda) * h[neighbor].
Eigen::MatrixXd mixup(const Eigen::MatrixXd& h, std::span<const SyntheticNode> nodes);

// ---------------------------------------------------------------------------
// Edge predictor
// ---------------------------------------------------------------------------

inline constexpr int kPathClasses = 4;  // min(d(v, u), 3)

struct EdgePredictor {
  Eigen::MatrixXd bilinear;  // F x F, score = sigmoid(h_v^T W h_u)
  Eigen::MatrixXd local_w1;  // F x F
  Eigen::MatrixXd local_b1;  // 1 x F
  Eigen::MatrixXd local_w2;  // F x kPathClasses
  Eigen::MatrixXd local_b2;  // 1 x kPathClasses
  Eigen::MatrixXd global_w;  // F x T
  Eigen::MatrixXd global_b;  // 1 x T

  static EdgePredictor zeros(Eigen::Index hidden, Eigen::Index clusters);
};

/// sigmoid(a * W * b^T), |a| x |b|.
Eigen::MatrixXd edge_scores(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, const Eigen::MatrixXd& bilinear);

/// For each synthetic row, the original nodes whose score is strictly greater
/// than `threshold`.
std::vector<std::vector<NodeId>> predict_edges(const Eigen::MatrixXd& synthetic, const Eigen::MatrixXd& original,
                                               const Eigen::MatrixXd& bilinear, double threshold);

struct PairSample {
  std::vector<NodeId> first;
  std::vector<NodeId> second;
  std::vector<int> path_class;

  std::size_t size() const { return first.size(); }
};

/// `count` ordered pairs drawn uniformly, labeled with the capped distance
/// from a row-major n x n table.
PairSample sample_pairs(std::size_t n, std::size_t count, std::span<const std::uint8_t> distance_table,
                        std::mt19937_64& rng);

/// kBalanced weights every non-edge by |A| / (n^2 - |A|) so both kinds of
/// entry carry equal total mass, then divides by n^2.
enum class RecReduction { kSum, kMean, kBalanced };

struct EdgeLosses {
  double rec = 0.0;
  double local = 0.0;
  double global = 0.0;
  double total() const { return rec + local + global; }
};

struct EdgeGradients {
  Eigen::MatrixXd h;
  EdgePredictor predictor;
};

/// L_rec = ||sigmoid(H W H^T) - A||_F^2 (divided by n^2 under kMean, see
/// RecReduction for kBalanced),
/// L_local = mean cross-entropy of the path-length head on h_v .* h_u,
/// L_global = (1/n) sum_i ||h_phi(h_i) - d_i||^2.
/// When `grad` is non-null it receives dL_edge/dH and parameter gradients.
EdgeLosses edge_losses(const Eigen::MatrixXd& h, const Adjacency& adjacency, const EdgePredictor& predictor,
                       const PairSample& pairs, const Eigen::MatrixXd& distance_targets, RecReduction reduction,
                       EdgeGradients* grad = nullptr);

// ---------------------------------------------------------------------------
// Global-consistency targets
// ---------------------------------------------------------------------------

/// Lloyd's k-means with seeded distinct-point initialization. Returns the k
/// centroids as rows.
Eigen::MatrixXd kmeans(const Eigen::MatrixXd& points, int k, int iterations, std::uint64_t seed,
                       std::vector<int>* assignment = nullptr);

/// For every centroid, the node whose embedding is closest; then hop
/// distances from every node to each of those nodes (n x T). Unreachable
/// pairs get one more than the largest finite distance.
Eigen::MatrixXd centroid_distance_targets(const Eigen::MatrixXd& h, const Adjacency& adjacency,
                                          const Eigen::MatrixXd& centroids, std::vector<NodeId>* anchors = nullptr);

// ---------------------------------------------------------------------------
// Q-learning over-sampling controller
// ---------------------------------------------------------------------------

enum class ScaleAction { kIncrease = 0, kDecrease = 1, kHold = 2 };
inline constexpr int kScaleActions = 3;

const char* to_string(ScaleAction a);

struct QControllerConfig {
  double epsilon = 0.9;
  double epsilon_decay = 0.99;
  double discount = 1.0;
  double learning_rate = 0.1;
  double step = 0.05;
  double max_scale = 3.0;
};

/// Tabular Q-learning over a single scale. States are the scale discretized
/// in `step` bins over [0, max_scale]. Actions are tried in the order
/// increase, decrease, hold, which also decides greedy ties.
class QController {
 public:
  QController(QControllerConfig config, double initial_scale, std::uint64_t seed);

  /// Feeds the validation accuracy observed under the current scale,
  /// updates the value of the previous (state, action) and applies the next
  /// epsilon-greedy action. Returns the new scale.
  double step(double validation_accuracy);

  double scale() const { return scale_; }
  double epsilon() const { return epsilon_; }
  double last_reward() const { return last_reward_; }
  ScaleAction last_action() const { return last_action_; }
  int state() const { return state_of(scale_); }
  int num_states() const { return static_cast<int>(q_.size()); }
  const std::array<double, kScaleActions>& q(int state) const { return q_[static_cast<std::size_t>(state)]; }
  ScaleAction greedy(int state) const;

 private:
  int state_of(double scale) const;

  QControllerConfig config_;
  double scale_;
  double epsilon_;
  std::mt19937_64 rng_;
  std::vector<std::array<double, kScaleActions>> q_;
  bool has_pending_ = false;
  int pending_state_ = 0;
  ScaleAction last_action_ = ScaleAction::kHold;
  double previous_accuracy_ = 0.0;
  double last_reward_ = 0.0;
};

}  // namespace graphsb
