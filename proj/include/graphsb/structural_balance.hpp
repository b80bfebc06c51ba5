#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "graphsb/graph.hpp"

namespace graphsb {

/// The `k` classes with the fewest training nodes, ties broken by smaller
/// class id. Returned in ascending id order.
std::vector<int> identify_minority_classes(std::span<const int> labels, std::span<const std::uint8_t> train_mask,
                                           int num_classes, int k);

/// Cosine similarity; 0 when either vector is zero.
double cosine_similarity(const Eigen::Ref<const Eigen::VectorXd>& a, const Eigen::Ref<const Eigen::VectorXd>& b);

struct NodeEnhancement {
  NodeId node = 0;
  std::size_t original_degree = 0;
  double degree_gap = 0.0;        // max(0, mean majority degree - d_v)
  std::size_t target = 0;         // floor(degree_gap)
  std::size_t candidate_count = 0;
  std::vector<NodeId> selected;   // top-`target` candidates by similarity
};

struct EnhancementReport {
  double majority_mean_degree = 0.0;
  std::vector<NodeEnhancement> nodes;
  std::size_t edges_added = 0;    // new undirected edges in A'
  std::size_t empty_candidate_nodes = 0;
};

/// Structure enhancement. Every training-labeled node of a minority class
/// gains edges to its most similar non-adjacent nodes within `max_hops`,
/// until its degree reaches the mean degree of labeled majority nodes.
/// Degrees, candidates and similarities are all taken from the input graph,
/// so the result does not depend on node processing order.
std::pair<Adjacency, EnhancementReport> enhance_structure(const Graph& g, std::span<const int> minority_classes,
                                                          int max_hops = 4);

/// D^{-1/2}(A + I)D^{-1/2}.
SparseMatrix normalize_adjacency(const Adjacency& adjacency);

struct DiffusionMatrix {
  Eigen::MatrixXd S;
  double alpha = 0.0;
  int steps = 0;
};

/// Runs S <- alpha * A_hat * S + (1 - alpha) * S from S = I for `steps`
/// iterations, i.e. S = ((1 - alpha) I + alpha A_hat)^steps.
DiffusionMatrix relation_diffusion(const SparseMatrix& a_hat, double alpha, int steps);

/// alpha * (I - (1 - alpha) A_hat)^{-1}. Diagnostic only.
Eigen::MatrixXd ppr_closed_form(const SparseMatrix& a_hat, double alpha);

/// Drops entries strictly below `threshold`.
SparseMatrix sparsify(const Eigen::MatrixXd& s, double threshold);

inline constexpr double kDiffusionThreshold = 1e-4;

/// Symmetric Bernoulli keep-mask. Each upper-triangular entry, diagonal
/// included, is kept when its uniform draw r_ij in (0, 1] exceeds p_drop.
/// Draws are counter-based on (seed, i, j) so the dense and sparse
/// application paths agree entry by entry.
class DropoutMask {
 public:
  DropoutMask(std::size_t n, double p_drop, std::uint64_t seed);

  std::size_t size() const { return n_; }
  double p_drop() const { return p_drop_; }
  std::uint64_t seed() const { return seed_; }
  bool kept(std::size_t i, std::size_t j) const;
  Eigen::MatrixXd dense() const;

 private:
  std::size_t n_;
  double p_drop_;
  std::uint64_t seed_;
};

/// (S .* M) / (1 - p_drop).
Eigen::MatrixXd apply_mask(const Eigen::MatrixXd& s, const DropoutMask& mask);
SparseMatrix apply_mask(const SparseMatrix& s, const DropoutMask& mask);

}  // namespace graphsb
