#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "graphsb/graph.hpp"

namespace graphsb {

/// gamma = (q + p beta) / (p + q beta).
double degree_disparity(double p, double q, double beta);

struct PropagationMatrix {
  Eigen::Matrix2d m;
  double lambda1 = 0.0;  // larger eigenvalue
  double lambda2 = 0.0;  // smaller eigenvalue
};

/// Two-class expected propagation matrix
///   [[p/(p+q beta), q beta/(q+p beta)], [q/(p+q beta), p beta/(q+p beta)]]
/// with eigenvalues from the trace/determinant formula.
PropagationMatrix propagation_matrix(double p, double q, double beta);

/// Row-normalized counterpart [[p, q beta], [q, p beta]] with unit row sums.
/// Its eigenvalues coincide with those of propagation_matrix.
Eigen::Matrix2d mean_propagation_matrix(double p, double q, double beta);

/// (w_norm / d1)^l * ((beta + gamma) / (gamma (beta + 1)))^l.
double path_weight_expectation(double p, double q, double beta, int l, double d1, double w_norm = 1.0);

struct Estimate {
  double mean = 0.0;
  double stderr_ = 0.0;  // standard error over seeds
  std::size_t seeds = 0;
};

struct PathWeightRow {
  int length = 0;
  double predicted = 0.0;
  Estimate measured;
};

/// Walks that pick the class of every next node with the population
/// proportions (n1 : n2) and then a uniform neighbor of that class; the
/// weight of a walk is the product of 1/degree over the visited nodes.
/// Averages `walks` walks per seed on fresh graphs.
std::vector<PathWeightRow> path_weight_experiment(const SbmSpec& spec, int max_length, int seeds, int walks);

struct GradientRow {
  double beta = 0.0;
  Estimate ratio;                 // minority / majority
  std::vector<double> per_seed;
};

struct GradientReport {
  std::vector<GradientRow> rows;
  double slope = 0.0;             // d log(ratio) / d log(1/beta)
  double slope_stderr = 0.0;
  bool monotone = false;          // ratio strictly decreasing in beta
};

/// For each beta: n2 = beta * n1 on an SBM with the given p, q. A linear GCN
/// logits = A_hat^depth [X | 1] W is evaluated at W = 0, the untrained state
/// whose gradient drives the first step, under the mean cross-entropy over
/// all nodes; the class-aggregate parameter
/// gradient sum_{v in c} dL_v/dW is formed per class and the ratio of
/// Frobenius norms minority / majority is reported.
GradientReport gradient_dominance_experiment(std::size_t n1, double p, double q, std::span<const double> betas,
                                             int depth, int seeds, std::uint64_t base_seed = 0);

struct AssimilationCurve {
  std::vector<double> raw;          // ||mu1 - mu2|| per layer, l = 0..L
  std::vector<double> corrected;    // ||gamma mu1 - mu2|| per layer
  std::vector<double> raw_ratio;    // per-layer ratios, l = 1..L
  std::vector<double> corrected_ratio;
};

/// z(l) = M (z(l-1) W) with W = sigma I, z(0) rows are the two centroids.
/// `corrected` projects onto the subdominant left eigenvector (gamma, -1),
/// which removes the non-consensus dominant mode of M.
AssimilationCurve assimilation_recursion(double p, double q, double beta, double sigma, int layers,
                                         const Eigen::MatrixXd& centroids);

struct AssimilationMonteCarlo {
  std::vector<Estimate> distance;   // ||mu1 - mu2|| per layer, l = 0..L
  Estimate rate;                    // per-layer decay from a log-linear fit
  double rate_ci_low = 0.0;
  double rate_ci_high = 0.0;
};

/// Graph-level check: every node starts at its class centroid, then `layers`
/// rounds of h <- sigma * D^{-1} A h. The decay of the class-centroid gap is
/// fit per seed by least squares on log distance over l = 1..L. Centroid
/// rows default to the two unit vectors.
AssimilationMonteCarlo assimilation_monte_carlo(const SbmSpec& spec, double sigma, int layers, int seeds,
                                                const Eigen::MatrixXd& centroids = Eigen::MatrixXd::Identity(2, 2));

struct TreeRow {
  int radius = 0;
  double entry = 0.0;   // (A_hat^{r+1})_{root, leaf at depth r+1}
  double oracle = 0.0;  // product of normalized weights along the unique path
  double share = 0.0;   // entry / sum of entries over depth r+1
};

struct TreeReport {
  int branching = 0;
  std::vector<TreeRow> rows;
  double entry_slope = 0.0;  // fit of log entry vs r
  double share_slope = 0.0;  // fit of log share vs r
};

/// Complete b-ary tree of depth r+1 for r = 0..max_radius, A_hat with
/// self-loops and symmetric normalization.
TreeReport tree_oversquash_decay(int branching, int max_radius);

/// Ordinary least squares slope and its standard error.
std::pair<double, double> fit_slope(std::span<const double> x, std::span<const double> y);

struct TheoryConfig {
  double p = 0.5;
  double q = 0.1;
  double beta = 10.0;
  std::size_t n1 = 200;
  int layers = 6;
  double sigma = 1.0;
  int seeds = 20;
  int path_length = 3;
  int walks = 4000;
  std::vector<double> gradient_betas = {2.0, 5.0, 10.0};
  std::size_t gradient_n1 = 50;
  int gradient_depth = 2;
  std::vector<int> tree_branching = {1, 2, 3};
  int tree_radius = 6;
  std::uint64_t seed = 0;
};

/// Runs every experiment and returns the report as JSON text. When
/// `csv_dir` is non-empty, per-layer curves are also written as CSV files.
std::string theory_report(const TheoryConfig& config, const std::string& csv_dir = "");

}  // namespace graphsb
