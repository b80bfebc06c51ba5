#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "graphsb/graph.hpp"

namespace graphsb {

struct ClassScores {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t support = 0;
};

struct Metrics {
  double accuracy = 0.0;
  double macro_f1 = 0.0;
  double roc_auc = 0.0;
  std::vector<ClassScores> per_class;
  std::size_t evaluated = 0;
};

/// Argmax of each row; ties go to the smaller class id.
std::vector<int> argmax_rows(const Eigen::MatrixXd& probabilities);

/// Binary ROC-AUC by pair counting with 0.5 credit for tied scores. Returns
/// 0.5 when either side is empty.
double binary_auc(std::span<const double> scores, std::span<const std::uint8_t> positive);

/// Accuracy, macro-F1 (unweighted mean over classes that occur as a label or
/// a prediction in the evaluated rows) and macro one-vs-rest AUC over classes
/// with both positives and negatives. An empty `mask` evaluates all rows.
Metrics compute_metrics(const Eigen::MatrixXd& probabilities, std::span<const int> labels,
                        std::span<const std::uint8_t> mask = {});

struct DistanceRatio {
  double ratio = 0.0;       // mean inter / mean intra
  double mean_intra = 0.0;
  double mean_inter = 0.0;
  std::vector<int> excluded_classes;  // fewer than two members
  bool degenerate = false;            // mean intra distance is zero
};

/// Class-separation ratio of embedding rows. Per class k, D_intra averages
/// Euclidean distances over ordered pairs inside k and D_inter averages
/// distances between k and every node of the other classes. Both are then
/// averaged over the included classes.
DistanceRatio distance_ratio(const Eigen::MatrixXd& h, std::span<const int> labels,
                             std::span<const std::uint8_t> mask = {});

struct Summary {
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation, 0 for a single value
  std::size_t count = 0;
};

Summary summarize(std::span<const double> values);

}  // namespace graphsb
