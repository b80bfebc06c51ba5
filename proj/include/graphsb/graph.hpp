#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace graphsb {

using NodeId = std::int32_t;
using SparseMatrix = Eigen::SparseMatrix<double, Eigen::RowMajor>;

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& file, std::size_t line, const std::string& what)
      : std::runtime_error(file + ":" + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class BoundsError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Undirected simple graph stored as sorted neighbor lists. Self-loops are
/// never stored; normalization injects them where needed.
class Adjacency {
 public:
  Adjacency() = default;
  explicit Adjacency(std::size_t num_nodes) : lists_(num_nodes) {}

  /// Symmetrizes, deduplicates and drops self-loops.
  static Adjacency from_edges(std::size_t num_nodes,
                              std::span<const std::pair<NodeId, NodeId>> edges,
                              std::size_t* self_loops_dropped = nullptr);

  std::size_t num_nodes() const { return lists_.size(); }
  std::span<const NodeId> neighbors(NodeId v) const { return lists_[static_cast<std::size_t>(v)]; }
  std::size_t degree(NodeId v) const { return lists_[static_cast<std::size_t>(v)].size(); }
  bool has_edge(NodeId u, NodeId v) const;

  /// Number of stored directed entries (twice the undirected edge count).
  std::size_t num_entries() const;
  std::size_t num_edges() const { return num_entries() / 2; }

  /// Inserts the undirected edge {u, v}. Returns false for self-loops and
  /// edges that already exist.
  bool add_edge(NodeId u, NodeId v);

  /// Binary adjacency as a sparse matrix.
  SparseMatrix to_sparse() const;

  /// True when every stored entry of `other` is also stored here.
  bool contains(const Adjacency& other) const;

  bool operator==(const Adjacency&) const = default;

 private:
  std::vector<std::vector<NodeId>> lists_;
};

struct Masks {
  std::vector<std::uint8_t> train;
  std::vector<std::uint8_t> val;
  std::vector<std::uint8_t> test;

  bool operator==(const Masks&) const = default;
};

std::vector<NodeId> nodes_in(std::span<const std::uint8_t> mask);

struct Graph {
  Adjacency adjacency;
  Eigen::MatrixXd features;  // n x p0
  std::vector<int> labels;
  int num_classes = 0;
  Masks masks;

  std::size_t num_nodes() const { return adjacency.num_nodes(); }

  /// Throws ConfigError when a structural invariant is violated.
  void validate() const;
};

struct LoadReport {
  std::size_t self_loops_dropped = 0;
  std::size_t duplicate_entries = 0;
};

/// Loads the three-file format: "u v" edge list, comma-separated feature rows
/// and one class id per line. Lines starting with '#' are skipped.
Graph load_graph(const std::filesystem::path& edge_path, const std::filesystem::path& feature_path,
                 const std::filesystem::path& label_path, LoadReport* report = nullptr);

/// Loads the LINQS citation format (`<id> <f1> ... <fp> <label>` content rows
/// and `<cited> <citing>` rows). External ids and label names are mapped to
/// dense 0-based integers in file order.
struct IdMapping {
  std::vector<std::string> node_ids;
  std::vector<std::string> class_names;
};
Graph load_linqs(const std::filesystem::path& content_path, const std::filesystem::path& cites_path,
                 IdMapping* mapping = nullptr, LoadReport* report = nullptr);

void write_id_mapping(const IdMapping& mapping, const std::filesystem::path& path);

/// Two-block stochastic block model. Class 0 is the minority block.
struct SbmSpec {
  std::size_t n1 = 100;
  std::size_t n2 = 1000;
  double p = 0.5;
  double q = 0.1;
  std::uint64_t seed = 0;

  double beta() const { return static_cast<double>(n2) / static_cast<double>(n1); }
  void validate() const;
};

/// Features are class centroids (+-gap/2 along axis 0, minority positive)
/// plus unit-variance Gaussian noise in every dimension.
Graph generate_sbm(const SbmSpec& spec, std::size_t feature_dim, double centroid_gap);

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

/// BFS distances from `source`, kUnreachable beyond `max_hops`.
std::vector<int> hop_distances(const Adjacency& adjacency, NodeId source, int max_hops);

/// Row-major n x n table of min(distance, cap) for every ordered pair.
std::vector<std::uint8_t> capped_distance_table(const Adjacency& adjacency, int cap);

enum class SplitProtocol {
  /// Fixed labeled counts per class; remaining nodes go 1:2 to val/test.
  kSemiSupervised,
  /// Every class split 1:1:2 into train/val/test.
  kProportional,
};

struct SplitSpec {
  double rho = 0.5;
  int labeled_per_majority = 20;
  /// Explicit minority classes; when empty the `k_smallest` classes by node
  /// count are used.
  std::vector<int> minority_classes;
  int k_smallest = 0;
  SplitProtocol protocol = SplitProtocol::kSemiSupervised;
  std::uint64_t seed = 0;

  int labeled_per_minority() const;
};

/// Resolves the minority class set of `spec` against the label counts of `g`.
std::vector<int> resolve_minority_classes(const Graph& g, const SplitSpec& spec);

Masks make_split(const Graph& g, const SplitSpec& spec);

struct DegreeStats {
  double mean = 0.0;
  std::vector<std::size_t> degrees;
};

DegreeStats degree_stats(const Adjacency& adjacency, std::span<const NodeId> nodes);

}  // namespace graphsb
