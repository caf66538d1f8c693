#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pwp/matrix.hpp"

namespace pwp {

// Orientation convention used throughout the library: d(i, j) is the direct
// influence that vertex j exerts on vertex i. An edge source -> target with
// weight w therefore sets d(target, source) = w.

/// Vertex-labelled matrix of direct influences.
class WeightedDigraph {
 public:
  WeightedDigraph() = default;
  WeightedDigraph(std::vector<std::string> labels, Matrix d);
  /// Labels "1".."n".
  explicit WeightedDigraph(Matrix d);

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const Matrix& d() const noexcept { return d_; }
  std::size_t size() const noexcept { return labels_.size(); }

  std::optional<std::size_t> index_of(std::string_view label) const;
  bool has_negative_weight() const noexcept;

  friend bool operator==(const WeightedDigraph&, const WeightedDigraph&) = default;

 private:
  std::vector<std::string> labels_;
  Matrix d_;
};

std::vector<std::string> default_labels(std::size_t n);

struct EdgeRecord {
  std::string source;
  std::string target;
  double weight = 0.0;
};

/// Directed edge by vertex index (0-based).
struct Edge {
  std::size_t source = 0;
  std::size_t target = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Vertices are numbered in order of first appearance.
WeightedDigraph from_edge_list(const std::vector<EdgeRecord>& edges);

/// Parses `source<TAB>target<TAB>weight` lines; blank lines and lines starting
/// with '#' are skipped. Any run of whitespace is accepted as separator.
std::vector<EdgeRecord> parse_edge_list(std::istream& in);
WeightedDigraph from_edge_list_text(std::istream& in);

/// Matrix CSV: n lines of n comma-separated decimals, optional leading
/// `#labels:a,b,c` header. Lines consisting only of whitespace are skipped.
WeightedDigraph from_matrix_csv(std::istream& in);
WeightedDigraph from_matrix_csv(std::string_view text);

/// Shortest decimal that round-trips (`%.17g`); used for files that must be
/// read back bit-exactly.
std::string render_matrix_csv(const WeightedDigraph& g, bool with_header = true);
/// Fixed 12 significant digits; used for human-facing output.
std::string render_matrix_csv_display(const WeightedDigraph& g, bool with_header = true);

struct ProcessMatterNets {
  Matrix process_net;  // MP, n_processes × n_processes
  Matrix matter_net;   // PM, n_materials × n_materials
};

/// Folds a process-matter block matrix [[0, M], [P, 0]] (processes first)
/// into the process-to-process and matter-to-matter influence networks.
ProcessMatterNets process_matter_fold(const Matrix& block, std::size_t n_processes);

// Fixture families.

/// L_n: 1 -> 2 -> ... -> n, d(i+1, i) = 1.
Matrix linear_graph(std::size_t n);
/// Z_n: the directed cycle 1 -> 2 -> ... -> n -> 1.
Matrix circuit_graph(std::size_t n);
/// `base` with `eps` added on the edge source -> target.
Matrix with_extra_edge(const Matrix& base, Edge edge, double eps);
/// Material i feeds process i, which produces material i+1. Returns the block
/// matrix (n_processes processes first, then n_processes + 1 materials) and labels.
WeightedDigraph process_matter_chain(std::size_t n_processes);

}  // namespace pwp
