#include "pwp/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include "pwp/error.hpp"

namespace pwp {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_number(std::string_view token, std::size_t line_no) {
  token = trim(token);
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  double value = 0.0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc() || ptr != end) {
    throw ParseError("line " + std::to_string(line_no) + ": cannot parse '" + std::string(token) + "'");
  }
  if (!std::isfinite(value)) {
    throw BadWeight("line " + std::to_string(line_no) + ": non-finite weight '" + std::string(token) + "'");
  }
  return value;
}

std::string shortest(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string display(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

template <typename Fmt>
std::string render(const WeightedDigraph& g, bool with_header, Fmt fmt) {
  std::string out;
  if (with_header) {
    out += "#labels:";
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g.labels()[i].find_first_of(",\n") != std::string::npos)
        throw InvalidArgument("label '" + g.labels()[i] + "' cannot be written to matrix CSV");
      if (i) out += ',';
      out += g.labels()[i];
    }
    out += '\n';
  }
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (j) out += ',';
      out += fmt(g.d()(i, j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

WeightedDigraph::WeightedDigraph(std::vector<std::string> labels, Matrix d)
    : labels_(std::move(labels)), d_(std::move(d)) {
  if (!d_.is_square()) throw ShapeError("matrix of direct influences must be square");
  if (d_.rows() != labels_.size()) throw ShapeError("label count does not match matrix size");
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw InvalidArgument("empty vertex label");
    if (!seen.insert(l).second) throw InvalidArgument("duplicate vertex label '" + l + "'");
  }
}

WeightedDigraph::WeightedDigraph(Matrix d) : WeightedDigraph(default_labels(d.rows()), std::move(d)) {}

std::optional<std::size_t> WeightedDigraph::index_of(std::string_view label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

bool WeightedDigraph::has_negative_weight() const noexcept {
  const auto e = d_.entries();
  return std::any_of(e.begin(), e.end(), [](double v) { return v < 0.0; });
}

WeightedDigraph from_edge_list(const std::vector<EdgeRecord>& edges) {
  std::vector<std::string> labels;
  std::map<std::string, std::size_t> index;
  auto vertex = [&](const std::string& label) {
    if (label.empty()) throw InvalidArgument("empty vertex label");
    const auto [it, inserted] = index.emplace(label, labels.size());
    if (inserted) labels.push_back(label);
    return it->second;
  };
  std::vector<std::tuple<std::size_t, std::size_t, double>> resolved;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& e : edges) {
    if (!std::isfinite(e.weight)) throw BadWeight(e.source + " -> " + e.target + ": weight is not finite");
    const auto s = vertex(e.source);
    const auto t = vertex(e.target);
    if (!seen.emplace(s, t).second) throw DuplicateEdge(e.source + " -> " + e.target);
    resolved.emplace_back(s, t, e.weight);
  }
  Matrix d(labels.size(), labels.size());
  for (const auto& [s, t, w] : resolved) d(t, s) = w;
  return WeightedDigraph(std::move(labels), std::move(d));
}

std::vector<EdgeRecord> parse_edge_list(std::istream& in) {
  std::vector<EdgeRecord> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    std::istringstream fields{std::string(body)};
    std::string source, target, weight, extra;
    if (!(fields >> source >> target >> weight) || (fields >> extra)) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 'source<TAB>target<TAB>weight'");
    }
    edges.push_back({source, target, parse_number(weight, line_no)});
  }
  return edges;
}

WeightedDigraph from_edge_list_text(std::istream& in) { return from_edge_list(parse_edge_list(in)); }

WeightedDigraph from_matrix_csv(std::istream& in) {
  std::optional<std::vector<std::string>> labels;
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim(line);
    if (body.empty()) continue;
    if (body.starts_with("#labels:")) {
      if (labels || !rows.empty()) throw ParseError("line " + std::to_string(line_no) + ": misplaced label header");
      labels.emplace();
      for (auto l : split(body.substr(8), ',')) labels->emplace_back(trim(l));
      continue;
    }
    if (body.front() == '#') continue;
    std::vector<double> row;
    for (auto tok : split(body, ',')) row.push_back(parse_number(tok, line_no));
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ShapeError("line " + std::to_string(line_no) + ": ragged row (" + std::to_string(row.size()) +
                       " values, expected " + std::to_string(rows.front().size()) + ")");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ShapeError("no matrix rows");
  const std::size_t n = rows.size();
  if (rows.front().size() != n) {
    throw ShapeError("matrix is " + std::to_string(n) + "x" + std::to_string(rows.front().size()) +
                     ", expected square");
  }
  std::vector<double> entries;
  entries.reserve(n * n);
  for (const auto& r : rows) entries.insert(entries.end(), r.begin(), r.end());
  Matrix d(n, n, std::move(entries));
  if (labels) {
    if (labels->size() != n) throw ShapeError("label header has " + std::to_string(labels->size()) +
                                              " names for a " + std::to_string(n) + "-vertex matrix");
    return WeightedDigraph(std::move(*labels), std::move(d));
  }
  return WeightedDigraph(std::move(d));
}

WeightedDigraph from_matrix_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  return from_matrix_csv(in);
}

std::string render_matrix_csv(const WeightedDigraph& g, bool with_header) {
  return render(g, with_header, shortest);
}

std::string render_matrix_csv_display(const WeightedDigraph& g, bool with_header) {
  return render(g, with_header, display);
}

ProcessMatterNets process_matter_fold(const Matrix& block, std::size_t n_processes) {
  if (!block.is_square()) throw ShapeError("process-matter block matrix must be square");
  const std::size_t n = block.rows();
  if (n_processes == 0 || n_processes >= n) {
    throw ShapeError("n_processes must lie in [1, " + std::to_string(n) + ")");
  }
  const std::size_t n_materials = n - n_processes;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const bool same_block = (i < n_processes) == (j < n_processes);
      if (same_block && block(i, j) != 0.0) {
        throw BlockStructureError("nonzero entry at (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) +
                                  ") inside a diagonal block");
      }
    }
  }
  Matrix m(n_processes, n_materials);
  Matrix p(n_materials, n_processes);
  for (std::size_t i = 0; i < n_processes; ++i)
    for (std::size_t j = 0; j < n_materials; ++j) m(i, j) = block(i, n_processes + j);
  for (std::size_t i = 0; i < n_materials; ++i)
    for (std::size_t j = 0; j < n_processes; ++j) p(i, j) = block(n_processes + i, j);
  return {m * p, p * m};
}

Matrix linear_graph(std::size_t n) {
  Matrix d(n, n);
  for (std::size_t i = 1; i < n; ++i) d(i, i - 1) = 1.0;
  return d;
}

Matrix circuit_graph(std::size_t n) {
  Matrix d = linear_graph(n);
  if (n >= 2) d(0, n - 1) = 1.0;
  return d;
}

Matrix with_extra_edge(const Matrix& base, Edge edge, double eps) {
  if (edge.source >= base.rows() || edge.target >= base.rows()) throw IndexError("edge endpoint out of range");
  if (!std::isfinite(eps)) throw BadWeight("edge weight is not finite");
  Matrix d = base;
  d(edge.target, edge.source) += eps;
  return d;
}

WeightedDigraph process_matter_chain(std::size_t n_processes) {
  if (n_processes == 0) throw InvalidArgument("process-matter chain needs at least one process");
  const std::size_t n_materials = n_processes + 1;
  const std::size_t n = n_processes + n_materials;
  Matrix block(n, n);
  std::vector<std::string> labels;
  for (std::size_t p = 0; p < n_processes; ++p) labels.push_back("p" + std::to_string(p + 1));
  for (std::size_t m = 0; m < n_materials; ++m) labels.push_back("m" + std::to_string(m + 1));
  for (std::size_t p = 0; p < n_processes; ++p) {
    block(p, n_processes + p) = 1.0;      // material p is an input of process p
    block(n_processes + p + 1, p) = 1.0;  // process p produces material p+1
  }
  return WeightedDigraph(std::move(labels), std::move(block));
}

}  // namespace pwp
