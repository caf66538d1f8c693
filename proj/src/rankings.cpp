#include "pwp/rankings.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>

#include "pwp/error.hpp"
#include "pwp/graph.hpp"

namespace pwp {

std::string_view to_string(ScoreKind kind) {
  switch (kind) {
    case ScoreKind::dependence: return "dependence";
    case ScoreKind::influence: return "influence";
    case ScoreKind::importance: return "importance";
  }
  return "unknown";
}

std::optional<ScoreKind> parse_score_kind(std::string_view name) {
  if (name == "dependence") return ScoreKind::dependence;
  if (name == "influence") return ScoreKind::influence;
  if (name == "importance") return ScoreKind::importance;
  return std::nullopt;
}

namespace {

std::vector<double> sum_scores(const Matrix& m, ScoreKind kind) {
  if (!m.is_square()) throw ShapeError("scores need a square matrix");
  const std::size_t n = m.rows();
  std::vector<double> out(n);
  std::vector<double> buf;
  buf.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    buf.clear();
    if (kind != ScoreKind::influence)
      for (std::size_t j = 0; j < n; ++j) buf.push_back(m(i, j));
    if (kind != ScoreKind::dependence)
      for (std::size_t j = 0; j < n; ++j) buf.push_back(m(j, i));
    out[i] = canonical_sum(buf);
  }
  return out;
}

}  // namespace

ScoreVector direct_scores(const Matrix& d, ScoreKind kind) { return {kind, sum_scores(d, kind), std::nullopt}; }

ScoreVector indirect_scores(const InfluenceMatrix& t, ScoreKind kind) {
  return {kind, sum_scores(t.t, kind), t.lambda};
}

std::size_t Ranking::vertex_count() const noexcept {
  std::size_t n = 0;
  for (const auto& g : groups) n += g.size();
  return n;
}

std::vector<std::size_t> Ranking::positions() const {
  std::vector<std::size_t> pos(vertex_count());
  for (std::size_t g = 0; g < groups.size(); ++g)
    for (auto v : groups[g]) pos.at(v) = g;
  return pos;
}

std::string Ranking::to_string() const { return to_string(default_labels(vertex_count())); }

std::string Ranking::to_string(const std::vector<std::string>& labels) const {
  std::string out;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    if (g) out += " > ";
    for (std::size_t k = 0; k < groups[g].size(); ++k) {
      if (k) out += ',';
      out += labels.at(groups[g][k]);
    }
  }
  return out;
}

Ranking ranking_from_scores(const std::vector<double>& values, double tie_tol) {
  if (!(tie_tol >= 0.0)) throw InvalidArgument("tie tolerance must be nonnegative");
  Ranking r;
  r.tie_tol = tie_tol;
  if (values.empty()) return r;
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return values[a] > values[b]; });
  double scale = 0.0;
  for (double v : values) scale = std::max(scale, std::fabs(v));
  const double gap = tie_tol * scale;
  r.groups.push_back({order.front()});
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (values[order[k - 1]] - values[order[k]] <= gap)
      r.groups.back().push_back(order[k]);
    else
      r.groups.push_back({order[k]});
  }
  for (auto& g : r.groups) std::sort(g.begin(), g.end());
  return r;
}

Ranking ranking_from_scores(const ScoreVector& s, double tie_tol) { return ranking_from_scores(s.values, tie_tol); }

bool ranking_equal(const Ranking& a, const Ranking& b) { return a.groups == b.groups; }

Ranking parse_ranking(std::string_view text) {
  Ranking r;
  std::vector<std::size_t> group;
  std::size_t pos = 0;
  auto flush = [&] {
    if (group.empty()) throw ParseError("empty group in ranking '" + std::string(text) + "'");
    std::sort(group.begin(), group.end());
    r.groups.push_back(std::move(group));
    group.clear();
  };
  while (pos < text.size()) {
    const char c = text[pos];
    if (c == ' ' || c == '\t' || c == ',') {
      ++pos;
    } else if (c == '>') {
      flush();
      ++pos;
    } else {
      std::size_t v = 0;
      const auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
      if (ec != std::errc() || v == 0) throw ParseError("bad vertex in ranking '" + std::string(text) + "'");
      group.push_back(v - 1);
      pos = static_cast<std::size_t>(ptr - text.data());
    }
  }
  flush();
  return r;
}

int relation(const std::vector<std::size_t>& positions, std::size_t a, std::size_t b) {
  if (positions[a] < positions[b]) return 1;
  if (positions[a] > positions[b]) return -1;
  return 0;
}

bool ranking_refines(const Ranking& fine, const Ranking& coarse) {
  const auto pf = fine.positions();
  const auto pc = coarse.positions();
  if (pf.size() != pc.size()) return false;
  for (std::size_t a = 0; a < pf.size(); ++a)
    for (std::size_t b = 0; b < pf.size(); ++b)
      if (relation(pc, a, b) == 1 && relation(pf, a, b) != 1) return false;
  return true;
}

}  // namespace pwp
