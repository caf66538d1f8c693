#include "pwp/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <tuple>

#include "pwp/analytic.hpp"
#include "pwp/error.hpp"

namespace pwp {

std::string to_string(SweepParam p) { return p == SweepParam::lambda ? "lambda" : "epsilon"; }

void SweepSpec::validate() const {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) throw InvalidArgument("sweep needs lo < hi");
  if (param == SweepParam::lambda && !(lo > 0.0)) throw InvalidArgument("lambda sweep needs lo > 0");
  if (param == SweepParam::epsilon && lo < 0.0) throw InvalidArgument("epsilon sweep needs lo >= 0");
  if (grid_points < 2) throw InvalidArgument("sweep needs at least 2 grid points");
  if (!(refine_tol > 0.0)) throw InvalidArgument("refine_tol must be positive");
  if (!(tie_tol >= 0.0)) throw InvalidArgument("tie_tol must be nonnegative");
  if (!(merge_tol >= 0.0)) throw InvalidArgument("merge_tol must be nonnegative");
  series.validate();
}

std::vector<double> SweepSpec::grid() const {
  GridSpacing s = spacing;
  if (s == GridSpacing::automatic)
    s = param == SweepParam::lambda ? GridSpacing::logarithmic : GridSpacing::linear;
  if (s == GridSpacing::logarithmic && !(lo > 0.0)) throw InvalidArgument("logarithmic grid needs lo > 0");
  std::vector<double> xs(grid_points);
  const double last = static_cast<double>(grid_points - 1);
  for (std::size_t g = 0; g < grid_points; ++g) {
    const double u = static_cast<double>(g) / last;
    xs[g] = s == GridSpacing::logarithmic ? lo * std::pow(hi / lo, u) : lo + (hi - lo) * u;
  }
  xs.front() = lo;
  xs.back() = hi;
  return xs;
}

bool Crossing::involves(std::size_t a, std::size_t b) const {
  return std::any_of(pairs.begin(), pairs.end(),
                     [&](const PairFlip& p) { return (p.a == a && p.b == b) || (p.a == b && p.b == a); });
}

Root find_crossing(const std::function<double(double)>& f, double a, double b, double tol) {
  if (!(a < b)) std::swap(a, b);
  if (!(tol > 0.0)) throw InvalidArgument("find_crossing needs tol > 0");
  double fa = f(a);
  double fb = f(b);
  if (fa == 0.0) return {a, 0.0, 0.0};
  if (fb == 0.0) return {b, 0.0, 0.0};
  if (std::signbit(fa) == std::signbit(fb) || std::isnan(fa) || std::isnan(fb)) {
    throw NoBracket("no sign change on [" + std::to_string(a) + ", " + std::to_string(b) + "]");
  }
  for (int iter = 0; b - a > tol && iter < 1000; ++iter) {
    double x = 0.5 * (a + b);
    if (iter % 2 == 1) {
      const double s = b - fb * (b - a) / (fb - fa);
      if (std::isfinite(s) && s > a && s < b) x = s;
    }
    if (!(x > a && x < b)) break;  // bracket at floating-point resolution
    const double fx = f(x);
    if (fx == 0.0) return {x, 0.0, 0.0};
    if (std::signbit(fx) == std::signbit(fa)) {
      a = x;
      fa = fx;
    } else {
      b = x;
      fb = fx;
    }
  }
  const double x = 0.5 * (a + b);
  return {x, f(x), b - a};
}

namespace {

struct Sample {
  double x = 0.0;
  std::vector<double> scores;
  Ranking ranking;
  std::vector<std::size_t> positions;
};

class SweepEngine {
 public:
  SweepEngine(const ScoreFunction& scores, const SweepSpec& spec) : scores_(scores), spec_(spec) {}

  Sample sample(double x) const {
    Sample s;
    s.x = x;
    s.scores = scores_(x);
    s.ranking = ranking_from_scores(s.scores, spec_.tie_tol);
    s.positions = s.ranking.positions();
    return s;
  }

  double merge_distance(double x) const { return spec_.merge_tol * std::max(1.0, std::fabs(x)); }

  std::vector<std::pair<std::size_t, std::size_t>> flipped(const Sample& a, const Sample& b) const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const std::size_t n = a.positions.size();
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        if (relation(a.positions, u, v) != relation(b.positions, u, v)) out.emplace_back(u, v);
    return out;
  }

  double locate(const Sample& left, const Sample& right, std::size_t u, std::size_t v) const {
    const int rel_left = relation(left.positions, u, v);
    const int rel_right = relation(right.positions, u, v);
    if (rel_left * rel_right == -1) {
      const auto diff = [&](double x) {
        const auto s = scores_(x);
        return s[u] - s[v];
      };
      return find_crossing(diff, left.x, right.x, spec_.refine_tol).x;
    }
    // A tie forms or breaks: bisect on the pair's ranked relation.
    double a = left.x;
    double b = right.x;
    while (b - a > spec_.refine_tol) {
      const double mid = 0.5 * (a + b);
      if (!(mid > a && mid < b)) break;
      if (relation(sample(mid).positions, u, v) == rel_left)
        a = mid;
      else
        b = mid;
    }
    return 0.5 * (a + b);
  }

  void refine(const Sample& left, const Sample& right, std::vector<Crossing>& out, int depth) const {
    const auto flips = flipped(left, right);
    if (flips.empty()) return;
    const double width = right.x - left.x;
    std::vector<PairFlip> located;
    if (width <= spec_.refine_tol || depth > 200) {
      for (const auto& [u, v] : flips) located.push_back({u, v, 0.5 * (left.x + right.x)});
      out.push_back(make_crossing(std::move(located), left.ranking, right.ranking));
      return;
    }
    for (const auto& [u, v] : flips) located.push_back({u, v, locate(left, right, u, v)});
    std::sort(located.begin(), located.end(), [](const auto& p, const auto& q) { return p.at < q.at; });
    for (std::size_t k = 1; k < located.size(); ++k) {
      if (located[k].at - located[k - 1].at > merge_distance(located[k].at)) {
        const double split = 0.5 * (located[k - 1].at + located[k].at);
        const Sample mid = sample(split);
        refine(left, mid, out, depth + 1);
        refine(mid, right, out, depth + 1);
        return;
      }
    }
    out.push_back(make_crossing(std::move(located), left.ranking, right.ranking));
  }

  static Crossing make_crossing(std::vector<PairFlip> pairs, const Ranking& before, const Ranking& after) {
    Crossing c;
    double total = 0.0;
    for (const auto& p : pairs) total += p.at;
    c.at = total / static_cast<double>(pairs.size());
    c.pairs = std::move(pairs);
    c.before = before;
    c.after = after;
    return c;
  }

  // Events closer than the merge distance become one; an event that leaves
  // the ranking unchanged (a transient tie) is dropped.
  std::vector<Crossing> merge(std::vector<Crossing> events) const {
    std::sort(events.begin(), events.end(), [](const auto& p, const auto& q) { return p.at < q.at; });
    std::vector<Crossing> merged;
    for (auto& e : events) {
      if (!merged.empty() && e.at - merged.back().at <= merge_distance(e.at)) {
        auto pairs = std::move(merged.back().pairs);
        pairs.insert(pairs.end(), e.pairs.begin(), e.pairs.end());
        merged.back() = make_crossing(std::move(pairs), merged.back().before, e.after);
      } else {
        merged.push_back(std::move(e));
      }
      if (ranking_equal(merged.back().before, merged.back().after)) merged.pop_back();
    }
    for (auto& e : merged) {
      // Keep pairs whose net order changed, each once.
      const auto before = e.before.positions();
      const auto after = e.after.positions();
      std::vector<PairFlip> unique;
      for (const auto& p : e.pairs) {
        const bool seen = std::any_of(unique.begin(), unique.end(),
                                      [&](const PairFlip& q) { return q.a == p.a && q.b == p.b; });
        if (!seen && relation(before, p.a, p.b) != relation(after, p.a, p.b)) unique.push_back(p);
      }
      std::sort(unique.begin(), unique.end(),
                [](const auto& p, const auto& q) { return std::tie(p.a, p.b) < std::tie(q.a, q.b); });
      e.pairs = std::move(unique);
    }
    return merged;
  }

  SweepReport run() const {
    spec_.validate();
    const auto xs = spec_.grid();
    SweepReport report;
    report.param = spec_.param;
    report.score_kind = spec_.score_kind;
    report.lo = spec_.lo;
    report.hi = spec_.hi;
    for (std::size_t g = 1; g < xs.size(); ++g)
      report.grid_resolution = std::max(report.grid_resolution, xs[g] - xs[g - 1]);

    std::vector<Sample> samples;
    samples.reserve(xs.size());
    for (double x : xs) samples.push_back(sample(x));

    std::vector<Crossing> events;
    for (std::size_t g = 1; g < samples.size(); ++g) {
      if (!ranking_equal(samples[g - 1].ranking, samples[g].ranking)) refine(samples[g - 1], samples[g], events, 0);
    }
    report.crossings = merge(std::move(events));

    Ranking current = samples.front().ranking;
    double from = spec_.lo;
    for (const auto& c : report.crossings) {
      report.segments.push_back({from, c.at, current});
      current = c.after;
      from = c.at;
    }
    report.segments.push_back({from, spec_.hi, current});
    return report;
  }

 private:
  const ScoreFunction& scores_;
  const SweepSpec& spec_;
};

}  // namespace

SweepReport sweep_scores(const ScoreFunction& scores, const SweepSpec& spec) {
  return SweepEngine(scores, spec).run();
}

SweepReport lambda_sweep(const Matrix& d, const SweepSpec& spec) {
  if (spec.param != SweepParam::lambda) throw InvalidArgument("lambda_sweep needs a lambda sweep spec");
  if (!d.is_square()) throw ShapeError("lambda_sweep needs a square matrix");
  const ScoreFunction scores = [&](double lambda) {
    return indirect_scores(pwp_transform(d, spec.series.with_lambda(lambda)), spec.score_kind).values;
  };
  return sweep_scores(scores, spec);
}

SweepReport epsilon_sweep(const WeightedDigraph& base, Edge edge, const SweepSpec& spec) {
  if (spec.param != SweepParam::epsilon) throw InvalidArgument("epsilon_sweep needs an epsilon sweep spec");
  if (edge.source >= base.size() || edge.target >= base.size()) throw IndexError("edge endpoint out of range");
  const ScoreFunction scores = [&](double eps) {
    return indirect_scores(pwp_transform(with_extra_edge(base.d(), edge, eps), spec.series), spec.score_kind)
        .values;
  };
  return sweep_scores(scores, spec);
}

ConjectureReport verify_unique_crossings(std::size_t n, double lambda_hi, std::size_t grid) {
  if (n < 3) throw InvalidArgument("crossing check needs n >= 3");
  if (!(lambda_hi > 0.0)) throw InvalidArgument("lambda_hi must be positive");
  if (grid < 2) throw InvalidArgument("crossing check needs at least 2 grid points");
  ConjectureReport report;
  report.n = n;
  report.k = analytic::half_size(n);
  for (std::size_t i = 1; i <= report.k; ++i) {
    for (std::size_t j = i + 1; j <= report.k; ++j) {
      PairCrossings pc{i, j, {}};
      const auto f = [&](double x) { return analytic::linear_importance_difference(n, i, j, x); };
      double prev_x = lambda_hi / static_cast<double>(grid);
      double prev_f = f(prev_x);
      if (prev_f == 0.0) pc.locations.push_back(prev_x);
      for (std::size_t g = 2; g <= grid; ++g) {
        const double x = lambda_hi * static_cast<double>(g) / static_cast<double>(grid);
        const double fx = f(x);
        if (fx == 0.0) {
          pc.locations.push_back(x);
        } else if (prev_f != 0.0 && std::signbit(fx) != std::signbit(prev_f)) {
          pc.locations.push_back(find_crossing(f, prev_x, x, 1e-13).x);
        }
        prev_x = x;
        prev_f = fx;
      }
      report.total_crossings += pc.locations.size();
      report.pairs.push_back(std::move(pc));
    }
  }
  report.one_per_pair = std::all_of(report.pairs.begin(), report.pairs.end(),
                                    [](const auto& p) { return p.locations.size() == 1; });
  report.order_holds = report.one_per_pair;
  if (report.order_holds) {
    for (const auto& p : report.pairs) {
      for (const auto& q : report.pairs) {
        const bool dominated = p.i <= q.i && p.j <= q.j && (p.i != q.i || p.j != q.j);
        if (dominated && !(p.locations.front() < q.locations.front())) report.order_holds = false;
      }
    }
  }
  return report;
}

}  // namespace pwp
