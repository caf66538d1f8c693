#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <set>
#include <sstream>

#include "format.hpp"
#include "pwp/analytic.hpp"
#include "pwp/error.hpp"
#include "pwp/graph.hpp"
#include "pwp/rankings.hpp"
#include "pwp/spectral.hpp"
#include "pwp/sweep.hpp"
#include "pwp/transform.hpp"
#include "tables.hpp"

namespace pwp::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// JSON number carrying the same 12 significant digits as the text output.
double num(double x) { return std::isfinite(x) ? std::stod(fmt(x)) : x; }

struct InputOptions {
  std::string path;
  std::string format = "auto";
};

struct SeriesOptions {
  double lambda = 1.0;
  double tol = 1e-12;
  std::size_t max_terms = 512;

  PwpParams params() const { return PwpParams{lambda, tol, max_terms}; }
};

double default_tol() {
  const char* env = std::getenv("PWP_TOL");
  if (!env || !*env) return PwpParams{}.tol;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(v > 0.0) || !std::isfinite(v))
    throw UsageError(std::string("PWP_TOL must be a positive number, got '") + env + "'");
  return v;
}

WeightedDigraph load_input(const InputOptions& in) {
  std::string format = in.format;
  if (format == "auto") {
    const auto ext = std::filesystem::path(in.path).extension().string();
    if (ext == ".csv")
      format = "csv";
    else if (ext == ".tsv" || ext == ".edges")
      format = "edges";
    else
      throw UsageError("cannot infer the input format of '" + in.path + "'; pass --input-format csv|edges");
  }
  std::ifstream file;
  std::istream* stream = &std::cin;
  if (in.path != "-") {
    file.open(in.path);
    if (!file) throw UsageError("cannot open '" + in.path + "'");
    stream = &file;
  }
  return format == "csv" ? from_matrix_csv(*stream) : from_edge_list_text(*stream);
}

void warn_negative(const WeightedDigraph& g, std::ostream& err) {
  if (g.has_negative_weight())
    err << "warning: the input has negative weights; scores need not be positive and rankings may be unstable\n";
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write '" + path + "'");
  file << text;
}

void add_input_options(CLI::App& cmd, InputOptions& in) {
  cmd.add_option("input", in.path, "Matrix CSV (.csv) or edge list (.tsv, .edges); '-' reads stdin")->required();
  cmd.add_option("--input-format", in.format, "Input format")
      ->check(CLI::IsMember({"auto", "csv", "edges"}))
      ->capture_default_str();
}

void add_series_options(CLI::App& cmd, SeriesOptions& s) {
  cmd.add_option("--lambda,-l", s.lambda, "Method parameter lambda > 0")->capture_default_str();
  cmd.add_option("--tol", s.tol, "Relative series truncation tolerance (default from PWP_TOL)")
      ->capture_default_str();
  cmd.add_option("--max-terms", s.max_terms, "Cap on summed series terms")->capture_default_str();
}

struct Computed {
  InfluenceMatrix t;
  std::string engine;
};

Computed compute(const Matrix& d, const PwpParams& p, const std::string& engine, std::ostream& err) {
  if (engine == "series") return {pwp_transform(d, p), "series"};
  if (engine == "spectral") {
    p.validate();
    return {pwp_transform_spectral(real_eigendecomposition(d), p.lambda), "spectral"};
  }
  auto a = pwp_transform_auto(d, p);
  if (!a.warning.empty()) err << "warning: " << a.warning << '\n';
  return {std::move(a.result), a.engine == Engine::spectral ? "spectral" : "series"};
}

// --- transform -------------------------------------------------------------

struct TransformOptions {
  InputOptions input;
  SeriesOptions series;
  std::string output;
  std::string sidecar;
  std::string format = "csv";
  std::string engine = "series";
};

int cmd_transform(const TransformOptions& o, std::ostream& out, std::ostream& err) {
  const auto g = load_input(o.input);
  warn_negative(g, err);
  const auto params = o.series.params();
  const auto c = compute(g.d(), params, o.engine, err);

  json meta;
  meta["lambda"] = num(c.t.lambda);
  meta["tol"] = num(params.tol);
  meta["max_terms"] = params.max_terms;
  meta["truncation_terms"] = c.t.truncation_terms;
  meta["engine"] = c.engine;
  meta["n"] = g.size();

  if (o.format == "json") {
    json doc = meta;
    doc["labels"] = g.labels();
    json rows = json::array();
    for (std::size_t i = 0; i < g.size(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < g.size(); ++j) row.push_back(num(c.t.t(i, j)));
      rows.push_back(std::move(row));
    }
    doc["t"] = std::move(rows);
    emit(doc.dump(2) + "\n", o.output, out);
    return kOk;
  }
  emit(render_matrix_csv_display(WeightedDigraph(g.labels(), c.t.t)), o.output, out);
  std::string sidecar = o.sidecar;
  if (sidecar.empty() && !o.output.empty() && o.output != "-") sidecar = o.output + ".json";
  if (!sidecar.empty()) emit(meta.dump(2) + "\n", sidecar, out);
  return kOk;
}

// --- rank ------------------------------------------------------------------

struct RankOptions {
  InputOptions input;
  SeriesOptions series;
  std::string output;
  std::string format = "table";
  std::string kind = "importance";
  std::string engine = "series";
  bool direct = false;
  double tie_tol = kDefaultTieTol;
};

int cmd_rank(const RankOptions& o, std::ostream& out, std::ostream& err) {
  const auto g = load_input(o.input);
  warn_negative(g, err);
  const ScoreKind kind = *parse_score_kind(o.kind);
  ScoreVector scores;
  if (o.direct) {
    scores = direct_scores(g.d(), kind);
  } else {
    scores = indirect_scores(compute(g.d(), o.series.params(), o.engine, err).t, kind);
  }
  const auto ranking = ranking_from_scores(scores, o.tie_tol);
  const auto& labels = g.labels();
  std::ostringstream text;
  if (o.format == "json") {
    json doc;
    doc["kind"] = o.kind;
    doc["lambda"] = scores.lambda ? json(num(*scores.lambda)) : json(nullptr);
    doc["labels"] = labels;
    json values = json::array();
    for (double v : scores.values) values.push_back(num(v));
    doc["scores"] = std::move(values);
    doc["ranking"] = ranking.to_string(labels);
    json groups = json::array();
    for (const auto& grp : ranking.groups) {
      json members = json::array();
      for (auto v : grp) members.push_back(labels[v]);
      groups.push_back(std::move(members));
    }
    doc["groups"] = std::move(groups);
    text << doc.dump(2) << '\n';
  } else if (o.format == "csv") {
    text << "vertex," << o.kind << '\n';
    for (std::size_t v = 0; v < labels.size(); ++v) text << labels[v] << ',' << fmt(scores.values[v]) << '\n';
    text << "# ranking: " << ranking.to_string(labels) << '\n';
  } else {
    text << "vertex\t" << o.kind << '\n';
    for (std::size_t v = 0; v < labels.size(); ++v) text << labels[v] << '\t' << fmt(scores.values[v]) << '\n';
    text << "ranking: " << ranking.to_string(labels) << '\n';
  }
  emit(text.str(), o.output, out);
  return kOk;
}

// --- sweep -----------------------------------------------------------------

struct SweepOptions {
  InputOptions input;
  SeriesOptions series;
  std::string output;
  std::string format = "table";
  std::string param = "lambda";
  std::string kind = "importance";
  std::string spacing = "auto";
  std::optional<double> lo;
  double hi = 10.0;
  std::size_t grid = 400;
  double refine_tol = 1e-10;
  double tie_tol = kDefaultTieTol;
  std::string edge;
  double base_lambda = 1.0;
  std::string curves;
  bool check_conjecture = false;
  std::size_t conjecture_grid = 20000;
};

Edge parse_edge(const std::string& text, const WeightedDigraph& g) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("--edge expects 'source,target', got '" + text + "'");
  const auto s = g.index_of(text.substr(0, comma));
  const auto t = g.index_of(text.substr(comma + 1));
  if (!s || !t) throw UsageError("--edge names a vertex that is not in the input: '" + text + "'");
  if (*s == *t) throw UsageError("--edge needs two distinct vertices");
  return {*s, *t};
}

json report_json(const SweepReport& r, const std::vector<std::string>& labels) {
  json doc;
  doc["param"] = to_string(r.param);
  doc["score_kind"] = std::string(to_string(r.score_kind));
  doc["lo"] = num(r.lo);
  doc["hi"] = num(r.hi);
  doc["grid_resolution"] = num(r.grid_resolution);
  doc["labels"] = labels;
  json segs = json::array();
  for (const auto& s : r.segments) {
    json seg;
    seg["from"] = num(s.from);
    seg["to"] = num(s.to);
    seg["ranking"] = s.ranking.to_string(labels);
    segs.push_back(std::move(seg));
  }
  doc["segments"] = std::move(segs);
  json crossings = json::array();
  for (const auto& c : r.crossings) {
    json cj;
    cj["at"] = num(c.at);
    json pairs = json::array();
    for (const auto& p : c.pairs) pairs.push_back({{"a", labels[p.a]}, {"b", labels[p.b]}, {"at", num(p.at)}});
    cj["pairs"] = std::move(pairs);
    cj["before"] = c.before.to_string(labels);
    cj["after"] = c.after.to_string(labels);
    crossings.push_back(std::move(cj));
  }
  doc["crossings"] = std::move(crossings);
  return doc;
}

std::string report_table(const SweepReport& r, const std::vector<std::string>& labels) {
  std::ostringstream t;
  t << to_string(r.param) << " sweep over [" << fmt(r.lo) << ", " << fmt(r.hi) << "], " << to_string(r.score_kind)
    << ", grid resolution " << fmt(r.grid_resolution) << '\n';
  t << "from\tto\tranking\n";
  for (const auto& s : r.segments) t << fmt(s.from) << '\t' << fmt(s.to) << '\t' << s.ranking.to_string(labels) << '\n';
  t << "crossings: " << r.crossings.size() << '\n';
  for (const auto& c : r.crossings) {
    t << fmt(c.at) << '\t';
    for (std::size_t k = 0; k < c.pairs.size(); ++k) {
      if (k) t << ' ';
      t << '(' << labels[c.pairs[k].a] << ',' << labels[c.pairs[k].b] << ')';
    }
    t << '\n';
  }
  return t.str();
}

int cmd_sweep(const SweepOptions& o, std::ostream& out, std::ostream& err) {
  const auto g = load_input(o.input);
  warn_negative(g, err);
  SweepSpec spec;
  spec.param = o.param == "lambda" ? SweepParam::lambda : SweepParam::epsilon;
  spec.lo = o.lo.value_or(spec.param == SweepParam::lambda ? 0.5 : 0.0);
  spec.hi = o.hi;
  spec.grid_points = o.grid;
  spec.refine_tol = o.refine_tol;
  spec.tie_tol = o.tie_tol;
  spec.score_kind = *parse_score_kind(o.kind);
  spec.spacing = o.spacing == "linear" ? GridSpacing::linear
                 : o.spacing == "log"  ? GridSpacing::logarithmic
                                       : GridSpacing::automatic;
  spec.series = o.series.params();
  if (spec.param == SweepParam::epsilon) spec.series.lambda = o.base_lambda;
  try {
    spec.validate();
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }

  std::optional<Edge> edge;
  if (spec.param == SweepParam::epsilon) {
    if (o.edge.empty()) throw UsageError("an epsilon sweep needs --edge source,target");
    edge = parse_edge(o.edge, g);
  } else if (!o.edge.empty()) {
    throw UsageError("--edge only applies to --param epsilon");
  }
  if (o.check_conjecture && (spec.param != SweepParam::lambda || g.d() != linear_graph(g.size()) || g.size() < 3))
    throw UsageError("--check-conjecture needs a lambda sweep of a directed path with at least 3 vertices");

  const ScoreFunction scores = [&](double x) {
    if (edge)
      return indirect_scores(pwp_transform(with_extra_edge(g.d(), *edge, x), spec.series), spec.score_kind).values;
    return indirect_scores(pwp_transform(g.d(), spec.series.with_lambda(x)), spec.score_kind).values;
  };
  const auto report = sweep_scores(scores, spec);

  std::optional<ConjectureReport> conj;
  if (o.check_conjecture) conj = verify_unique_crossings(g.size(), spec.hi, o.conjecture_grid);

  std::ostringstream text;
  if (o.format == "json") {
    json doc = report_json(report, g.labels());
    if (edge) {
      doc["edge"] = {{"source", g.labels()[edge->source]}, {"target", g.labels()[edge->target]}};
      doc["base_lambda"] = num(spec.series.lambda);
    }
    if (conj) {
      json pairs = json::array();
      for (const auto& p : conj->pairs) {
        json locs = json::array();
        for (double x : p.locations) locs.push_back(num(x));
        pairs.push_back({{"i", p.i}, {"j", p.j}, {"locations", std::move(locs)}});
      }
      doc["conjecture"] = {{"n", conj->n},
                           {"k", conj->k},
                           {"total_crossings", conj->total_crossings},
                           {"expected_crossings", conj->k * (conj->k - 1) / 2},
                           {"one_per_pair", conj->one_per_pair},
                           {"order_holds", conj->order_holds},
                           {"pairs", std::move(pairs)}};
    }
    text << doc.dump(2) << '\n';
  } else {
    text << report_table(report, g.labels());
    if (conj) {
      text << "crossing check on L_" << conj->n << " over (0, " << fmt(spec.hi) << "]: " << conj->total_crossings
           << " crossings (expected " << conj->k * (conj->k - 1) / 2 << "), one per pair "
           << (conj->one_per_pair ? "yes" : "no") << ", order " << (conj->order_holds ? "OK" : "VIOLATED") << '\n';
      for (const auto& p : conj->pairs) {
        text << "c_" << p.i << ',' << p.j << '\t';
        for (std::size_t k = 0; k < p.locations.size(); ++k) text << (k ? " " : "") << fmt(p.locations[k]);
        text << '\n';
      }
    }
  }
  emit(text.str(), o.output, out);

  if (!o.curves.empty()) {
    std::ostringstream csv;
    csv << to_string(spec.param);
    for (const auto& l : g.labels()) csv << ',' << l;
    csv << '\n';
    for (double x : spec.grid()) {
      csv << fmt(x);
      for (double v : scores(x)) csv << ',' << fmt(v);
      csv << '\n';
    }
    emit(csv.str(), o.curves, out);
  }
  return kOk;
}

// --- paper-tables ----------------------------------------------------------

struct TablesOptions {
  std::string curves_dir = "pwp-curves";
  bool no_curves = false;
};

std::string edge_name(Edge e) { return std::to_string(e.source + 1) + "->" + std::to_string(e.target + 1); }

int cmd_paper_tables(const TablesOptions& o, std::ostream& out) {
  bool ok = true;

  const auto linear = tables::search_linear_table();
  out << "L_6 with an extra edge of weight eps, lambda = " << fmt(tables::kReferenceLambda) << ", importance\n";
  if (linear.selected) {
    const auto& c = linear.candidates[*linear.selected];
    out << "matched edge: " << edge_name(c.edge) << '\n';
    out << "eps(ref)\teps(found)\tranking(ref)\tranking(found)\tresult\n";
    for (const auto& row : c.rows) {
      out << row.threshold << '\t' << (row.detected ? fmt(*row.detected) : std::string("0")) << '\t' << row.expected
          << '\t' << row.found << '\t' << (row.pass() ? "PASS" : "FAIL") << '\n';
    }
  } else {
    ok = false;
    out << "no candidate edge reproduces the published ordering sequence; best matches:\n";
    for (std::size_t k = 0; k < std::min<std::size_t>(5, linear.candidates.size()); ++k) {
      const auto& c = linear.candidates[k];
      out << "  " << edge_name(c.edge) << ": " << c.matched_prefix << " leading rows match, "
          << c.report.segments.size() << " segments\n";
    }
  }

  const auto circuit = tables::search_circuit_line();
  out << "\nC_6 with an extra edge of weight eps, lambda = " << fmt(tables::kReferenceLambda) << ", importance\n";
  if (circuit.selected) {
    const auto& c = circuit.candidates[*circuit.selected];
    out << "matched edge: " << edge_name(c.edge) << "\neps = " << fmt(tables::kCircuitEps) << ": "
        << c.ranking_at_eps << " (ref " << tables::kCircuitRanking << "), stable through eps = "
        << fmt(tables::kCircuitEpsHi) << ": " << (c.segments == 1 ? "yes" : "no") << "\tPASS\n";
  } else {
    ok = false;
    out << "no candidate edge gives " << tables::kCircuitRanking << " stably; candidates:\n";
    for (std::size_t k = 0; k < std::min<std::size_t>(5, circuit.candidates.size()); ++k) {
      const auto& c = circuit.candidates[k];
      out << "  " << edge_name(c.edge) << ": " << c.ranking_at_eps << ", " << c.segments << " segments\tFAIL\n";
    }
  }

  out << "\nconsecutive crossings c_{i,i+1}: closed form vs lambda sweep\n";
  out << "n\ti\tclosed form\tsweep\tresult\n";
  for (std::size_t n : {6u, 11u}) {
    for (const auto& row : tables::consecutive_crossings(n, 30.0)) {
      const bool pass = row.pass(1e-6);
      ok = ok && pass;
      out << n << '\t' << row.i << '\t' << fmt(row.analytic) << '\t'
          << (row.detected ? fmt(*row.detected) : std::string("-")) << '\t' << (pass ? "PASS" : "FAIL") << '\n';
    }
  }

  if (!o.no_curves) {
    std::filesystem::create_directories(o.curves_dir);
    const std::pair<std::size_t, double> curves[] = {{2, 10.0}, {3, 10.0}, {6, 15.0}, {11, 50.0}};
    for (const auto& [n, hi] : curves) {
      const auto path = std::filesystem::path(o.curves_dir) / ("importance_L" + std::to_string(n) + ".csv");
      emit(tables::importance_curves_csv(n, hi, 500), path.string(), out);
      out << "wrote " << path.string() << '\n';
    }
  }
  out << (ok ? "all rows PASS\n" : "some rows FAIL\n");
  return ok ? kOk : kReproductionFailed;
}

// --- generate --------------------------------------------------------------

struct GenerateOptions {
  std::string family;
  std::size_t n = 0;
  double eps = 0.01;
  std::string edge;
  std::string output;
};

int cmd_generate(const GenerateOptions& o, std::ostream& out) {
  WeightedDigraph g;
  if (o.family == "process-matter") {
    if (o.n < 1) throw UsageError("--n must be at least 1 for process-matter");
    g = process_matter_chain(o.n);
  } else {
    if (o.n < 2) throw UsageError("--n must be at least 2");
    Matrix d = o.family == "linear" || o.family == "linear-eps" ? linear_graph(o.n) : circuit_graph(o.n);
    if (o.family == "linear-eps" || o.family == "circuit-eps") {
      std::string spec = o.edge.empty() ? (o.family == "linear-eps" ? "2,4" : "3,6") : o.edge;
      const WeightedDigraph base(d);
      const Edge e = parse_edge(spec, base);
      if (d(e.target, e.source) != 0.0) throw UsageError("--edge " + spec + " is already present");
      d = with_extra_edge(d, e, o.eps);
    } else if (!o.edge.empty()) {
      throw UsageError("--edge only applies to the -eps families");
    }
    g = WeightedDigraph(std::move(d));
  }
  emit(render_matrix_csv_display(g), o.output, out);
  return kOk;
}

bool is_numerical(const Error& e) {
  static const std::set<std::string> kinds = {"TruncationNotConverged", "NumericOverflow",       "NoBracket",
                                              "IllConditionedBasis",    "NotRealDiagonalizable", "Degenerate"};
  return kinds.count(e.kind()) > 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Indirect influences and vertex rankings of weighted digraphs"};
  app.name("pwp");
  app.require_subcommand(1);

  double tol = 0.0;
  try {
    tol = default_tol();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  TransformOptions transform;
  transform.series.tol = tol;
  auto* t = app.add_subcommand("transform", "Matrix of indirect influences");
  add_input_options(*t, transform.input);
  add_series_options(*t, transform.series);
  t->add_option("--output,-o", transform.output, "Output file (default stdout)");
  t->add_option("--sidecar", transform.sidecar, "Metadata JSON path (default <output>.json)");
  t->add_option("--format", transform.format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  t->add_option("--engine", transform.engine)
      ->check(CLI::IsMember({"series", "spectral", "auto"}))
      ->capture_default_str();

  RankOptions rank;
  rank.series.tol = tol;
  auto* r = app.add_subcommand("rank", "Scores and ranking of the vertices");
  add_input_options(*r, rank.input);
  add_series_options(*r, rank.series);
  r->add_option("--output,-o", rank.output, "Output file (default stdout)");
  r->add_option("--format", rank.format)->check(CLI::IsMember({"table", "csv", "json"}))->capture_default_str();
  r->add_option("--kind", rank.kind)
      ->check(CLI::IsMember({"importance", "influence", "dependence"}))
      ->capture_default_str();
  r->add_option("--engine", rank.engine)->check(CLI::IsMember({"series", "spectral", "auto"}))->capture_default_str();
  r->add_flag("--direct", rank.direct, "Rank by the direct influences, without the transform");
  r->add_option("--tie-tol", rank.tie_tol, "Relative tie tolerance")->check(CLI::NonNegativeNumber)->capture_default_str();

  SweepOptions sweep;
  sweep.series.tol = tol;
  auto* s = app.add_subcommand("sweep", "Constant-ranking segments along lambda or an edge weight");
  add_input_options(*s, sweep.input);
  add_series_options(*s, sweep.series);
  s->add_option("--output,-o", sweep.output, "Output file (default stdout)");
  s->add_option("--format", sweep.format)->check(CLI::IsMember({"table", "json"}))->capture_default_str();
  s->add_option("--param", sweep.param)->check(CLI::IsMember({"lambda", "epsilon"}))->capture_default_str();
  s->add_option("--kind", sweep.kind)
      ->check(CLI::IsMember({"importance", "influence", "dependence"}))
      ->capture_default_str();
  s->add_option("--lo", sweep.lo, "Range start (default 0.5 for lambda, 0 for epsilon)");
  s->add_option("--hi", sweep.hi)->capture_default_str();
  s->add_option("--grid", sweep.grid, "Grid points")->capture_default_str();
  s->add_option("--spacing", sweep.spacing)->check(CLI::IsMember({"auto", "linear", "log"}))->capture_default_str();
  s->add_option("--refine-tol", sweep.refine_tol)->capture_default_str();
  s->add_option("--tie-tol", sweep.tie_tol)->check(CLI::NonNegativeNumber)->capture_default_str();
  s->add_option("--edge", sweep.edge, "Perturbed edge 'source,target' (vertex labels)");
  s->add_option("--base-lambda", sweep.base_lambda, "Lambda of an epsilon sweep")->capture_default_str();
  s->add_option("--curves", sweep.curves, "Write per-vertex score samples on the grid as CSV");
  s->add_flag("--check-conjecture", sweep.check_conjecture,
              "On a directed path, count importance crossings per pair over (0, hi] and check their order");
  s->add_option("--conjecture-grid", sweep.conjecture_grid)->capture_default_str();

  TablesOptions tables_opts;
  auto* p = app.add_subcommand("paper-tables", "Reproduce the published stability tables and curve data");
  p->add_option("--curves-dir", tables_opts.curves_dir, "Directory for the curve CSVs")->capture_default_str();
  p->add_flag("--no-curves", tables_opts.no_curves, "Skip the curve CSVs");

  GenerateOptions gen;
  auto* g = app.add_subcommand("generate", "Fixture networks as matrix CSV");
  g->add_option("--family", gen.family)
      ->required()
      ->check(CLI::IsMember({"linear", "circuit", "linear-eps", "circuit-eps", "process-matter"}));
  g->add_option("--n", gen.n, "Vertex count (processes for process-matter)")->required();
  g->add_option("--eps", gen.eps, "Extra edge weight for the -eps families")->capture_default_str();
  g->add_option("--edge", gen.edge, "Extra edge 'source,target' (default 2,4 or 3,6)");
  g->add_option("--output,-o", gen.output, "Output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (t->parsed()) return cmd_transform(transform, out, err);
    if (r->parsed()) return cmd_rank(rank, out, err);
    if (s->parsed()) return cmd_sweep(sweep, out, err);
    if (p->parsed()) return cmd_paper_tables(tables_opts, out);
    if (g->parsed()) return cmd_generate(gen, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_numerical(e) ? kNumericalError : kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace pwp::cli
