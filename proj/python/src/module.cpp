#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "pwp/analytic.hpp"
#include "pwp/graph.hpp"
#include "pwp/rankings.hpp"
#include "pwp/spectral.hpp"
#include "pwp/sweep.hpp"
#include "pwp/transform.hpp"

namespace py = pybind11;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

pwp::Matrix to_matrix(const Array& a) {
  if (a.ndim() != 2) throw pwp::ShapeError("expected a 2-d array, got " + std::to_string(a.ndim()) + " dimensions");
  const auto rows = static_cast<std::size_t>(a.shape(0));
  const auto cols = static_cast<std::size_t>(a.shape(1));
  return pwp::Matrix(rows, cols, std::vector<double>(a.data(), a.data() + a.size()));
}

Array to_array(const pwp::Matrix& m) {
  Array out({m.rows(), m.cols()});
  std::copy(m.entries().begin(), m.entries().end(), out.mutable_data());
  return out;
}

pwp::ScoreKind kind_of(const std::string& name) {
  const auto k = pwp::parse_score_kind(name);
  if (!k) throw pwp::InvalidArgument("unknown score kind '" + name + "'");
  return *k;
}

pwp::PwpParams params(double lambda, double tol, std::size_t max_terms) {
  pwp::PwpParams p{lambda, tol, max_terms};
  p.validate();
  return p;
}

pwp::InfluenceMatrix run_transform(const pwp::Matrix& d, const pwp::PwpParams& p, const std::string& engine) {
  if (engine == "series") return pwp::pwp_transform(d, p);
  if (engine == "spectral") return pwp::pwp_transform_spectral(pwp::real_eigendecomposition(d), p.lambda);
  if (engine == "auto") return pwp::pwp_transform_auto(d, p).result;
  throw pwp::InvalidArgument("unknown engine '" + engine + "'");
}

std::vector<double> score_values(const Array& d, const std::string& kind, std::optional<double> lambda, double tol,
                                 std::size_t max_terms, const std::string& engine) {
  const auto m = to_matrix(d);
  if (!lambda) return pwp::direct_scores(m, kind_of(kind)).values;
  return pwp::indirect_scores(run_transform(m, params(*lambda, tol, max_terms), engine), kind_of(kind)).values;
}

py::dict report_dict(const pwp::SweepReport& r) {
  py::list segments, crossings;
  for (const auto& s : r.segments)
    segments.append(py::dict(py::arg("from") = s.from, py::arg("to") = s.to, py::arg("ranking") = s.ranking.to_string()));
  for (const auto& c : r.crossings) {
    py::list pairs;
    for (const auto& p : c.pairs) pairs.append(py::make_tuple(p.a, p.b, p.at));
    crossings.append(py::dict(py::arg("at") = c.at, py::arg("pairs") = pairs,
                              py::arg("before") = c.before.to_string(), py::arg("after") = c.after.to_string()));
  }
  return py::dict(py::arg("param") = r.param == pwp::SweepParam::lambda ? "lambda" : "epsilon",
                  py::arg("score_kind") = std::string(pwp::to_string(r.score_kind)), py::arg("lo") = r.lo,
                  py::arg("hi") = r.hi, py::arg("grid_resolution") = r.grid_resolution,
                  py::arg("segments") = segments, py::arg("crossings") = crossings);
}

pwp::SweepSpec sweep_spec(pwp::SweepParam param, double lo, double hi, std::size_t grid, const std::string& kind,
                          double refine_tol, double tie_tol) {
  pwp::SweepSpec s;
  s.param = param;
  s.lo = lo;
  s.hi = hi;
  s.grid_points = grid;
  s.score_kind = kind_of(kind);
  s.refine_tol = refine_tol;
  s.tie_tol = tie_tol;
  return s;
}

}  // namespace

PYBIND11_MODULE(_pwp, m) {
  m.doc() = "Indirect influence transform, rankings and parameter sweeps";

  static py::exception<pwp::Error> error(m, "PwpError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const pwp::Error& e) {
      error(e.what());
    }
  });

  m.def("eplus", &pwp::eplus, py::arg("x"));

  m.def(
      "transform",
      [](const Array& d, double lambda, double tol, std::size_t max_terms, const std::string& engine) {
        return to_array(run_transform(to_matrix(d), params(lambda, tol, max_terms), engine).t);
      },
      py::arg("d"), py::arg("lam") = 1.0, py::arg("tol") = 1e-12, py::arg("max_terms") = 512,
      py::arg("engine") = "series");

  m.def("scores", &score_values, py::arg("d"), py::arg("kind") = "importance", py::arg("lam") = 1.0,
        py::arg("tol") = 1e-12, py::arg("max_terms") = 512, py::arg("engine") = "series");

  m.def(
      "rank",
      [](const Array& d, const std::string& kind, std::optional<double> lambda, double tie_tol, double tol,
         std::size_t max_terms, const std::string& engine) {
        return pwp::ranking_from_scores(score_values(d, kind, lambda, tol, max_terms, engine), tie_tol).to_string();
      },
      py::arg("d"), py::arg("kind") = "importance", py::arg("lam") = 1.0, py::arg("tie_tol") = pwp::kDefaultTieTol,
      py::arg("tol") = 1e-12, py::arg("max_terms") = 512, py::arg("engine") = "series");

  m.def(
      "ranking_from_scores",
      [](const std::vector<double>& s, double tie_tol) { return pwp::ranking_from_scores(s, tie_tol).to_string(); },
      py::arg("scores"), py::arg("tie_tol") = pwp::kDefaultTieTol);

  m.def(
      "lambda_sweep",
      [](const Array& d, double lo, double hi, std::size_t grid, const std::string& kind, double refine_tol,
         double tie_tol) {
        return report_dict(pwp::lambda_sweep(
            to_matrix(d), sweep_spec(pwp::SweepParam::lambda, lo, hi, grid, kind, refine_tol, tie_tol)));
      },
      py::arg("d"), py::arg("lo") = 0.5, py::arg("hi") = 10.0, py::arg("grid") = 400, py::arg("kind") = "importance",
      py::arg("refine_tol") = 1e-10, py::arg("tie_tol") = pwp::kDefaultTieTol);

  m.def(
      "epsilon_sweep",
      [](const Array& d, std::size_t source, std::size_t target, double lo, double hi, double base_lambda,
         std::size_t grid, const std::string& kind, double refine_tol, double tie_tol) {
        auto spec = sweep_spec(pwp::SweepParam::epsilon, lo, hi, grid, kind, refine_tol, tie_tol);
        spec.series.lambda = base_lambda;
        return report_dict(pwp::epsilon_sweep(pwp::WeightedDigraph(to_matrix(d)), {source, target}, spec));
      },
      py::arg("d"), py::arg("source"), py::arg("target"), py::arg("lo") = 0.0, py::arg("hi") = 30.0,
      py::arg("base_lambda") = 1.0, py::arg("grid") = 400, py::arg("kind") = "importance",
      py::arg("refine_tol") = 1e-10, py::arg("tie_tol") = pwp::kDefaultTieTol);

  m.def(
      "verify_unique_crossings",
      [](std::size_t n, double hi, std::size_t grid) {
        const auto r = pwp::verify_unique_crossings(n, hi, grid);
        py::dict pairs;
        for (const auto& p : r.pairs) pairs[py::make_tuple(p.i, p.j)] = p.locations;
        return py::dict(py::arg("n") = r.n, py::arg("k") = r.k, py::arg("total_crossings") = r.total_crossings,
                        py::arg("one_per_pair") = r.one_per_pair, py::arg("order_holds") = r.order_holds,
                        py::arg("pairs") = pairs);
      },
      py::arg("n"), py::arg("hi") = 50.0, py::arg("grid") = 20000);

  m.def(
      "crossing_consecutive", [](std::size_t n, std::size_t i) { return pwp::analytic::crossing_consecutive(n, i).lambda_star; },
      py::arg("n"), py::arg("i"));
  m.def("linear_importance", &pwp::analytic::linear_importance, py::arg("n"), py::arg("j"), py::arg("lam"));
  m.def("linear_influence", &pwp::analytic::linear_influence, py::arg("n"), py::arg("i"), py::arg("lam"));
  m.def(
      "circuit_indirect", [](std::size_t n, std::size_t k, double lambda) { return pwp::analytic::circuit_indirect(n, k, lambda); },
      py::arg("n"), py::arg("k"), py::arg("lam"));

  m.def(
      "dominance_bound",
      [](const Array& d, const std::string& kind, std::size_t i, std::size_t j) {
        return pwp::dominance_bound(pwp::score_difference_expsum(pwp::real_eigendecomposition(to_matrix(d)), kind_of(kind), i, j));
      },
      py::arg("d"), py::arg("kind"), py::arg("i"), py::arg("j"));

  m.def("linear_graph", [](std::size_t n) { return to_array(pwp::linear_graph(n)); }, py::arg("n"));
  m.def("circuit_graph", [](std::size_t n) { return to_array(pwp::circuit_graph(n)); }, py::arg("n"));
}
