#include "pwp/spectral.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace pwp {

namespace {

Eigen::MatrixXd to_eigen(const Matrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

Matrix from_eigen(const Eigen::MatrixXd& m) {
  Matrix out(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

std::string describe(const std::vector<double>& imag) {
  double worst = 0.0;
  for (double v : imag) worst = std::max(worst, std::fabs(v));
  return "eigenvalues with imaginary parts up to " + std::to_string(worst);
}

double max_abs(const Matrix& m) {
  double best = 0.0;
  for (double v : m.entries()) best = std::max(best, std::fabs(v));
  return best;
}

}  // namespace

NotRealDiagonalizable::NotRealDiagonalizable(std::vector<double> imaginary_parts)
    : Error("NotRealDiagonalizable", describe(imaginary_parts)), imag_(std::move(imaginary_parts)) {}

RealSpectrum real_eigendecomposition(const Matrix& d, double reconstruction_tol) {
  if (!d.is_square() || d.empty()) throw ShapeError("eigendecomposition needs a non-empty square matrix");
  const Eigen::MatrixXd dm = to_eigen(d);
  const auto n = dm.rows();
  Eigen::VectorXd values(n);
  Eigen::MatrixXd basis(n, n);
  Eigen::MatrixXd basis_inverse(n, n);

  if (d == d.transposed()) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dm);
    if (solver.info() != Eigen::Success) throw IllConditionedBasis("symmetric eigensolver failed");
    values = solver.eigenvalues();
    basis = solver.eigenvectors();
    basis_inverse = basis.transpose();
  } else {
    Eigen::EigenSolver<Eigen::MatrixXd> solver(dm);
    if (solver.info() != Eigen::Success) throw IllConditionedBasis("eigensolver failed");
    const Eigen::VectorXcd ev = solver.eigenvalues();
    const double radius = std::max(1.0, ev.cwiseAbs().maxCoeff());
    std::vector<double> imag(static_cast<std::size_t>(n));
    bool complex = false;
    for (Eigen::Index r = 0; r < n; ++r) {
      imag[static_cast<std::size_t>(r)] = ev(r).imag();
      if (std::fabs(ev(r).imag()) > 1e-8 * radius) complex = true;
    }
    if (complex) throw NotRealDiagonalizable(std::move(imag));

    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return ev(a).real() < ev(b).real(); });
    const Eigen::MatrixXd vectors = solver.eigenvectors().real();
    for (Eigen::Index r = 0; r < n; ++r) {
      values(r) = ev(order[static_cast<std::size_t>(r)]).real();
      basis.col(r) = vectors.col(order[static_cast<std::size_t>(r)]);
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(basis);
    if (!lu.isInvertible()) throw IllConditionedBasis("eigenvector basis is singular (defective matrix?)");
    basis_inverse = lu.inverse();
  }

  RealSpectrum spec;
  spec.eigenvalues.assign(values.data(), values.data() + n);
  spec.condition_estimate = basis.norm() * basis_inverse.norm() / static_cast<double>(n);
  if (!std::isfinite(spec.condition_estimate) || spec.condition_estimate > 1e12) {
    throw IllConditionedBasis("eigenvector basis condition estimate " + std::to_string(spec.condition_estimate));
  }
  const double d_norm = std::max(dm.norm(), std::numeric_limits<double>::min());
  const double recon = (basis * values.asDiagonal() * basis_inverse - dm).norm() / d_norm;
  const double ident = (basis * basis_inverse - Eigen::MatrixXd::Identity(n, n)).norm();
  if (!(recon <= reconstruction_tol) || !(ident <= reconstruction_tol)) {
    throw IllConditionedBasis("eigendecomposition does not reconstruct D (residual " + std::to_string(recon) + ")");
  }
  spec.basis = from_eigen(basis);
  spec.basis_inverse = from_eigen(basis_inverse);
  return spec;
}

InfluenceMatrix pwp_transform_spectral(const RealSpectrum& spec, double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw InvalidArgument("lambda must be positive");
  const auto n = static_cast<Eigen::Index>(spec.eigenvalues.size());
  const double normaliser = eplus(lambda);
  Eigen::VectorXd diag(n);
  for (Eigen::Index r = 0; r < n; ++r) diag(r) = eplus(spec.eigenvalues[static_cast<std::size_t>(r)] * lambda) / normaliser;
  const Eigen::MatrixXd t = to_eigen(spec.basis) * diag.asDiagonal() * to_eigen(spec.basis_inverse);
  Matrix out = from_eigen(t);
  if (!out.all_finite()) throw NumericOverflow("spectral evaluation overflowed at lambda=" + std::to_string(lambda));
  return {std::move(out), lambda, 0};
}

double ExpSum::constant() const noexcept {
  double a = 0.0;
  for (const auto& t : terms) a += t.coefficient;
  return a;
}

double ExpSum::evaluate(double lambda) const {
  double s = 0.0;
  for (const auto& t : terms) s += t.coefficient * eplus(t.rate * lambda);
  return s;
}

double ExpSum::evaluate_scaled(double lambda) const {
  double top = 0.0;
  for (const auto& t : terms) top = std::max(top, t.rate);
  const double damp = std::exp(-top * lambda);
  double s = 0.0;
  for (const auto& t : terms) {
    const double x = t.rate * lambda;
    // e^{−top·λ}·(e^{x} − 1), avoiding overflow of e^{x} for large x.
    const double v = x < 700.0 ? damp * eplus(x) : std::exp(x - top * lambda) - damp;
    s += t.coefficient * v;
  }
  return s;
}

ExpSum score_difference_expsum(const RealSpectrum& spec, ScoreKind kind, std::size_t i, std::size_t j) {
  const std::size_t n = spec.eigenvalues.size();
  if (i >= n || j >= n) throw IndexError("vertex out of range");
  if (i == j) return {};
  const Matrix& a = spec.basis;
  const Matrix& b = spec.basis_inverse;

  // e_+^λ·T = Σ_r A(:, r)·B(r, :)·e_+^{d_r λ}; each score is linear in the
  // rank-one pieces.
  auto coefficient = [&](std::size_t v, std::size_t r) {
    double c = 0.0;
    if (kind != ScoreKind::influence) {
      double row = 0.0;
      for (std::size_t q = 0; q < n; ++q) row += b(r, q);
      c += a(v, r) * row;
    }
    if (kind != ScoreKind::dependence) {
      double col = 0.0;
      for (std::size_t q = 0; q < n; ++q) col += a(q, r);
      c += col * b(r, v);
    }
    return c;
  };

  double rate_scale = 0.0;
  for (double d : spec.eigenvalues) rate_scale = std::max(rate_scale, std::fabs(d));
  const double dedup_tol = 1e-9 * rate_scale;
  const double coef_tol = 1e-12 * static_cast<double>(n) * max_abs(a) * max_abs(b);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](auto x, auto y) { return spec.eigenvalues[x] < spec.eigenvalues[y]; });

  ExpSum out;
  std::size_t r = 0;
  while (r < n) {
    // Group eigenvalues within dedup_tol of the group's first member.
    const double first = spec.eigenvalues[order[r]];
    double coef = 0.0;
    double rate_sum = 0.0;
    std::size_t count = 0;
    for (; r < n && spec.eigenvalues[order[r]] - first <= dedup_tol; ++r, ++count) {
      coef += coefficient(i, order[r]) - coefficient(j, order[r]);
      rate_sum += spec.eigenvalues[order[r]];
    }
    const double rate = rate_sum / static_cast<double>(count);
    if (std::fabs(rate) <= dedup_tol) continue;  // e_+^{0·λ} ≡ 0
    if (std::fabs(coef) <= coef_tol) continue;
    out.terms.push_back({coef, rate});
  }
  return out;
}

double dominance_bound(const ExpSum& e) {
  if (e.empty()) throw Degenerate("identically zero exponential sum");
  // Σ a_r e_+^{d_r λ} = Σ a_r e^{d_r λ} − a: a plain exponential sum with an
  // extra rate-0 term.
  std::vector<ExpTerm> plain = e.terms;
  const double a = e.constant();
  if (a != 0.0) plain.push_back({-a, 0.0});
  const auto top = std::max_element(plain.begin(), plain.end(), [](auto& x, auto& y) { return x.rate < y.rate; });
  const double top_coef = std::fabs(top->coefficient);
  const double top_rate = top->rate;
  if (plain.size() == 1) return 0.0;
  // Σ_{others} |c_r| e^{(d_r − d_top)λ} − |c_top| is strictly decreasing.
  auto excess = [&](double lambda) {
    double s = -top_coef;
    for (const auto& t : plain)
      if (&t != &*top) s += std::fabs(t.coefficient) * std::exp((t.rate - top_rate) * lambda);
    return s;
  };
  if (excess(0.0) < 0.0) return 0.0;
  double hi = 1.0;
  while (excess(hi) >= 0.0) {
    hi *= 2.0;
    if (hi > 1e12) return std::numeric_limits<double>::infinity();
  }
  double lo = hi / 2.0 > 1.0 ? hi / 2.0 : 0.0;
  while (hi - lo > 1e-12 * hi) {
    const double mid = 0.5 * (lo + hi);
    if (excess(mid) >= 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return hi;
}

RootIsolation isolate_roots(const ExpSum& e, double lo, double hi, std::size_t grid, double tol) {
  if (e.empty()) throw Degenerate("the two scores are identical for every lambda");
  if (!(lo > 0.0) || !(hi > lo)) throw InvalidArgument("root isolation needs 0 < lo < hi");
  if (grid < 2) throw InvalidArgument("root isolation needs at least 2 grid points");
  RootIsolation out;
  out.lambda_max = dominance_bound(e);
  const auto f = [&](double x) { return e.evaluate_scaled(x); };
  double prev_x = lo;
  double prev_f = f(lo);
  if (prev_f == 0.0) out.roots.push_back(lo);
  for (std::size_t g = 1; g < grid; ++g) {
    const double x = g + 1 == grid ? hi : lo + (hi - lo) * static_cast<double>(g) / static_cast<double>(grid - 1);
    const double fx = f(x);
    if (fx == 0.0) {
      out.roots.push_back(x);
    } else if (prev_f != 0.0 && std::signbit(fx) != std::signbit(prev_f)) {
      // Bisection on the scaled form; same sign as the original.
      double a = prev_x, b = x, fa = prev_f;
      while (b - a > tol) {
        const double mid = 0.5 * (a + b);
        if (!(mid > a && mid < b)) break;
        const double fm = f(mid);
        if (fm == 0.0) {
          a = b = mid;
          break;
        }
        if (std::signbit(fm) == std::signbit(fa)) {
          a = mid;
          fa = fm;
        } else {
          b = mid;
        }
      }
      out.roots.push_back(0.5 * (a + b));
    }
    prev_x = x;
    prev_f = fx;
  }
  return out;
}

AutoTransform pwp_transform_auto(const Matrix& d, const PwpParams& params) {
  params.validate();
  try {
    const auto spec = real_eigendecomposition(d);
    return {pwp_transform_spectral(spec, params.lambda), Engine::spectral, {}};
  } catch (const NotRealDiagonalizable& e) {
    return {pwp_transform(d, params), Engine::series,
            std::string(e.what()) + "; score curves may oscillate without bound, using the series engine"};
  } catch (const IllConditionedBasis& e) {
    return {pwp_transform(d, params), Engine::series, std::string(e.what()) + "; using the series engine"};
  }
}

}  // namespace pwp
