#include "pwp/transform.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace pwp {

double eplus(double x) { return std::expm1(x); }

void PwpParams::validate() const {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw InvalidArgument("lambda must be a positive finite number");
  if (!(tol > 0.0)) throw InvalidArgument("tol must be positive");
  if (max_terms < 1) throw InvalidArgument("max_terms must be at least 1");
}

TruncationNotConverged::TruncationNotConverged(InfluenceMatrix partial, double achieved_bound,
                                               double required_bound)
    : Error("TruncationNotConverged",
            "series not converged after " + std::to_string(partial.truncation_terms) +
                " terms at lambda=" + std::to_string(partial.lambda) + " (tail bound " +
                std::to_string(achieved_bound) + ", required " + std::to_string(required_bound) + ")"),
      partial_(std::move(partial)),
      achieved_bound_(achieved_bound),
      required_bound_(required_bound) {}

namespace {

// Neumaier-compensated entrywise accumulator.
class CompensatedSum {
 public:
  explicit CompensatedSum(std::size_t n) : sum_(n, n), comp_(n * n, 0.0) {}

  void add_scaled(const Matrix& term, double w) {
    const std::size_t n = sum_.rows();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const double x = w * term(i, j);
        double& s = sum_(i, j);
        double& c = comp_[i * n + j];
        const double t = s + x;
        c += std::fabs(s) >= std::fabs(x) ? (s - t) + x : (x - t) + s;
        s = t;
      }
    }
  }

  Matrix result() const {
    Matrix out = sum_;
    const std::size_t n = out.rows();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out(i, j) += comp_[i * n + j];
    return out;
  }

 private:
  Matrix sum_;
  std::vector<double> comp_;
};

}  // namespace

InfluenceMatrix pwp_transform(const Matrix& d, const PwpParams& params) {
  if (!d.is_square()) throw ShapeError("pwp_transform needs a square matrix");
  params.validate();
  const std::size_t n = d.rows();
  const double lambda = params.lambda;
  const double growth = norm_inf(d) * lambda;
  const double normaliser = eplus(lambda);
  if (!std::isfinite(normaliser)) throw NumericOverflow("e^lambda - 1 overflows at lambda=" + std::to_string(lambda));

  CompensatedSum acc(n);
  Matrix power = d;
  double weight = 1.0;  // λ^k / k!
  double bound = 1.0;   // (‖D‖_∞ λ)^k / k!
  std::size_t k = 1;
  auto finish = [&](std::size_t terms) {
    Matrix t = acc.result().scaled(1.0 / normaliser);
    if (!t.all_finite()) throw NumericOverflow("series overflowed at lambda=" + std::to_string(lambda));
    return InfluenceMatrix{std::move(t), lambda, terms};
  };

  for (;; ++k) {
    weight *= lambda / static_cast<double>(k);
    bound *= growth / static_cast<double>(k);
    acc.add_scaled(power, weight);
    if (power.is_zero()) return finish(k);

    Matrix next = power * d;
    if (next.is_zero()) return finish(k);

    const Matrix partial = acc.result();
    if (!next.all_finite() || !partial.all_finite()) {
      throw NumericOverflow("series overflowed at lambda=" + std::to_string(lambda) + " after " + std::to_string(k) +
                            " terms");
    }
    const double next_bound = bound * growth / static_cast<double>(k + 1);
    const double required = params.tol * (norm_inf(partial) + 1.0);
    if (next_bound < required && static_cast<double>(k + 1) > growth) return finish(k);
    if (k >= params.max_terms) {
      throw TruncationNotConverged(InfluenceMatrix{acc.result().scaled(1.0 / normaliser), lambda, k},
                                   next_bound, required);
    }
    power = std::move(next);
  }
}

InfluenceMatrix pwp_rescaled(const Matrix& d, double c, const PwpParams& params) {
  if (!(c > 0.0) || !std::isfinite(c)) throw InvalidArgument("scale factor must be positive");
  return pwp_transform(d.scaled(c), params);
}

}  // namespace pwp
