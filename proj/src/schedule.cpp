#include "qfrenet/schedule.hpp"

#include <algorithm>
#include <random>

#include "qfrenet/operators.hpp"

namespace qfrenet {

HamiltonianSchedule::HamiltonianSchedule(int dimension, MatrixFn evaluate,
                                         MatrixFn derivative, std::string label,
                                         double time_scale)
    : dim_(dimension),
      h_(std::move(evaluate)),
      hdot_(std::move(derivative)),
      label_(std::move(label)),
      time_scale_(time_scale > 0.0 ? time_scale : 1.0) {
  if (dim_ < 2) throw DimensionUnsupported("HamiltonianSchedule: dimension must be >= 2");
  if (!h_) throw std::invalid_argument("HamiltonianSchedule: missing evaluate callback");
  fd_step_ = std::max(1e-6, 1e-6 * time_scale_);

  if (hdot_) {
    // Self-check: analytic derivative against the fallback stencil.
    std::mt19937_64 rng(0x5eedULL);
    std::uniform_real_distribution<double> dist(0.0, time_scale_);
    for (int i = 0; i < 10; ++i) {
      const double t = dist(rng);
      const CMatrix analytic = hdot_(t);
      const CMatrix fd = finite_difference_derivative(t);
      const double scale = std::max(1.0, analytic.cwiseAbs().maxCoeff());
      if ((analytic - fd).cwiseAbs().maxCoeff() > 1e-6 * scale)
        throw std::invalid_argument(
            "HamiltonianSchedule '" + label_ +
            "': analytic derivative disagrees with finite difference at t=" +
            std::to_string(t));
    }
  }
}

CMatrix HamiltonianSchedule::evaluate(double t) const {
  CMatrix h = h_(t);
  if (h.rows() != dim_ || h.cols() != dim_)
    throw DimensionMismatch("HamiltonianSchedule: evaluate returned wrong dimension");
  if (!is_hermitian(h))
    throw NonHermitianOperator("HamiltonianSchedule '" + label_ +
                               "': H(t) not Hermitian at t=" + std::to_string(t));
  return h;
}

CMatrix HamiltonianSchedule::derivative(double t) const {
  if (hdot_) {
    CMatrix hd = hdot_(t);
    if (hd.rows() != dim_ || hd.cols() != dim_)
      throw DimensionMismatch("HamiltonianSchedule: derivative returned wrong dimension");
    return hd;
  }
  return finite_difference_derivative(t);
}

CMatrix HamiltonianSchedule::finite_difference_derivative(double t) const {
  const double h = fd_step_;
  return (h_(t - 2 * h) - 8.0 * h_(t - h) + 8.0 * h_(t + h) - h_(t + 2 * h)) / (12.0 * h);
}

}  // namespace qfrenet
