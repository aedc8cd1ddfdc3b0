#pragma once

#include <functional>
#include <string>

#include "qfrenet/types.hpp"

namespace qfrenet {

// Time-parametrized Hermitian operator H(t) with an optional analytic
// derivative. Without one, the derivative falls back to a 5-point central
// difference with step h = max(1e-6, 1e-6 * time_scale).
//
// When an analytic derivative is supplied it is checked at construction
// against the finite-difference fallback at 10 pseudo-random times in
// [0, time_scale]; a mismatch beyond 1e-6 * |Hdot| throws.
class HamiltonianSchedule {
 public:
  using MatrixFn = std::function<CMatrix(double)>;

  HamiltonianSchedule(int dimension, MatrixFn evaluate, MatrixFn derivative = nullptr,
                      std::string label = "", double time_scale = 1.0);

  int dimension() const { return dim_; }
  const std::string& label() const { return label_; }
  double time_scale() const { return time_scale_; }
  bool has_analytic_derivative() const { return static_cast<bool>(hdot_); }

  CMatrix evaluate(double t) const;    // Hermiticity-checked
  CMatrix derivative(double t) const;  // analytic, or 5-point fallback

  CMatrix finite_difference_derivative(double t) const;

 private:
  int dim_;
  MatrixFn h_;
  MatrixFn hdot_;
  std::string label_;
  double time_scale_;
  double fd_step_;
};

}  // namespace qfrenet
