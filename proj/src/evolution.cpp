#include "qfrenet/evolution.hpp"

#include <cmath>
#include <limits>

#include "qfrenet/operators.hpp"

namespace qfrenet {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

bool finite(const CVector& psi) {
  for (Eigen::Index i = 0; i < psi.size(); ++i)
    if (!std::isfinite(psi(i).real()) || !std::isfinite(psi(i).imag())) return false;
  return true;
}

// exp(-i H dt) via the spectral decomposition of Hermitian H.
CMatrix hermitian_exp_minus_i(const CMatrix& h, double dt) {
  if (h.cwiseAbs().maxCoeff() == 0.0) return CMatrix::Identity(h.rows(), h.cols());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  const Eigen::VectorXd& ev = solver.eigenvalues();
  Eigen::VectorXcd phases(ev.size());
  for (Eigen::Index k = 0; k < ev.size(); ++k)
    phases(k) = std::exp(cx(0.0, -ev(k) * dt));
  return solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
}

CVector rk4_step(const HamiltonianSchedule& schedule, const CVector& psi, double t,
                 double dt) {
  const auto rhs = [&](double tt, const CVector& y) -> CVector {
    return -imag_unit * (schedule.evaluate(tt) * y);
  };
  const CVector k1 = rhs(t, psi);
  const CVector k2 = rhs(t + dt / 2, psi + (dt / 2) * k1);
  const CVector k3 = rhs(t + dt / 2, psi + (dt / 2) * k2);
  const CVector k4 = rhs(t + dt, psi + dt * k3);
  return psi + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace

double speed_floor(const CMatrix& h) { return 1e-9 * h.norm(); }

double speed(const HamiltonianSchedule& schedule, const CVector& state, double t) {
  const CMatrix dh = delta_operator(schedule.evaluate(t), state);
  return (dh * state).norm();
}

double v_dot(const HamiltonianSchedule& schedule, const CVector& state, double t) {
  const CMatrix h = schedule.evaluate(t);
  const CMatrix dh = delta_operator(h, state);
  const CMatrix dhd = delta_operator(schedule.derivative(t), state);
  const CVector u = dh * state;
  const double v = u.norm();
  if (v <= speed_floor(h)) throw DegenerateSpeed("v_dot: speed below threshold");
  // 2 v v_dot = <(dHdot)(dH) + (dH)(dHdot)> = 2 Re <dH psi | dHdot psi>.
  return u.dot(dhd * state).real() / v;
}

CVector tangent_vector(const HamiltonianSchedule& schedule, const CVector& state,
                       double t) {
  const CMatrix h = schedule.evaluate(t);
  const CMatrix dh = delta_operator(h, state);
  const CVector u = dh * state;
  const double v = u.norm();
  if (v <= speed_floor(h)) throw DegenerateSpeed("tangent_vector: speed below threshold");
  return (-imag_unit / v) * u;
}

std::vector<double> geometric_phase(const std::vector<CVector>& raw_states,
                                    const HamiltonianSchedule& schedule,
                                    const std::vector<double>& times) {
  const std::size_t n = times.size();
  std::vector<double> energy(n);
  for (std::size_t i = 0; i < n; ++i)
    energy[i] = expectation(schedule.evaluate(times[i]), raw_states[i]);

  std::vector<double> beta(n, 0.0);
  if (n < 2) return beta;
  if (n == 2) {
    beta[1] = 0.5 * (energy[0] + energy[1]) * (times[1] - times[0]);
    return beta;
  }
  const double h = times[1] - times[0];
  // Cumulative Simpson: integrate the local quadratic through three
  // neighbouring samples over each interval.
  for (std::size_t i = 0; i + 1 < n; ++i) {
    double inc;
    if (i + 2 < n)
      inc = h / 12.0 * (5.0 * energy[i] + 8.0 * energy[i + 1] - energy[i + 2]);
    else
      inc = h / 12.0 * (-energy[i - 1] + 8.0 * energy[i] + 5.0 * energy[i + 1]);
    beta[i + 1] = beta[i] + inc;
  }
  return beta;
}

std::vector<double> arc_length(const Trajectory& traj) {
  const std::size_t n = traj.size();
  std::vector<double> s(n, 0.0);
  for (std::size_t i = 1; i < n; ++i)
    s[i] = s[i - 1] + 0.5 * (traj.v[i - 1] + traj.v[i]) * (traj.times[i] - traj.times[i - 1]);
  return s;
}

Trajectory propagate(const HamiltonianSchedule& schedule, const CVector& psi0,
                     const TimeGrid& grid, PropagationMethod method) {
  if (grid.steps < 2) throw std::invalid_argument("propagate: steps must be >= 2");
  if (!(grid.t_max > 0.0)) throw std::invalid_argument("propagate: t_max must be > 0");
  if (std::abs(psi0.norm() - 1.0) > 1e-10)
    throw std::invalid_argument("propagate: initial state not normalized");

  const double dt = grid.dt();
  Trajectory traj;
  traj.times.resize(grid.steps + 1);
  traj.raw_states.resize(grid.steps + 1);
  traj.times[0] = 0.0;
  traj.raw_states[0] = psi0;

  CVector psi = psi0;
  for (int i = 0; i < grid.steps; ++i) {
    const double t = i * dt;
    if (method == PropagationMethod::midpoint_exponential) {
      psi = hermitian_exp_minus_i(schedule.evaluate(t + dt / 2), dt) * psi;
    } else {
      psi = rk4_step(schedule, psi, t, dt);
      const double drift = std::abs(psi.norm() - 1.0);
      traj.max_norm_drift = std::max(traj.max_norm_drift, drift);
      traj.total_norm_drift += drift;
      psi /= psi.norm();
    }
    if (!finite(psi))
      throw NonFiniteState("propagate: state became non-finite at step " +
                           std::to_string(i + 1));
    traj.times[i + 1] = (i + 1) * dt;
    traj.raw_states[i + 1] = psi;
  }

  complete_trajectory(schedule, traj);
  return traj;
}

void complete_trajectory(const HamiltonianSchedule& schedule, Trajectory& traj) {
  traj.beta = geometric_phase(traj.raw_states, schedule, traj.times);
  const std::size_t n = traj.size();
  traj.transported.resize(n);
  traj.v.resize(n);
  traj.v_dot.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    traj.transported[i] = std::exp(cx(0.0, traj.beta[i])) * traj.raw_states[i];
    const CMatrix h = schedule.evaluate(traj.times[i]);
    const CMatrix dh = delta_operator(h, traj.raw_states[i]);
    const CVector u = dh * traj.raw_states[i];
    traj.v[i] = u.norm();
    if (traj.v[i] > speed_floor(h)) {
      const CMatrix dhd = delta_operator(schedule.derivative(traj.times[i]),
                                         traj.raw_states[i]);
      traj.v_dot[i] = u.dot(dhd * traj.raw_states[i]).real() / traj.v[i];
    } else {
      traj.v_dot[i] = kNaN;
    }
  }
  traj.s = arc_length(traj);
}

double parallel_transport_residual(const Trajectory& traj) {
  const std::size_t n = traj.size();
  if (n < 5) return 0.0;
  const double dt = traj.times[1] - traj.times[0];
  double worst = 0.0;
  for (std::size_t i = 2; i + 2 < n; ++i) {
    if (!(traj.v[i] > 0.0)) continue;
    const CVector dpsi = (traj.transported[i - 2] - 8.0 * traj.transported[i - 1] +
                          8.0 * traj.transported[i + 1] - traj.transported[i + 2]) /
                         (12.0 * dt);
    const double res = std::abs(traj.transported[i].dot(dpsi)) / traj.v[i];
    worst = std::max(worst, res);
  }
  return worst;
}

}  // namespace qfrenet
