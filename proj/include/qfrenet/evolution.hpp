#pragma once

#include <vector>

#include "qfrenet/schedule.hpp"
#include "qfrenet/types.hpp"

namespace qfrenet {

struct TimeGrid {
  double t_max = 1.0;
  int steps = 100;  // number of intervals; samples = steps + 1
  double dt() const { return t_max / steps; }
};

enum class PropagationMethod { rk4, midpoint_exponential };

// Sampled quantum curve: raw Schroedinger states psi(t), transported states
// Psi(t) = e^{i beta(t)} psi(t), and the kinematic scalars along the grid.
// v_dot entries are NaN where the speed is below threshold.
struct Trajectory {
  std::vector<double> times;
  std::vector<CVector> raw_states;
  std::vector<CVector> transported;
  std::vector<double> beta;
  std::vector<double> v;
  std::vector<double> s;
  std::vector<double> v_dot;
  double max_norm_drift = 0.0;    // rk4 per-step drift discarded by renormalization
  double total_norm_drift = 0.0;
  std::size_t size() const { return times.size(); }
};

// Speed threshold below which curvature/torsion quantities are undefined.
double speed_floor(const CMatrix& h);

// Uniform-grid propagation of the Schroedinger equation i d/dt psi = H(t) psi.
// midpoint_exponential applies exp(-i H(t + dt/2) dt) each step (unitary to
// machine precision); rk4 renormalizes each step and records the discarded
// norm drift. Fills the full Trajectory (phase, speed, arc length).
Trajectory propagate(const HamiltonianSchedule& schedule, const CVector& psi0,
                     const TimeGrid& grid,
                     PropagationMethod method = PropagationMethod::rk4);

// Derives beta, transported states, v, v_dot and s from times + raw_states.
// propagate() calls this; it is exposed for trajectories whose states come
// from elsewhere (an analytic propagator, say).
void complete_trajectory(const HamiltonianSchedule& schedule, Trajectory& traj);

// beta(t_i) = integral_0^{t_i} <psi|H|psi> dt' on the uniform grid, by
// cumulative Simpson (local quadratic through neighbouring samples).
std::vector<double> geometric_phase(const std::vector<CVector>& raw_states,
                                    const HamiltonianSchedule& schedule,
                                    const std::vector<double>& times);

// v = sqrt(<(Delta H)^2>) at one instant.
double speed(const HamiltonianSchedule& schedule, const CVector& state, double t);

// Arc length by composite trapezoid over the trajectory's speed samples.
std::vector<double> arc_length(const Trajectory& traj);

// v_dot = <(Delta Hdot)(Delta H) + (Delta H)(Delta Hdot)> / (2v).
// Throws DegenerateSpeed when v is below threshold.
double v_dot(const HamiltonianSchedule& schedule, const CVector& state, double t);

// Unit tangent |T> = -i (Delta H / v) |Psi>; orthogonal to |Psi>.
CVector tangent_vector(const HamiltonianSchedule& schedule, const CVector& state,
                       double t);

// Max over interior samples of |<Psi|dPsi/dt>| / v, with the derivative from a
// 5-point central stencil. Diagnostic for the parallel-transport property.
double parallel_transport_residual(const Trajectory& traj);

}  // namespace qfrenet
