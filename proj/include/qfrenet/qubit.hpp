#pragma once

#include <functional>
#include <vector>

#include "qfrenet/evolution.hpp"
#include "qfrenet/types.hpp"

namespace qfrenet {

// Unit Bloch vector of a pure qubit state, a_i = <sigma_i>.
Vec3 bloch_from_state(const CVector& state);

// Inverse map with the global phase fixed by making the first nonzero
// amplitude real positive.
CVector state_from_bloch(const Vec3& a);

CVector state_from_angles(double theta, double phi);

// da/dt = 2 m x a; the output is orthogonal to both a and m.
Vec3 bloch_rhs(const Vec3& m, const Vec3& a);

// Field m(t) plus its time derivative.
struct FieldSample {
  Vec3 m;
  Vec3 mdot;
};

using FieldSchedule = std::function<FieldSample(double)>;

struct BlochOrbit {
  std::vector<double> times;
  std::vector<Vec3> points;
};

// RK4 on the Bloch equation with per-step renormalization of |a|.
BlochOrbit propagate_bloch(const FieldSchedule& field, const Vec3& a0,
                           const TimeGrid& grid);

// Closed-form curvature of the qubit curve from the Bloch vector and the
// field pair (m, mdot). Requires m^2 - (a.m)^2 above threshold.
double curvature_bloch(const Vec3& a, const Vec3& m, const Vec3& mdot);

// The qubit torsion in the pre-cancellation form: the difference of the two
// quotient terms, which vanishes identically for unit a. `value` is that
// difference (~0) and `residual` = |value| doubles as a numerical check of
// the underlying vector identity.
struct TorsionBloch {
  double value = 0.0;
  double residual = 0.0;
};

TorsionBloch torsion_bloch(const Vec3& a, const Vec3& m, const Vec3& mdot);

struct SpeedAccel {
  double v = 0.0;
  double v_dot = 0.0;
};

// v^2 = m^2 - (a.m)^2, v_dot = [m.mdot - (a.m)(a.mdot)] / v.
SpeedAccel speed_accel_bloch(const Vec3& a, const Vec3& m, const Vec3& mdot);

// Matrix-side helpers for cross-checks: H = m.sigma as a schedule.
HamiltonianSchedule field_to_schedule(const FieldSchedule& field,
                                      const std::string& label = "qubit field",
                                      double time_scale = 1.0);

}  // namespace qfrenet
