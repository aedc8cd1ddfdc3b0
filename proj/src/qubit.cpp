#include "qfrenet/qubit.hpp"

#include <cmath>

#include "qfrenet/pauli.hpp"

namespace qfrenet {

Vec3 bloch_from_state(const CVector& state) {
  if (state.size() != 2) throw DimensionUnsupported("bloch_from_state: N must be 2");
  const cx c01 = std::conj(state(0)) * state(1);
  return Vec3(2.0 * c01.real(), 2.0 * c01.imag(),
              std::norm(state(0)) - std::norm(state(1)));
}

CVector state_from_bloch(const Vec3& a) {
  const Vec3 n = a / a.norm();
  const double theta = std::acos(std::clamp(n.z(), -1.0, 1.0));
  const double phi = std::atan2(n.y(), n.x());
  return state_from_angles(theta, phi);
}

CVector state_from_angles(double theta, double phi) {
  CVector psi(2);
  psi(0) = std::cos(theta / 2.0);
  psi(1) = std::exp(cx(0.0, phi)) * std::sin(theta / 2.0);
  // Phase convention: first nonzero amplitude real positive.
  if (std::abs(psi(0)) < 1e-15) {
    psi(0) = 0.0;
    psi(1) = std::abs(psi(1));
  }
  return psi;
}

Vec3 bloch_rhs(const Vec3& m, const Vec3& a) { return 2.0 * m.cross(a); }

BlochOrbit propagate_bloch(const FieldSchedule& field, const Vec3& a0,
                           const TimeGrid& grid) {
  if (grid.steps < 2) throw std::invalid_argument("propagate_bloch: steps must be >= 2");
  const double dt = grid.dt();
  BlochOrbit orbit;
  orbit.times.resize(grid.steps + 1);
  orbit.points.resize(grid.steps + 1);
  orbit.times[0] = 0.0;
  orbit.points[0] = a0;

  Vec3 a = a0;
  const auto rhs = [&](double t, const Vec3& y) { return bloch_rhs(field(t).m, y); };
  for (int i = 0; i < grid.steps; ++i) {
    const double t = i * dt;
    const Vec3 k1 = rhs(t, a);
    const Vec3 k2 = rhs(t + dt / 2, a + (dt / 2) * k1);
    const Vec3 k3 = rhs(t + dt / 2, a + (dt / 2) * k2);
    const Vec3 k4 = rhs(t + dt, a + dt * k3);
    a += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!a.allFinite())
      throw NonFiniteState("propagate_bloch: non-finite Bloch vector at step " +
                           std::to_string(i + 1));
    a /= a.norm();
    orbit.times[i + 1] = (i + 1) * dt;
    orbit.points[i + 1] = a;
  }
  return orbit;
}

namespace {

double qubit_speed_sq(const Vec3& a, const Vec3& m, const char* what) {
  const double am = a.dot(m);
  const double d = m.squaredNorm() - am * am;
  const double floor = 1e-9 * m.norm();
  if (!(d > floor * floor))
    throw DegenerateSpeed(std::string(what) + ": Bloch vector aligned with the field");
  return d;
}

}  // namespace

double curvature_bloch(const Vec3& a, const Vec3& m, const Vec3& mdot) {
  const double d = qubit_speed_sq(a, m, "curvature_bloch");
  const double am = a.dot(m);
  const double amd = a.dot(mdot);
  const Vec3 mxmd = m.cross(mdot);

  const double lagrange = m.squaredNorm() * mdot.squaredNorm() -
                          m.dot(mdot) * m.dot(mdot);
  const Vec3 residual_vec = amd * m - am * mdot;
  const double term1 = 4.0 * am * am / d;
  const double term2 = (lagrange - residual_vec.squaredNorm()) / (d * d * d);
  const double term3 = 4.0 * am * a.dot(mxmd) / (d * d);
  return term1 + term2 + term3;
}

TorsionBloch torsion_bloch(const Vec3& a, const Vec3& m, const Vec3& mdot) {
  const double d = qubit_speed_sq(a, m, "torsion_bloch");
  const double am = a.dot(m);
  const double amd = a.dot(mdot);
  const double d3 = d * d * d;

  const double lagrange = m.squaredNorm() * mdot.squaredNorm() -
                          m.dot(mdot) * m.dot(mdot);
  const Vec3 residual_vec = amd * m - am * mdot;
  const double quotient1 = (lagrange - residual_vec.squaredNorm()) / d3;
  const double mixed = a.dot(m.cross(mdot));
  const double quotient2 = mixed * mixed / d3;

  TorsionBloch out;
  out.value = quotient1 - quotient2;
  out.residual = std::abs(out.value);
  return out;
}

SpeedAccel speed_accel_bloch(const Vec3& a, const Vec3& m, const Vec3& mdot) {
  const double d = qubit_speed_sq(a, m, "speed_accel_bloch");
  SpeedAccel out;
  out.v = std::sqrt(d);
  // d/dt (a.m) = a.mdot because da/dt = 2 m x a is orthogonal to m.
  out.v_dot = (m.dot(mdot) - a.dot(m) * a.dot(mdot)) / out.v;
  return out;
}

HamiltonianSchedule field_to_schedule(const FieldSchedule& field,
                                      const std::string& label, double time_scale) {
  return HamiltonianSchedule(
      2, [field](double t) { return dot_sigma(field(t).m); },
      [field](double t) { return dot_sigma(field(t).mdot); }, label, time_scale);
}

}  // namespace qfrenet
