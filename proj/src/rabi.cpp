#include "qfrenet/rabi.hpp"

#include <cmath>
#include <numbers>

#include "qfrenet/pauli.hpp"

namespace qfrenet {

Vec3 RabiParams::rotating_axis() const {
  const double om = Omega();
  if (om == 0.0) return Vec3(0.0, 0.0, 1.0);
  return Vec3(Omega0 / om, 0.0, detuning() / (2.0 * om));
}

FieldSample rabi_field(const RabiParams& p, double t) {
  FieldSample f;
  f.m = Vec3(p.Omega0 * std::cos(p.omega * t), p.Omega0 * std::sin(p.omega * t),
             p.omega0 / 2.0);
  f.mdot = Vec3(-p.Omega0 * p.omega * std::sin(p.omega * t),
                p.Omega0 * p.omega * std::cos(p.omega * t), 0.0);
  return f;
}

FieldSchedule rabi_field_schedule(const RabiParams& p) {
  return [p](double t) { return rabi_field(p, t); };
}

HamiltonianSchedule rabi_schedule(const RabiParams& p, double time_scale) {
  return field_to_schedule(rabi_field_schedule(p), "rabi", time_scale);
}

CMatrix rabi_hamiltonian_rotating(const RabiParams& p) {
  return p.Omega0 * pauli_x() + (p.detuning() / 2.0) * pauli_z();
}

CMatrix rotating_frame_unitary(const RabiParams& p, double t) {
  CMatrix u = CMatrix::Zero(2, 2);
  u(0, 0) = std::exp(cx(0.0, -p.omega * t / 2.0));
  u(1, 1) = std::exp(cx(0.0, p.omega * t / 2.0));
  return u;
}

CMatrix rabi_propagator(const RabiParams& p, double t) {
  const double om = p.Omega();
  if (om == 0.0) return rotating_frame_unitary(p, t);  // free atom at resonance
  const double tau = om * t;
  const CMatrix rot = std::cos(tau) * identity(2) -
                      imag_unit * std::sin(tau) * dot_sigma(p.rotating_axis());
  return rotating_frame_unitary(p, t) * rot;
}

CMatrix AxisAngle::su2() const {
  return std::cos(angle / 2.0) * identity(2) -
         imag_unit * std::sin(angle / 2.0) * dot_sigma(axis);
}

AxisAngle compose_rotations(const AxisAngle& r1, const AxisAngle& r2) {
  for (const AxisAngle* r : {&r1, &r2}) {
    if (std::abs(r->axis.norm() - 1.0) > 1e-9)
      throw std::invalid_argument("compose_rotations: axis is not unit length");
  }
  const double c1 = std::cos(r1.angle / 2.0), s1 = std::sin(r1.angle / 2.0);
  const double c2 = std::cos(r2.angle / 2.0), s2 = std::sin(r2.angle / 2.0);

  const double c12 = c1 * c2 - s1 * s2 * r1.axis.dot(r2.axis);
  const Vec3 v12 = s1 * c2 * r1.axis + c1 * s2 * r2.axis -
                   s1 * s2 * r2.axis.cross(r1.axis);

  AxisAngle out;
  const double norm = v12.norm();
  if (norm < 1e-14) {
    out.angle = 0.0;  // identity rotation (up to SU(2) sign): conventional z axis
    out.axis = Vec3(0.0, 0.0, 1.0);
    return out;
  }
  out.angle = 2.0 * std::atan2(norm, c12);
  if (out.angle >= 2.0 * std::numbers::pi) out.angle -= 2.0 * std::numbers::pi;
  out.axis = v12 / norm;
  return out;
}

AxisAngle rabi_axis_angle(const RabiParams& p, double t) {
  AxisAngle frame;
  frame.angle = p.omega * t;
  frame.axis = Vec3(0.0, 0.0, 1.0);
  AxisAngle rotating;
  rotating.angle = 2.0 * p.Omega() * t;
  rotating.axis = p.rotating_axis();
  return compose_rotations(frame, rotating);
}

Vec3 bloch_exact(const RabiParams& p, const Vec3& a0, double t) {
  if (std::abs(a0.norm() - 1.0) > 1e-9)
    throw std::invalid_argument("bloch_exact: a0 is not a unit vector");
  const AxisAngle rot = rabi_axis_angle(p, t);
  const Vec3& n = rot.axis;
  const Vec3 nxa = n.cross(a0);
  return n.dot(a0) * n + std::sin(rot.angle) * nxa +
         std::cos(rot.angle) * nxa.cross(n);
}

std::set<std::string> classify_regime(const RabiParams& p) {
  std::set<std::string> labels;
  const double abs_delta = std::abs(p.detuning());
  // Guard band so parameters sitting exactly on a threshold (up to roundoff
  // in omega0 - omega) classify deterministically: boundary cases count as
  // near resonance but do count as weak/strong driving.
  constexpr double g = 1e-9;
  if (abs_delta < 0.1 * p.Omega0 * (1.0 - g))
    labels.insert("on_resonance");
  else if (abs_delta > 10.0 * p.Omega0 * (1.0 + g))
    labels.insert("off_resonance");
  else
    labels.insert("near_resonance");
  if (p.Omega0 >= 10.0 * p.omega0 * (1.0 - g)) labels.insert("strong_driving");
  if (p.Omega0 <= 0.1 * p.omega0 * (1.0 + g)) labels.insert("weak_driving");
  return labels;
}

}  // namespace qfrenet
