#pragma once

#include <set>
#include <string>

#include "qfrenet/qubit.hpp"
#include "qfrenet/schedule.hpp"
#include "qfrenet/types.hpp"

namespace qfrenet {

// Sinusoidally driven two-level problem
//   H(t) = (omega0/2) sigma_z + Omega0 [cos(omega t) sigma_x + sin(omega t) sigma_y].
struct RabiParams {
  double omega0 = 1.0;  // atomic resonance frequency
  double Omega0 = 0.1;  // Rabi frequency (drive strength)
  double omega = 0.9;   // drive frequency

  double detuning() const { return omega0 - omega; }
  // Effective rotation rate in the rotating frame.
  double Omega() const {
    const double half_delta = detuning() / 2.0;
    return std::sqrt(Omega0 * Omega0 + half_delta * half_delta);
  }
  // |m(t)|, constant in time.
  double Omega_H() const {
    return std::sqrt(Omega0 * Omega0 + omega0 * omega0 / 4.0);
  }
  double delta_ratio() const { return omega / (2.0 * Omega()); }
  // Rotating-frame axis (Omega0, 0, Delta/2) / Omega; z for the free atom.
  Vec3 rotating_axis() const;
};

// m(t) = Omega0 cos(omega t) x + Omega0 sin(omega t) y + (omega0/2) z, with
// the analytic derivative. |m| is constant and m . mdot = 0.
FieldSample rabi_field(const RabiParams& p, double t);

FieldSchedule rabi_field_schedule(const RabiParams& p);

// Matrix schedule for the lab-frame Hamiltonian.
HamiltonianSchedule rabi_schedule(const RabiParams& p, double time_scale = 1.0);

// H_rot = Omega0 sigma_x + (Delta/2) sigma_z; constant, eigenvalues +-Omega.
CMatrix rabi_hamiltonian_rotating(const RabiParams& p);

// U_RF(t) = exp(-i (omega/2) t sigma_z).
CMatrix rotating_frame_unitary(const RabiParams& p, double t);

// Exact lab-frame propagator
//   U(t) = e^{-i (omega/2) t sigma_z} [cos(Omega t) I - i sin(Omega t) n.sigma].
// Falls back to U_RF alone when Omega = 0 (free atom at resonance).
CMatrix rabi_propagator(const RabiParams& p, double t);

// Rotation angle alpha in [0, 2 pi) about a unit axis; alpha = 0 carries the
// conventional z axis. Reconstructs SU(2) as cos(a/2) I - i sin(a/2) n.sigma.
struct AxisAngle {
  double angle = 0.0;
  Vec3 axis{0.0, 0.0, 1.0};
  CMatrix su2() const;
};

// Single rotation equivalent to applying r2 first, then r1:
// U(out) = U(r1) U(r2), entrywise in SU(2). The angle comes from
// atan2(|v12|, c12), so no squaring sign ambiguity arises.
AxisAngle compose_rotations(const AxisAngle& r1, const AxisAngle& r2);

// (alpha(t), n(t)) with U(t) = e^{-i alpha/2 n.sigma}, via composition of the
// frame rotation (omega t about z) with the rotating-frame rotation
// (2 Omega t about the rotating axis).
AxisAngle rabi_axis_angle(const RabiParams& p, double t);

// Exact Bloch orbit a(t) = (n.a0) n + sin(alpha) (n x a0) + cos(alpha) (n x a0) x n.
Vec3 bloch_exact(const RabiParams& p, const Vec3& a0, double t);

// Driving/detuning regime labels; set-valued since several can apply.
std::set<std::string> classify_regime(const RabiParams& p);

}  // namespace qfrenet
