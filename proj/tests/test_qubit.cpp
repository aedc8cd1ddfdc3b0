#include <doctest.h>

#include <numbers>
#include <random>

#include "qfrenet/frenet.hpp"
#include "qfrenet/pauli.hpp"
#include "qfrenet/qubit.hpp"
#include "qfrenet/rabi.hpp"
#include "qfrenet/validate.hpp"
#include "oracles.hpp"

using namespace qfrenet;

TEST_CASE("bloch/state round trips") {
  CHECK((bloch_from_state(basis_state(2, 0)) - Vec3(0, 0, 1)).norm() < 1e-14);
  const CVector plus = state_from_angles(std::numbers::pi / 2.0, 0.0);
  CHECK((bloch_from_state(plus) - Vec3(1, 0, 0)).norm() < 1e-14);

  // (theta, phi) = (3 pi / 4, 0) -> (sqrt2/2, 0, -sqrt2/2).
  const Vec3 a = bloch_from_state(state_from_angles(3.0 * std::numbers::pi / 4.0, 0.0));
  CHECK((a - Vec3(std::sqrt(2.0) / 2.0, 0.0, -std::sqrt(2.0) / 2.0)).norm() < 1e-12);

  std::mt19937_64 rng(41);
  for (int i = 0; i < 300; ++i) {
    const Vec3 v = random_unit3(rng);
    CHECK((bloch_from_state(state_from_bloch(v)) - v).norm() < 1e-12);
  }

  // Phase convention: first nonzero amplitude real positive.
  const CVector down = state_from_bloch(Vec3(0, 0, -1));
  CHECK(down(0) == cx(0.0, 0.0));
  CHECK(down(1) == cx(1.0, 0.0));
}

TEST_CASE("bloch_rhs") {
  const double omega0 = 0.77;
  CHECK((bloch_rhs(Vec3(0, 0, omega0 / 2.0), Vec3(1, 0, 0)) - Vec3(0, omega0, 0)).norm() <
        1e-14);
  CHECK(bloch_rhs(Vec3(0.3, 0.2, 0.1), Vec3(0.3, 0.2, 0.1).normalized()).norm() < 1e-14);

  // Matches i <psi| [H, sigma] |psi> evaluated with matrices.
  std::mt19937_64 rng(42);
  for (int i = 0; i < 200; ++i) {
    const Vec3 a = random_unit3(rng);
    const Vec3 m = random_vec3(rng);
    const CVector psi = state_from_bloch(a);
    const CMatrix h = dot_sigma(m);
    const CMatrix sig[3] = {pauli_x(), pauli_y(), pauli_z()};
    Vec3 adot_matrix;
    for (int k = 0; k < 3; ++k)
      adot_matrix(k) = (imag_unit * expectation_complex(commutator(h, sig[k]), psi)).real();
    CHECK((bloch_rhs(m, a) - adot_matrix).norm() < 1e-12);
  }
}

TEST_CASE("propagate_bloch") {
  SUBCASE("constant field precession") {
    const FieldSchedule field = [](double) {
      return FieldSample{Vec3(0, 0, 0.5), Vec3(0, 0, 0)};
    };
    const BlochOrbit orbit = propagate_bloch(field, Vec3(1, 0, 0), {6.0, 3000});
    for (std::size_t i = 0; i < orbit.points.size(); i += 250) {
      const double t = orbit.times[i];
      CHECK((orbit.points[i] - Vec3(std::cos(t), std::sin(t), 0.0)).norm() < 1e-8);
    }
  }

  SUBCASE("initial vector along the field stays put") {
    const Vec3 m(0.2, -0.4, 0.6);
    const FieldSchedule field = [m](double) { return FieldSample{m, Vec3(0, 0, 0)}; };
    const BlochOrbit orbit = propagate_bloch(field, m.normalized(), {5.0, 500});
    CHECK((orbit.points.back() - m.normalized()).norm() < 1e-12);
  }

  SUBCASE("matches the exact Rabi orbit") {
    RabiParams p{1.0, 0.1, 0.9};
    const BlochOrbit orbit =
        propagate_bloch(rabi_field_schedule(p), Vec3(0, 0, -1), {20.0, 20000});
    for (std::size_t i = 0; i < orbit.points.size(); i += 777) {
      const Vec3 exact = bloch_exact(p, Vec3(0, 0, -1), orbit.times[i]);
      CHECK((orbit.points[i] - exact).norm() < 1e-6);
    }
  }

  SUBCASE("matches the state-vector propagation") {
    RabiParams p{1.0, 0.4, 0.8};
    const double t_max = 10.0;
    const auto schedule = rabi_schedule(p, t_max);
    const CVector psi0 = state_from_angles(2.0, 0.6);
    const Trajectory traj = propagate(schedule, psi0, {t_max, 10000});
    const BlochOrbit orbit =
        propagate_bloch(rabi_field_schedule(p), bloch_from_state(psi0), {t_max, 10000});
    for (std::size_t i = 0; i < traj.size(); i += 999)
      CHECK((bloch_from_state(traj.raw_states[i]) - orbit.points[i]).norm() < 1e-8);
  }

  SUBCASE("norm stays unit along the orbit") {
    std::mt19937_64 rng(43);
    RabiParams p{1.0, 1.0, 0.9};
    const BlochOrbit orbit =
        propagate_bloch(rabi_field_schedule(p), random_unit3(rng), {30.0, 3000});
    for (const Vec3& a : orbit.points) CHECK(std::abs(a.norm() - 1.0) < 1e-8);
  }
}

TEST_CASE("curvature_bloch") {
  SUBCASE("stationary geodesic") {
    const Vec3 m(0, 0, 0.7);
    const Vec3 a(1, 0, 0);  // a.m = 0
    CHECK(std::abs(curvature_bloch(a, m, Vec3(0, 0, 0))) < 1e-14);
  }

  SUBCASE("stationary tilted state: 4 cos^2 / sin^2") {
    const double theta = std::numbers::pi / 3.0;
    const Vec3 m(0, 0, 1.0);
    const Vec3 a(std::sin(theta), 0.0, std::cos(theta));
    CHECK(curvature_bloch(a, m, Vec3(0, 0, 0)) ==
          doctest::Approx(4.0 / 3.0).epsilon(1e-12));
  }

  SUBCASE("matches the matrix route on Rabi data") {
    RabiParams p{1.0, 1.0, 0.9};
    const double t = 1.5;
    const Vec3 a = bloch_exact(p, Vec3(0, 0, -1), t);
    const FieldSample f = rabi_field(p, t);
    const double k_b = curvature_bloch(a, f.m, f.mdot);
    const double k_e =
        curvature_expectation(dot_sigma(f.m), dot_sigma(f.mdot), state_from_bloch(a));
    CHECK(std::abs(k_b - k_e) < 1e-10);
  }

  SUBCASE("equivalence on random draws") {
    std::mt19937_64 rng(44);
    int kept = 0;
    while (kept < 1000) {
      const Vec3 a = random_unit3(rng);
      const Vec3 m = random_vec3(rng, 0.7);
      const Vec3 md = random_vec3(rng, 0.7);
      SpeedAccel sa;
      try {
        sa = speed_accel_bloch(a, m, md);
      } catch (const DegenerateSpeed&) {
        continue;
      }
      if (sa.v <= 1e-3) continue;
      ++kept;
      const double k_b = curvature_bloch(a, m, md);
      const double k_e =
          curvature_expectation(dot_sigma(m), dot_sigma(md), state_from_bloch(a));
      CHECK(std::abs(k_b - k_e) < 1e-10 * std::max(1.0, k_b));
    }
  }

  SUBCASE("aligned Bloch vector throws") {
    // Axis-aligned so the alignment survives floating point exactly.
    CHECK_THROWS_AS(curvature_bloch(Vec3(0, 0, 1), Vec3(0, 0, 0.3), Vec3(0, 1, 0)),
                    DegenerateSpeed);
  }
}

TEST_CASE("torsion_bloch") {
  std::mt19937_64 rng(45);

  SUBCASE("vanishes within cancellation residue") {
    // Conditioned draws: the pre-cancellation quotients scale like
    // |m|^2 |mdot|^2 / v^6, so their roundoff exceeds the bound for tiny v.
    for (int i = 0; i < 1000; ++i) {
      const Vec3 a = random_unit3(rng);
      const Vec3 m = random_vec3(rng, 0.6);
      const Vec3 md = random_vec3(rng, 0.6);
      if (m.squaredNorm() - std::pow(a.dot(m), 2) < 0.1) continue;
      const double kappa2 = curvature_bloch(a, m, md);
      const TorsionBloch tb = torsion_bloch(a, m, md);
      CHECK(tb.residual < 1e-12 * std::max(1.0, kappa2));
    }
  }

  SUBCASE("collinear m and mdot zero both quotients") {
    const Vec3 m(0.2, 0.5, -0.3);
    const Vec3 a = Vec3(1.0, 0.0, 0.2).normalized();
    const Vec3 md = 3.0 * m;
    const TorsionBloch tb = torsion_bloch(a, m, md);
    CHECK(tb.residual < 1e-14);
    // Both quotient pieces vanish individually for mdot || m: the cross
    // product is zero and (a.mdot)m - (a.m)mdot is zero.
    CHECK(m.cross(md).norm() < 1e-15);
    CHECK((a.dot(md) * m - a.dot(m) * md).norm() < 1e-14);
  }

  SUBCASE("lagrange identity on random draws") {
    for (int i = 0; i < 500; ++i) {
      const Vec3 m = random_vec3(rng);
      const Vec3 md = random_vec3(rng);
      const double lhs = m.squaredNorm() * md.squaredNorm() - std::pow(m.dot(md), 2);
      const double rhs = m.cross(md).squaredNorm();
      CHECK(std::abs(lhs - rhs) < 1e-12 * std::max(1.0, std::abs(lhs)));
    }
  }

  SUBCASE("vector identity behind the cancellation") {
    // [m^2 mdot^2 - (m.mdot)^2] - [a.(m x mdot)]^2 = [(a.mdot)m - (a.m)mdot]^2
    for (int i = 0; i < 500; ++i) {
      const Vec3 a = random_unit3(rng);
      const Vec3 m = random_vec3(rng);
      const Vec3 md = random_vec3(rng);
      const double lagrange = m.squaredNorm() * md.squaredNorm() - std::pow(m.dot(md), 2);
      const double mixed_sq = std::pow(a.dot(m.cross(md)), 2);
      const double rhs = (a.dot(md) * m - a.dot(m) * md).squaredNorm();
      CHECK(std::abs(lagrange - mixed_sq - rhs) < 1e-12 * std::max(1.0, lagrange));
    }
  }
}

TEST_CASE("speed_accel_bloch") {
  SUBCASE("perpendicular stationary case") {
    const Vec3 m(0, 0, 0.8);
    const SpeedAccel sa = speed_accel_bloch(Vec3(1, 0, 0), m, Vec3(0, 0, 0));
    CHECK(sa.v == doctest::Approx(0.8).epsilon(1e-14));
    CHECK(sa.v_dot == 0.0);
  }

  SUBCASE("rabi field: m.mdot = 0 so vdot = -(a.m)(a.mdot)/v") {
    RabiParams p{1.0, 0.5, 0.8};
    std::mt19937_64 rng(46);
    for (int i = 0; i < 100; ++i) {
      const double t = 0.1 * i;
      const FieldSample f = rabi_field(p, t);
      CHECK(std::abs(f.m.dot(f.mdot)) < 1e-14);
      CHECK(f.m.norm() == doctest::Approx(p.Omega_H()).epsilon(1e-13));
      const Vec3 a = random_unit3(rng);
      SpeedAccel sa;
      try {
        sa = speed_accel_bloch(a, f.m, f.mdot);
      } catch (const DegenerateSpeed&) {
        continue;
      }
      CHECK(sa.v_dot == doctest::Approx(-a.dot(f.m) * a.dot(f.mdot) / sa.v).epsilon(1e-12));
    }
  }

  SUBCASE("vdot matches a finite difference along a propagated orbit") {
    RabiParams p{1.0, 0.3, 0.9};
    const auto field = rabi_field_schedule(p);
    const BlochOrbit orbit = propagate_bloch(field, Vec3(0, 0, -1), {6.0, 6000});
    const double dt = orbit.times[1] - orbit.times[0];
    for (std::size_t i = 1; i + 1 < orbit.points.size(); i += 307) {
      const auto v_at = [&](std::size_t j) {
        const FieldSample f = field(orbit.times[j]);
        return speed_accel_bloch(orbit.points[j], f.m, f.mdot).v;
      };
      const double fd = (v_at(i + 1) - v_at(i - 1)) / (2.0 * dt);
      const FieldSample f = field(orbit.times[i]);
      const double analytic = speed_accel_bloch(orbit.points[i], f.m, f.mdot).v_dot;
      CHECK(std::abs(analytic - fd) < 1e-4 * std::max(1.0, std::abs(analytic)));
    }
  }
}
