#include "qfrenet/validate.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>

#include "qfrenet/frenet.hpp"
#include "qfrenet/pauli.hpp"
#include "qfrenet/rabi.hpp"
#include "qfrenet/scenario.hpp"

namespace qfrenet {

CMatrix random_hermitian(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g(0.0, 1.0);
  CMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = cx(g(rng), g(rng));
  CMatrix h = (a + a.adjoint()) / 2.0;
  return h / std::max(1.0, h.norm());  // keep operator norms of order one
}

CVector random_state(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g(0.0, 1.0);
  CVector v(n);
  for (int i = 0; i < n; ++i) v(i) = cx(g(rng), g(rng));
  return v / v.norm();
}

Vec3 random_unit3(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Vec3 v(g(rng), g(rng), g(rng));
  while (v.norm() < 1e-6) v = Vec3(g(rng), g(rng), g(rng));
  return v / v.norm();
}

Vec3 random_vec3(std::mt19937_64& rng, double scale) {
  std::normal_distribution<double> g(0.0, scale);
  return Vec3(g(rng), g(rng), g(rng));
}

namespace {

struct Suite {
  std::vector<CheckResult> results;
  void check(const std::string& name, bool ok, double measured,
             const std::string& bound) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "measured %.3e, bound %s", measured, bound.c_str());
    results.push_back({name, ok, buf});
  }
  void run(const std::string& name, const std::function<void(Suite&)>& body) {
    try {
      body(*this);
    } catch (const std::exception& e) {
      results.push_back({name, false, std::string("exception: ") + e.what()});
    }
  }
};

// A smooth random qubit field schedule: constant + rotating component.
FieldSchedule random_qubit_field(std::mt19937_64& rng) {
  const Vec3 base = random_vec3(rng, 0.4);
  const Vec3 axis1 = random_unit3(rng), axis2 = random_unit3(rng);
  std::uniform_real_distribution<double> freq(0.3, 1.5);
  const double w1 = freq(rng), w2 = freq(rng);
  std::uniform_real_distribution<double> amp(0.2, 0.8);
  const double a1 = amp(rng), a2 = amp(rng);
  return [=](double t) {
    FieldSample f;
    f.m = base + a1 * std::cos(w1 * t) * axis1 + a2 * std::sin(w2 * t) * axis2;
    f.mdot = -a1 * w1 * std::sin(w1 * t) * axis1 + a2 * w2 * std::cos(w2 * t) * axis2;
    return f;
  };
}

}  // namespace

std::vector<CheckResult> run_invariant_suite(std::uint64_t seed, int scale) {
  Suite suite;
  const int draws = 200 * scale;

  suite.run("hermitian expectation is real", [&](Suite& s) {
    std::mt19937_64 rng(seed + 1);
    double worst = 0.0;
    for (int i = 0; i < draws; ++i) {
      for (int n : {2, 3, 4}) {
        const CMatrix h = random_hermitian(rng, n);
        const CVector psi = random_state(rng, n);
        const cx val = expectation_complex(h, psi);
        worst = std::max(worst, std::abs(val.imag()));
      }
    }
    s.check("hermitian expectation is real", worst < 1e-12, worst, "1e-12");
  });

  suite.run("commutator/anticommutator purity", [&](Suite& s) {
    std::mt19937_64 rng(seed + 2);
    double worst = 0.0;
    for (int i = 0; i < 2 * draws; ++i) {  // >= 1000 draws across N = 2, 3, 4
      for (int n : {2, 3, 4}) {
        const CMatrix a = random_hermitian(rng, n);
        const CMatrix b = random_hermitian(rng, n);
        const CVector psi = random_state(rng, n);
        worst = std::max(worst, std::abs(expectation_complex(commutator(a, b), psi).real()));
        worst = std::max(worst, std::abs(expectation_complex(anticommutator(a, b), psi).imag()));
      }
    }
    s.check("commutator/anticommutator purity", worst < 1e-12, worst, "1e-12");
  });

  suite.run("delta operator has zero mean", [&](Suite& s) {
    std::mt19937_64 rng(seed + 3);
    double worst = 0.0;
    for (int i = 0; i < draws; ++i) {
      const int n = 2 + static_cast<int>(rng() % 3);
      const CMatrix h = random_hermitian(rng, n);
      const CVector psi = random_state(rng, n);
      worst = std::max(worst, std::abs(expectation(delta_operator(h, psi), psi)));
    }
    s.check("delta operator has zero mean", worst < 1e-12, worst, "1e-12");
  });

  suite.run("moment inequality alpha4 >= 1 + alpha3^2", [&](Suite& s) {
    std::mt19937_64 rng(seed + 4);
    double worst = 0.0;  // most negative slack
    for (int i = 0; i < draws; ++i) {
      const int n = 2 + static_cast<int>(rng() % 3);
      const CMatrix h = random_hermitian(rng, n);
      const CVector psi = random_state(rng, n);
      MomentSet m;
      try {
        m = central_moments(h, psi, 4);
      } catch (const DegenerateDispersion&) {
        continue;
      }
      if (m.m2 <= 1e-8) continue;
      worst = std::min(worst, m.kurtosis - 1.0 - m.skewness * m.skewness);
    }
    s.check("moment inequality alpha4 >= 1 + alpha3^2", worst > -1e-10, worst, "> -1e-10");
  });

  suite.run("generalized variance is nonnegative", [&](Suite& s) {
    std::mt19937_64 rng(seed + 5);
    double worst = 0.0;
    for (int i = 0; i < draws; ++i) {
      const int n = 2 + static_cast<int>(rng() % 3);
      const CMatrix h = random_hermitian(rng, n);
      const CMatrix hd = random_hermitian(rng, n);
      const CVector psi = random_state(rng, n);
      worst = std::min(worst, generalized_variance(h, hd, psi).determinant);
    }
    s.check("generalized variance is nonnegative", worst > -1e-10, worst, "> -1e-10");
  });

  suite.run("midpoint-exponential unitarity", [&](Suite& s) {
    RabiParams p{1.0, 0.4, 0.8};
    const auto schedule = rabi_schedule(p, 10.0);
    const auto traj = propagate(schedule, state_from_angles(2.0, 0.3), {10.0, 600 * scale},
                                PropagationMethod::midpoint_exponential);
    double worst = 0.0;
    for (const CVector& psi : traj.raw_states)
      worst = std::max(worst, std::abs(psi.norm() - 1.0));
    s.check("midpoint-exponential unitarity", worst < 1e-10, worst, "1e-10");
  });

  suite.run("propagator convergence order", [&](Suite& s) {
    RabiParams p{1.0, 0.5, 0.9};
    const CVector psi0 = state_from_angles(std::numbers::pi, 0.0);
    const double t_max = 6.0;
    const auto schedule = rabi_schedule(p, t_max);
    const CVector exact = rabi_propagator(p, t_max) * psi0;
    // state-vector distance: the overlap fidelity is phase-blind and already
    // at roundoff for these step counts
    const auto err = [&](int steps, PropagationMethod m) {
      const auto traj = propagate(schedule, psi0, {t_max, steps}, m);
      return (traj.raw_states.back() - exact).norm();
    };
    const double rk_ratio = err(400, PropagationMethod::rk4) / err(800, PropagationMethod::rk4);
    const double mp_ratio = err(400, PropagationMethod::midpoint_exponential) /
                            err(800, PropagationMethod::midpoint_exponential);
    const double rk_order = std::log2(rk_ratio), mp_order = std::log2(mp_ratio);
    s.check("rk4 convergence order >= 3.5", rk_order >= 3.5, rk_order, ">= 3.5");
    s.check("midpoint convergence order >= 1.8", mp_order >= 1.8, mp_order, ">= 1.8");
  });

  suite.run("parallel transport residual", [&](Suite& s) {
    RabiParams p{1.0, 0.1, 0.9};
    const auto schedule = rabi_schedule(p, 5.0);
    const auto traj = propagate(schedule, state_from_angles(std::numbers::pi, 0.0),
                                {5.0, 5000}, PropagationMethod::rk4);
    double worst = parallel_transport_residual(traj);
    s.check("parallel transport residual < 1e-6 v", worst < 1e-6, worst, "1e-6");
  });

  suite.run("transported <dh'> vanishes", [&](Suite& s) {
    std::mt19937_64 rng(seed + 6);
    double worst = 0.0;
    for (int i = 0; i < draws / 4; ++i) {
      const auto field = random_qubit_field(rng);
      const auto schedule = field_to_schedule(field, "draw", 1.0);
      const CVector psi = random_state(rng, 2);
      const double t = 0.37;
      const CMatrix h = schedule.evaluate(t);
      const CMatrix dh = delta_operator(h, psi);
      const CVector u = dh * psi;
      const double v = u.norm();
      if (v < 0.05) continue;
      const CMatrix dhd = delta_operator(schedule.derivative(t), psi);
      const double vdot = u.dot(dhd * psi).real() / v;
      const CMatrix dhp = dhd / (v * v) - dh * (vdot / (v * v * v));
      worst = std::max(worst, std::abs(expectation(dhp, psi)));
    }
    s.check("transported <dh'> vanishes", worst < 1e-8, worst, "1e-8");
  });

  suite.run("curvature/torsion positivity and ordering", [&](Suite& s) {
    std::mt19937_64 rng(seed + 7);
    double worst_neg = 0.0, worst_order = 0.0;
    for (int i = 0; i < 5 * draws; ++i) {
      const int n = (i % 2 == 0) ? 2 : 3;
      const CMatrix h = random_hermitian(rng, n);
      const CMatrix hd = random_hermitian(rng, n);
      const CVector psi = random_state(rng, n);
      FrenetPoint pt;
      try {
        pt = frenet_expectation(h, hd, psi);
      } catch (const DegenerateSpeed&) {
        continue;
      }
      worst_neg = std::min({worst_neg, pt.kappa2, pt.tau2});
      worst_order = std::max(worst_order, pt.tau2 - pt.kappa2);
    }
    s.check("kappa2, tau2 >= -1e-10", worst_neg > -1e-10, worst_neg, "> -1e-10");
    s.check("tau2 <= kappa2 + 1e-8", worst_order < 1e-8, worst_order, "< 1e-8");
  });

  suite.run("stationary limit collapse", [&](Suite& s) {
    std::mt19937_64 rng(seed + 8);
    double worst = 0.0;
    for (int i = 0; i < draws; ++i) {
      const int n = 2 + static_cast<int>(rng() % 3);
      const CMatrix h = random_hermitian(rng, n);
      const CMatrix zero = CMatrix::Zero(n, n);
      const CVector psi = random_state(rng, n);
      MomentSet m;
      FrenetPoint pt;
      try {
        m = central_moments(h, psi, 4);
        pt = frenet_expectation(h, zero, psi);
      } catch (const std::domain_error&) {
        continue;
      }
      worst = std::max(worst, std::abs(pt.kappa2 - (m.kurtosis - 1.0)));
      worst = std::max(worst,
                       std::abs(pt.tau2 - (m.kurtosis - 1.0 - m.skewness * m.skewness)));
    }
    s.check("stationary limit collapse", worst < 1e-12, worst, "1e-12");
  });

  suite.run("qubit vanishing torsion (three routes)", [&](Suite& s) {
    std::mt19937_64 rng(seed + 9);
    double worst_exp = 0.0, worst_gv = 0.0;
    for (int i = 0; i < 2 * draws; ++i) {
      const Vec3 a = random_unit3(rng);
      const Vec3 m = random_vec3(rng, 0.7);
      const Vec3 md = random_vec3(rng, 0.7);
      const double v2 = m.squaredNorm() - std::pow(a.dot(m), 2);
      if (v2 < 1e-6) continue;
      const CVector psi = state_from_bloch(a);
      const CMatrix h = dot_sigma(m), hd = dot_sigma(md);
      worst_exp = std::max(worst_exp, std::abs(torsion_expectation(h, hd, psi)));
      worst_gv = std::max(worst_gv, std::abs(torsion_generalized_variance(h, hd, psi)));
    }
    // Projector route on one propagated orbit.
    std::mt19937_64 rng2(seed + 10);
    const auto field = random_qubit_field(rng2);
    const auto schedule = field_to_schedule(field, "draw", 8.0);
    const auto traj = propagate(schedule, random_state(rng2, 2), {8.0, 3000});
    double worst_proj = 0.0;
    for (double tau2 : torsion_projector(traj, schedule))
      if (!std::isnan(tau2)) worst_proj = std::max(worst_proj, tau2);
    s.check("qubit torsion: expectation route", worst_exp < 1e-8, worst_exp, "1e-8");
    s.check("qubit torsion: generalized variance", worst_gv < 1e-10, worst_gv, "1e-10");
    s.check("qubit torsion: projector route", worst_proj < 1e-6, worst_proj, "1e-6");
  });

  suite.run("three-way curvature agreement (fixed rabi scenario)", [&](Suite& s) {
    RabiParams p{1.0, 0.1, 0.9};
    const auto schedule = rabi_schedule(p, 20.0);
    const auto field = rabi_field_schedule(p);
    const auto traj = propagate(schedule, state_from_angles(std::numbers::pi, 0.0),
                                {20.0, 4000});
    const auto kappa_proj = curvature_projector(traj, schedule);
    double gap_be = 0.0, gap_ep = 0.0;
    for (std::size_t i = 0; i < traj.size(); ++i) {
      const CMatrix h = schedule.evaluate(traj.times[i]);
      const CMatrix hd = schedule.derivative(traj.times[i]);
      const double k_e = curvature_expectation(h, hd, traj.raw_states[i]);
      const FieldSample f = field(traj.times[i]);
      const double k_b =
          curvature_bloch(bloch_from_state(traj.raw_states[i]), f.m, f.mdot);
      gap_be = std::max(gap_be, std::abs(k_b - k_e));
      if (!std::isnan(kappa_proj[i])) gap_ep = std::max(gap_ep, std::abs(k_e - kappa_proj[i]));
    }
    s.check("kappa2 bloch vs expectation", gap_be < 1e-9, gap_be, "1e-9");
    s.check("kappa2 expectation vs projector", gap_ep < 1e-4, gap_ep, "1e-4");
  });

  suite.run("qubit closed-form equivalence", [&](Suite& s) {
    std::mt19937_64 rng(seed + 11);
    double worst = 0.0;
    int kept = 0;
    while (kept < 5 * draws) {
      const Vec3 a = random_unit3(rng);
      const Vec3 m = random_vec3(rng, 0.7);
      const Vec3 md = random_vec3(rng, 0.7);
      const auto sa = [&]() -> std::optional<SpeedAccel> {
        try {
          return speed_accel_bloch(a, m, md);
        } catch (const DegenerateSpeed&) {
          return std::nullopt;
        }
      }();
      if (!sa || sa->v < 1e-3) continue;
      ++kept;
      const CVector psi = state_from_bloch(a);
      const CMatrix h = dot_sigma(m), hd = dot_sigma(md);
      const FrenetPoint pt = frenet_expectation(h, hd, psi);
      // kappa2 grows like 1/v^2 near alignment, so the agreement bound has
      // to scale with the value (a 1e7 double carries ~4e-9 per ulp).
      const double k_b = curvature_bloch(a, m, md);
      worst = std::max(worst, std::abs(k_b - pt.kappa2) / std::max(1.0, k_b));
      worst = std::max(worst, std::abs(sa->v - pt.v));
      worst = std::max(worst, std::abs(sa->v_dot - pt.v_dot));
    }
    s.check("qubit closed-form equivalence", worst < 1e-10, worst, "1e-10 (rel)");
  });

  suite.run("bloch kinematics orthogonality", [&](Suite& s) {
    std::mt19937_64 rng(seed + 12);
    double worst = 0.0;
    for (int i = 0; i < draws; ++i) {
      const Vec3 a = random_unit3(rng);
      const Vec3 m = random_vec3(rng, 1.0);
      const Vec3 rhs = bloch_rhs(m, a);
      worst = std::max({worst, std::abs(rhs.dot(m)), std::abs(rhs.dot(a))});
    }
    s.check("bloch kinematics orthogonality", worst < 1e-14, worst, "1e-14");
  });

  suite.run("bloch orbit norm conservation", [&](Suite& s) {
    std::mt19937_64 rng(seed + 13);
    const auto field = random_qubit_field(rng);
    const auto orbit = propagate_bloch(field, random_unit3(rng), {10.0, 2000});
    double worst = 0.0;
    for (const Vec3& a : orbit.points) worst = std::max(worst, std::abs(a.norm() - 1.0));
    s.check("bloch orbit norm conservation", worst < 1e-8, worst, "1e-8");
  });

  suite.run("acceleration bound", [&](Suite& s) {
    std::mt19937_64 rng(seed + 14);
    double worst = 0.0;
    for (int i = 0; i < 5 * draws; ++i) {
      const Vec3 a = random_unit3(rng);
      const Vec3 m = random_vec3(rng, 0.7);
      const Vec3 md = random_vec3(rng, 0.7);
      try {
        const SpeedAccel sa = speed_accel_bloch(a, m, md);
        const double sigma_hd_sq = md.squaredNorm() - std::pow(a.dot(md), 2);
        worst = std::max(worst, sa.v_dot * sa.v_dot - sigma_hd_sq);
      } catch (const DegenerateSpeed&) {
      }
    }
    s.check("acceleration bound vdot^2 <= sigma_Hdot^2", worst < 1e-10, worst, "< 1e-10");
  });

  suite.run("qubit torsion identity residuals", [&](Suite& s) {
    std::mt19937_64 rng(seed + 15);
    double worst_t = 0.0, worst_l = 0.0;
    for (int i = 0; i < 5 * draws; ++i) {
      const Vec3 a = random_unit3(rng);
      const Vec3 m = random_vec3(rng, 0.6);
      const Vec3 md = random_vec3(rng, 0.6);
      // conditioned: the quotients scale like 1/v^6
      const double v2 = m.squaredNorm() - std::pow(a.dot(m), 2);
      if (v2 < 0.1) continue;
      const double kappa2 = curvature_bloch(a, m, md);
      const TorsionBloch tb = torsion_bloch(a, m, md);
      worst_t = std::max(worst_t, tb.residual / std::max(1.0, kappa2));
      const double lagrange = m.squaredNorm() * md.squaredNorm() -
                              std::pow(m.dot(md), 2);
      worst_l = std::max(worst_l, std::abs(lagrange - m.cross(md).squaredNorm()) /
                                      std::max(1.0, lagrange));
    }
    s.check("qubit torsion closed form vanishes", worst_t < 1e-12, worst_t, "1e-12");
    s.check("lagrange identity", worst_l < 1e-12, worst_l, "1e-12");
  });

  suite.run("rabi propagator properties", [&](Suite& s) {
    std::mt19937_64 rng(seed + 16);
    std::uniform_real_distribution<double> tdist(0.0, 15.0);
    RabiParams sets[3] = {{1.0, 0.1, 0.9}, {1.0, 1.0, 0.9}, {1.0, 0.02, 4.0}};
    double worst_u = 0.0, worst_g = 0.0, worst_rf = 0.0;
    for (const RabiParams& p : sets) {
      for (int i = 0; i < draws / 4; ++i) {
        const double t = tdist(rng);
        const CMatrix u = rabi_propagator(p, t);
        worst_u = std::max(worst_u,
                           (u.adjoint() * u - identity(2)).cwiseAbs().maxCoeff());
        const CMatrix rebuilt = rabi_axis_angle(p, t).su2();
        worst_g = std::max(worst_g, (rebuilt - u).cwiseAbs().maxCoeff());
        // Rotating-frame identity: U_RF^dag H U_RF + i dU_RF^dag/dt U_RF = H_rot.
        const CMatrix urf = rotating_frame_unitary(p, t);
        const CMatrix lhs = urf.adjoint() * dot_sigma(rabi_field(p, t).m) * urf -
                            (p.omega / 2.0) * pauli_z();
        worst_rf = std::max(worst_rf,
                            (lhs - rabi_hamiltonian_rotating(p)).cwiseAbs().maxCoeff());
      }
    }
    s.check("rabi propagator unitarity", worst_u < 1e-12, worst_u, "1e-12");
    s.check("axis-angle reconstruction", worst_g < 1e-12, worst_g, "1e-12");
    s.check("rotating-frame hamiltonian identity", worst_rf < 1e-12, worst_rf, "1e-12");
  });

  suite.run("rabi schroedinger consistency", [&](Suite& s) {
    RabiParams p{1.0, 0.5, 0.9};
    const double dt = 1e-4;
    double worst = 0.0;
    for (double t : {0.3, 1.7, 4.2, 9.1}) {
      const CMatrix du =
          (rabi_propagator(p, t + dt) - rabi_propagator(p, t - dt)) / (2.0 * dt);
      const CMatrix lhs = imag_unit * du;
      const CMatrix rhs = dot_sigma(rabi_field(p, t).m) * rabi_propagator(p, t);
      worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
    }
    s.check("rabi schroedinger consistency", worst < 1e-6, worst, "1e-6");
  });

  suite.run("exact orbit properties", [&](Suite& s) {
    std::mt19937_64 rng(seed + 17);
    std::uniform_real_distribution<double> tdist(0.0, 25.0);
    RabiParams p{1.0, 0.4, 0.85};
    double worst_inv = 0.0, worst_norm = 0.0;
    for (int i = 0; i < draws; ++i) {
      const Vec3 a0 = random_unit3(rng);
      const double t = tdist(rng);
      const Vec3 at = bloch_exact(p, a0, t);
      const AxisAngle rot = rabi_axis_angle(p, t);
      worst_inv = std::max(worst_inv, std::abs(at.dot(rot.axis) - a0.dot(rot.axis)));
      worst_norm = std::max(worst_norm, std::abs(at.norm() - 1.0));
    }
    s.check("exact orbit preserves axis component", worst_inv < 1e-12, worst_inv, "1e-12");
    s.check("exact orbit unit norm", worst_norm < 1e-12, worst_norm, "1e-12");
  });

  suite.run("rotation composition worked case", [&](Suite& s) {
    AxisAngle r1{std::numbers::pi / 2.0, Vec3(0, 0, 1)};
    AxisAngle r2{std::numbers::pi / 2.0, Vec3(1, 0, 0)};
    const AxisAngle out = compose_rotations(r1, r2);
    const double gap =
        std::max(std::abs(out.angle - 2.0 * std::numbers::pi / 3.0),
                 (out.axis - Vec3(1, 1, 1).normalized()).norm());
    s.check("rotation composition worked case", gap < 1e-12, gap, "1e-12");
  });

  suite.run("statistical decomposition consistency", [&](Suite& s) {
    std::mt19937_64 rng(seed + 18);
    double worst = 0.0;
    int kept = 0;
    while (kept < draws) {
      const int n = 2 + static_cast<int>(rng() % 3);
      const CMatrix h = random_hermitian(rng, n);
      const CMatrix hd = random_hermitian(rng, n);
      const CVector psi = random_state(rng, n);
      FrenetPoint pt;
      try {
        pt = frenet_expectation(h, hd, psi);
      } catch (const DegenerateSpeed&) {
        continue;
      }
      if (pt.v < 0.2) continue;
      ++kept;
      const CurvatureDecomposition dec = curvature_statistical(h, hd, psi);
      worst = std::max(worst, std::abs(dec.kappa2() - pt.kappa2));
      worst = std::max(worst, std::abs(dec.tau2() - pt.tau2));
      if (!dec.accel_bound_holds) worst = std::max(worst, 1.0);
    }
    s.check("statistical decomposition consistency", worst < 1e-9, worst, "1e-9");
  });

  suite.run("qutrit demo torsion", [&](Suite& s) {
    ScenarioConfig cfg;
    cfg.scenario = ScenarioKind::qutrit_demo;
    cfg.params = {{"omega0", 1.0}, {"Omega0", 0.5}, {"omega", 0.9}};
    cfg.grid = {20.0, 2000};
    const ScenarioSetup setup = build_scenario(cfg);
    const auto traj = propagate(setup.schedule, setup.psi0, cfg.grid);
    const auto tau_proj = torsion_projector(traj, setup.schedule);
    double max_tau = 0.0, gap = 0.0;
    for (std::size_t i = 0; i < traj.size(); ++i) {
      if (std::isnan(tau_proj[i])) continue;
      const double tau_e =
          torsion_expectation(setup.schedule.evaluate(traj.times[i]),
                              setup.schedule.derivative(traj.times[i]),
                              traj.raw_states[i]);
      max_tau = std::max(max_tau, tau_e);
      gap = std::max(gap, std::abs(tau_e - tau_proj[i]));
    }
    s.check("qutrit torsion strictly positive", max_tau > 1e-3, max_tau, "> 1e-3");
    s.check("qutrit torsion route agreement", gap < 1e-4, gap, "1e-4");
  });

  return suite.results;
}

}  // namespace qfrenet
