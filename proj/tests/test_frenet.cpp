#include <doctest.h>

#include <numbers>
#include <random>

#include "qfrenet/frenet.hpp"
#include "qfrenet/pauli.hpp"
#include "qfrenet/qubit.hpp"
#include "qfrenet/rabi.hpp"
#include "qfrenet/scenario.hpp"
#include "qfrenet/validate.hpp"
#include "oracles.hpp"

using namespace qfrenet;

namespace {

HamiltonianSchedule stationary(const CMatrix& h, double time_scale = 1.0) {
  const int n = static_cast<int>(h.rows());
  return HamiltonianSchedule(
      n, [h](double) { return h; },
      [n](double) { return CMatrix(CMatrix::Zero(n, n)); }, "stationary", time_scale);
}

}  // namespace

TEST_CASE("curvature_expectation reduces to alpha4 - 1 for stationary H") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const CMatrix h = random_hermitian(rng, n);
    const CMatrix zero = CMatrix::Zero(n, n);
    const CVector psi = random_state(rng, n);
    MomentSet m;
    double kappa2, tau2;
    try {
      m = central_moments(h, psi, 4);
      kappa2 = curvature_expectation(h, zero, psi);
      tau2 = torsion_expectation(h, zero, psi);
    } catch (const std::domain_error&) {
      continue;
    }
    CHECK(std::abs(kappa2 - (m.kurtosis - 1.0)) < 1e-12);
    CHECK(std::abs(tau2 - (m.kurtosis - 1.0 - m.skewness * m.skewness)) < 1e-12);
  }
}

TEST_CASE("stationary qubit geodesic has zero curvature") {
  // <H> = 0 and Hdot = 0: every term vanishes.
  const CVector plus = state_from_angles(std::numbers::pi / 2.0, 0.0);
  const CMatrix h = 0.5 * pauli_z();
  const CMatrix zero = CMatrix::Zero(2, 2);
  CHECK(std::abs(curvature_expectation(h, zero, plus)) < 1e-12);
}

TEST_CASE("curvature matches the qubit closed form on a Rabi state") {
  RabiParams p{1.0, 0.1, 0.9};
  const double t = 0.8;
  const Vec3 a = bloch_exact(p, Vec3(0, 0, -1), t);
  const FieldSample f = rabi_field(p, t);
  const CVector psi = state_from_bloch(a);
  const double k_matrix = curvature_expectation(dot_sigma(f.m), dot_sigma(f.mdot), psi);
  const double k_bloch = curvature_bloch(a, f.m, f.mdot);
  CHECK(std::abs(k_matrix - k_bloch) < 1e-10);
}

TEST_CASE("torsion_expectation vanishes for qubits") {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 500; ++i) {
    const Vec3 a = random_unit3(rng);
    const Vec3 m = random_vec3(rng, 0.7);
    const Vec3 md = random_vec3(rng, 0.7);
    if (m.squaredNorm() - std::pow(a.dot(m), 2) < 1e-6) continue;
    const double tau2 =
        torsion_expectation(dot_sigma(m), dot_sigma(md), state_from_bloch(a));
    CHECK(std::abs(tau2) < 1e-8);
  }
}

TEST_CASE("torsion routes agree on random three-level draws") {
  // Expectation route against the discretized projector route along a smooth
  // three-level schedule.
  std::mt19937_64 rng(33);
  const CMatrix h0 = random_hermitian(rng, 3);
  const CMatrix h1 = random_hermitian(rng, 3);
  const CMatrix h2 = random_hermitian(rng, 3);
  auto h = [=](double t) -> CMatrix {
    return h0 + std::cos(0.9 * t) * h1 + std::sin(0.7 * t) * h2;
  };
  auto hdot = [=](double t) -> CMatrix {
    return -0.9 * std::sin(0.9 * t) * h1 + 0.7 * std::cos(0.7 * t) * h2;
  };
  const HamiltonianSchedule schedule(3, h, hdot, "smooth3", 6.0);
  const CVector psi0 = random_state(rng, 3);
  const Trajectory traj = propagate(schedule, psi0, {6.0, 6000});
  const auto kappa_proj = curvature_projector(traj, schedule);
  const auto tau_proj = torsion_projector(traj, schedule);
  double max_tau = 0.0;
  for (std::size_t i = 0; i < traj.size(); i += 23) {
    if (std::isnan(tau_proj[i])) continue;
    const FrenetPoint pt = frenet_expectation(schedule.evaluate(traj.times[i]),
                                              schedule.derivative(traj.times[i]),
                                              traj.raw_states[i]);
    CHECK(std::abs(pt.tau2 - tau_proj[i]) < 1e-4);
    CHECK(std::abs(pt.kappa2 - kappa_proj[i]) < 1e-4);
    max_tau = std::max(max_tau, pt.tau2);
  }
  CHECK(max_tau > 1e-3);  // three-level torsion is generically nonzero
}

TEST_CASE("projector route on a stationary qubit") {
  SUBCASE("geodesic start gives zero curvature") {
    const CMatrix h = 0.5 * pauli_z();
    const auto schedule = stationary(h, 6.0);
    const CVector psi0 = state_from_angles(std::numbers::pi / 2.0, 0.0);
    const Trajectory traj = propagate(schedule, psi0, {6.0, 2000});
    for (double k2 : curvature_projector(traj, schedule))
      if (!std::isnan(k2)) CHECK(std::abs(k2) < 1e-6);
  }

  SUBCASE("polar angle theta gives 4 cos^2 / sin^2") {
    const double theta = std::numbers::pi / 3.0;
    const CMatrix h = 0.5 * pauli_z();  // unit field direction z
    const auto schedule = stationary(h, 6.0);
    const Trajectory traj = propagate(schedule, state_from_angles(theta, 0.0), {6.0, 4000});
    const double expected =
        4.0 * std::pow(std::cos(theta), 2) / std::pow(std::sin(theta), 2);
    CHECK(expected == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
    const auto kappa = curvature_projector(traj, schedule);
    for (std::size_t i = 3; i + 3 < traj.size(); i += 101)
      CHECK(std::abs(kappa[i] - expected) < 1e-5);
  }

  SUBCASE("qubit projector torsion is discretization residue only") {
    RabiParams p{1.0, 0.5, 0.9};
    const auto schedule = rabi_schedule(p, 8.0);
    const Trajectory traj = propagate(schedule, state_from_angles(2.2, 0.4), {8.0, 4000});
    for (double tau2 : torsion_projector(traj, schedule))
      if (!std::isnan(tau2)) CHECK(tau2 < 1e-6);
  }
}

TEST_CASE("stationary 3-level projector torsion matches the moment form") {
  std::mt19937_64 rng(41);
  const CMatrix h = random_hermitian(rng, 3);
  const auto schedule = stationary(h, 6.0);
  const CVector psi0 = random_state(rng, 3);
  const MomentSet m = central_moments(h, psi0, 4);
  // <H^k> are conserved under stationary evolution, so the value is constant.
  const double expected = m.kurtosis - 1.0 - m.skewness * m.skewness;
  const Trajectory traj = propagate(schedule, psi0, {6.0, 4000});
  const auto tau = torsion_projector(traj, schedule);
  for (std::size_t i = 3; i + 3 < traj.size(); i += 173)
    CHECK(std::abs(tau[i] - expected) < 1e-5);
}

TEST_CASE("projector route agrees with the expectation route for Rabi driving") {
  RabiParams p{1.0, 1.0, 0.9};  // strong-side driving
  const double t_max = 4.0;
  const auto schedule = rabi_schedule(p, t_max);
  const Trajectory traj = propagate(schedule, state_from_angles(std::numbers::pi, 0.0),
                                    {t_max, 4000});
  const auto kappa = curvature_projector(traj, schedule);
  const std::size_t i = 2000;  // t = 2.0
  const FrenetPoint pt = frenet_expectation(schedule.evaluate(traj.times[i]),
                                            schedule.derivative(traj.times[i]),
                                            traj.raw_states[i]);
  CHECK(std::abs(kappa[i] - pt.kappa2) < 1e-4);
}

TEST_CASE("projector sequences mark endpoints absent") {
  RabiParams p{1.0, 0.3, 0.8};
  const auto schedule = rabi_schedule(p, 1.0);
  const Trajectory traj = propagate(schedule, state_from_angles(1.0, 0.0), {1.0, 64});
  const auto kappa = curvature_projector(traj, schedule);
  REQUIRE(kappa.size() == traj.size());
  for (std::size_t i : {std::size_t{0}, std::size_t{1}, std::size_t{2}}) {
    CHECK(std::isnan(kappa[i]));
    CHECK(std::isnan(kappa[kappa.size() - 1 - i]));
  }
  CHECK(!std::isnan(kappa[3]));
}

TEST_CASE("frenet frame") {
  SUBCASE("qutrit interior point yields an orthonormal triple") {
    ScenarioConfig cfg;
    cfg.scenario = ScenarioKind::qutrit_demo;
    cfg.params = {{"omega0", 1.0}, {"Omega0", 0.5}, {"omega", 0.9}};
    cfg.grid = {10.0, 1000};
    const ScenarioSetup setup = build_scenario(cfg);
    const Trajectory traj = propagate(setup.schedule, setup.psi0, cfg.grid);
    const ProjectorSample sample = projector_sample(traj, setup.schedule, 500);
    const FrenetFrame frame = frenet_frame(sample.psi, sample.tangent, sample.normal_raw);
    const CVector* vecs[3] = {&frame.psi, &frame.tangent, &frame.normal};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const cx g = vecs[i]->dot(*vecs[j]);
        CHECK(std::abs(g - (i == j ? cx(1, 0) : cx(0, 0))) < 1e-8);
      }
  }

  SUBCASE("geodesic point throws DegenerateNormal") {
    const CVector psi = basis_state(3, 0);
    const CVector tan = basis_state(3, 1);
    CVector ntilde = CVector::Zero(3);
    ntilde(2) = 1e-8;
    CHECK_THROWS_AS(frenet_frame(psi, tan, ntilde), DegenerateNormal);
  }
}

TEST_CASE("statistical decomposition") {
  SUBCASE("stationary limit zeroes the dynamic terms") {
    std::mt19937_64 rng(34);
    const CMatrix h = random_hermitian(rng, 3);
    const CVector psi = random_state(rng, 3);
    const CurvatureDecomposition dec =
        curvature_statistical(h, CMatrix::Zero(3, 3), psi);
    CHECK(dec.acceleration_term == 0.0);
    CHECK(dec.covariance_term == 0.0);
    CHECK(dec.comm_sq_term == 0.0);
    CHECK(dec.skew_comm_term == 0.0);
  }

  SUBCASE("terms sum to the direct routes") {
    std::mt19937_64 rng(35);
    int kept = 0;
    while (kept < 300) {
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
      CHECK(std::abs(dec.kappa2() - pt.kappa2) < 1e-9);
      CHECK(std::abs(dec.tau2() - pt.tau2) < 1e-9);
      CHECK(dec.accel_bound_holds);
    }
  }

  SUBCASE("qubit kurtosis term is 4(a.m)^2 / v^2") {
    std::mt19937_64 rng(36);
    for (int i = 0; i < 100; ++i) {
      const Vec3 a = random_unit3(rng);
      const Vec3 m = random_vec3(rng, 0.8);
      const Vec3 md = random_vec3(rng, 0.8);
      const double v2 = m.squaredNorm() - std::pow(a.dot(m), 2);
      if (v2 < 0.05) continue;
      const CurvatureDecomposition dec =
          curvature_statistical(dot_sigma(m), dot_sigma(md), state_from_bloch(a));
      const double expected = 4.0 * std::pow(a.dot(m), 2) / v2;
      CHECK(dec.kurtosis_term == doctest::Approx(expected).epsilon(1e-9));
      // comm_sq_term = -[a.(m x mdot)]^2 / v^6 via <[H,Hdot]> = 2i a.(m x mdot).
      const double mixed = a.dot(m.cross(md));
      CHECK(dec.comm_sq_term ==
            doctest::Approx(-mixed * mixed / std::pow(v2, 3)).epsilon(1e-9));
    }
  }
}

TEST_CASE("torsion as generalized variance") {
  SUBCASE("vanishes for qubits") {
    std::mt19937_64 rng(37);
    for (int i = 0; i < 300; ++i) {
      const Vec3 a = random_unit3(rng);
      const Vec3 m = random_vec3(rng, 0.7);
      const Vec3 md = random_vec3(rng, 0.7);
      if (m.squaredNorm() - std::pow(a.dot(m), 2) < 1e-6) continue;
      const double tau2 =
          torsion_generalized_variance(dot_sigma(m), dot_sigma(md), state_from_bloch(a));
      CHECK(std::abs(tau2) < 1e-10);
    }
  }

  SUBCASE("collinear field change commutes") {
    const Vec3 m(0.3, 0.4, 0.5);
    const Vec3 md = 2.0 * m;
    CHECK(commutator(dot_sigma(m), dot_sigma(md)).cwiseAbs().maxCoeff() < 1e-14);
    const Vec3 a = Vec3(1.0, 0.0, 0.0).normalized();
    const double tau2 = torsion_generalized_variance(dot_sigma(m), dot_sigma(md),
                                                     state_from_bloch(a));
    CHECK(std::abs(tau2) < 1e-12);
  }

  SUBCASE("rejects N != 2") {
    std::mt19937_64 rng(38);
    CHECK_THROWS_AS(torsion_generalized_variance(random_hermitian(rng, 3),
                                                 random_hermitian(rng, 3),
                                                 random_state(rng, 3)),
                    DimensionUnsupported);
  }

  SUBCASE("moment identity for qubit pairs") {
    // mu_{H^2} mu_{Hdot^2} = <(mu_Hdot H - mu_H Hdot)^2>
    //                        + (|mu_{{H,Hdot}}|^2 + |mu_{[H,Hdot]}|^2) / 4.
    std::mt19937_64 rng(39);
    for (int i = 0; i < 300; ++i) {
      const Vec3 a = random_unit3(rng);
      const CVector psi = state_from_bloch(a);
      const CMatrix h = dot_sigma(random_vec3(rng, 0.8));
      const CMatrix hd = dot_sigma(random_vec3(rng, 0.8));
      const double mu_h2 = expectation(CMatrix(h * h), psi);
      const double mu_hd2 = expectation(CMatrix(hd * hd), psi);
      const double mu_h = expectation(h, psi);
      const double mu_hd = expectation(hd, psi);
      const CMatrix mix = mu_hd * h - mu_h * hd;
      const double lhs = mu_h2 * mu_hd2;
      const double rhs =
          expectation(CMatrix(mix * mix), psi) +
          (std::norm(expectation_complex(anticommutator(h, hd), psi)) +
           std::norm(expectation_complex(commutator(h, hd), psi))) /
              4.0;
      CHECK(std::abs(lhs - rhs) < 1e-10);
    }
  }
}

TEST_CASE("tau2 never exceeds kappa2") {
  std::mt19937_64 rng(40);
  for (int i = 0; i < 1000; ++i) {
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
    CHECK(pt.kappa2 > -1e-10);
    CHECK(pt.tau2 > -1e-10);
    CHECK(pt.tau2 <= pt.kappa2 + 1e-8);
  }
}
