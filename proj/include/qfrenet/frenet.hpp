#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "qfrenet/evolution.hpp"
#include "qfrenet/operators.hpp"
#include "qfrenet/schedule.hpp"
#include "qfrenet/types.hpp"

namespace qfrenet {

// Squared-norm floor below which the normal direction is declared undefined.
constexpr double kNormalFloor = 1e-12;

// Instantaneous curvature/torsion of the quantum curve from operator
// expectation values at a single time, no trajectory needed.
//
// The covariant-derivative vector is built explicitly,
//   |T'> = -[(dh)^2 + i dh'] |Psi>,  dh = Delta H / v,
//   dh' = Delta Hdot / v^2 - Delta H vdot / v^3,
// and kappa^2 = |P_Psi T'|^2, tau^2 = |P_T P_Psi T'|^2. Expanding these norms
// reproduces the moment/covariance forms term by term (see
// curvature_statistical), but the vector evaluation keeps the large
// intermediate moments from cancelling in the final subtraction.
struct FrenetPoint {
  double v = 0.0;
  double v_dot = 0.0;
  double kappa2 = 0.0;
  double tau2 = 0.0;
};

FrenetPoint frenet_expectation(const CMatrix& h, const CMatrix& hdot,
                               const CVector& state);

double curvature_expectation(const CMatrix& h, const CMatrix& hdot,
                             const CVector& state);
double torsion_expectation(const CMatrix& h, const CMatrix& hdot,
                           const CVector& state);

// Discretized projector route along a sampled trajectory. T'(s) is obtained
// from a 7-point central stencil in t divided by v; samples without a full
// stencil (three at each end) or with a degenerate-speed point in the window
// are NaN. The wider stencil keeps the truncation error below the route
// agreement tolerances at the shipped grids; a 5-point stencil falls short
// near speed minima under strong driving.
std::vector<double> curvature_projector(const Trajectory& traj,
                                        const HamiltonianSchedule& schedule);
std::vector<double> torsion_projector(const Trajectory& traj,
                                      const HamiltonianSchedule& schedule);

struct ProjectorSample {
  double kappa2 = std::numeric_limits<double>::quiet_NaN();
  double tau2 = std::numeric_limits<double>::quiet_NaN();
  CVector psi;          // transported state
  CVector tangent;
  CVector normal_star;  // P_Psi |T'>, not normalized
  CVector normal_raw;   // P_T P_Psi |T'>, not normalized
};

// Both coefficients plus the frame ingredients at one interior index.
// Throws DegenerateSpeed when any stencil point has speed below threshold.
ProjectorSample projector_sample(const Trajectory& traj,
                                 const HamiltonianSchedule& schedule,
                                 std::size_t index);

struct FrenetFrame {
  CVector psi;
  CVector tangent;
  CVector normal;
};

// Normalizes the raw normal; throws DegenerateNormal when |N~|^2 <= 1e-12
// (locally geodesic curve: no normal direction).
FrenetFrame frenet_frame(const CVector& psi, const CVector& tangent,
                         const CVector& normal_raw);

// Term-by-term statistical content of the time-dependent coefficients.
// kappa^2 = kurtosis_term + acceleration_term + covariance_term;
// tau^2 adds skew_term + comm_sq_term + skew_comm_term.
struct CurvatureDecomposition {
  double v = 0.0;
  double v_dot = 0.0;
  double sigma_hdot_sq = 0.0;        // <(Delta Hdot)^2>
  double kurtosis_term = 0.0;        // alpha_4 - 1
  double acceleration_term = 0.0;    // [sigma_Hdot^2 - (dv/dt)^2] / v^4
  double covariance_term = 0.0;      // i [cov(H,[H,Hdot]) + cov([H,Hdot],H)] / v^4
  double skew_term = 0.0;            // -alpha_3^2
  double comm_sq_term = 0.0;         // (1/4) <[H,Hdot]>^2 / v^6  (<= 0)
  double skew_comm_term = 0.0;       // -i alpha_3 <[H,Hdot]> / v^3
  bool accel_bound_holds = true;     // (dv/dt)^2 <= sigma_Hdot^2
  double kappa2() const { return kurtosis_term + acceleration_term + covariance_term; }
  double tau2() const {
    return kurtosis_term + skew_term + acceleration_term + comm_sq_term +
           covariance_term + skew_comm_term;
  }
};

CurvatureDecomposition curvature_statistical(const CMatrix& h, const CMatrix& hdot,
                                             const CVector& state);

// tau^2 = det Sigma(H, Hdot) / v^6, valid for two-level systems only
// (N != 2 throws DimensionUnsupported).
double torsion_generalized_variance(const CMatrix& h, const CMatrix& hdot,
                                    const CVector& state);

// Per-time output record assembled by the scenario runner.
struct FrenetSample {
  double t = 0.0;
  double s = 0.0;
  double v = 0.0;
  double v_dot = std::numeric_limits<double>::quiet_NaN();
  double kappa2_bloch = std::numeric_limits<double>::quiet_NaN();
  double kappa2_expect = std::numeric_limits<double>::quiet_NaN();
  double kappa2_projector = std::numeric_limits<double>::quiet_NaN();
  double tau2_expect = std::numeric_limits<double>::quiet_NaN();
  double tau2_residual = std::numeric_limits<double>::quiet_NaN();
  Vec3 bloch{std::numeric_limits<double>::quiet_NaN(),
             std::numeric_limits<double>::quiet_NaN(),
             std::numeric_limits<double>::quiet_NaN()};
  std::optional<FrenetFrame> frame;
  std::optional<CurvatureDecomposition> decomposition;
};

}  // namespace qfrenet
