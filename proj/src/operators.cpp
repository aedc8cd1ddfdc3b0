#include "qfrenet/operators.hpp"

#include <cmath>

namespace qfrenet {

double hermiticity_residue(const CMatrix& op) {
  return (op - op.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const CMatrix& op, double tol) {
  return hermiticity_residue(op) <= tol;
}

static void check_hermitian(const CMatrix& op, const char* what) {
  const double res = hermiticity_residue(op);
  if (res > kHermiticityTol)
    throw NonHermitianOperator(std::string(what) + ": Hermiticity residue " +
                               std::to_string(res));
}

double expectation(const CMatrix& op, const CVector& state) {
  require_square(op, "expectation");
  require_matching_state(op, state, "expectation");
  check_hermitian(op, "expectation");
  const cx val = state.dot(op * state);
  if (std::abs(val.imag()) >= kRealnessTol)
    throw NonHermitianOperator("expectation: imaginary residue " +
                               std::to_string(val.imag()));
  return val.real();
}

cx expectation_complex(const CMatrix& op, const CVector& state) {
  require_square(op, "expectation_complex");
  require_matching_state(op, state, "expectation_complex");
  return state.dot(op * state);
}

CMatrix commutator(const CMatrix& a, const CMatrix& b) {
  require_square(a, "commutator");
  require_same_dim(a, b, "commutator");
  return a * b - b * a;
}

CMatrix anticommutator(const CMatrix& a, const CMatrix& b) {
  require_square(a, "anticommutator");
  require_same_dim(a, b, "anticommutator");
  return a * b + b * a;
}

CMatrix delta_operator(const CMatrix& op, const CVector& state) {
  const double mean = expectation(op, state);
  return op - mean * CMatrix::Identity(op.rows(), op.cols());
}

MomentSet central_moments(const CMatrix& op, const CVector& state, int up_to) {
  if (up_to < 2 || up_to > 4)
    throw std::invalid_argument("central_moments: up_to must be in [2, 4]");
  MomentSet out;
  out.mean = expectation(op, state);
  const CMatrix d = op - out.mean * CMatrix::Identity(op.rows(), op.cols());

  // Moments as inner products of (Delta op)^k |psi> chains.
  const CVector d1 = d * state;
  out.m2 = d1.squaredNorm();
  const double eps = 1e-14 * op.squaredNorm();  // squaredNorm == Frobenius^2
  if (out.m2 <= eps)
    throw DegenerateDispersion("central_moments: state is an eigenstate of op");

  if (up_to >= 3) {
    const CVector d2 = d * d1;
    out.m3 = d1.dot(d2).real();
    out.skewness = out.m3 / std::pow(out.m2, 1.5);
    if (up_to >= 4) {
      out.m4 = d2.squaredNorm();
      out.kurtosis = out.m4 / (out.m2 * out.m2);
    }
  }
  return out;
}

cx covariance(const CMatrix& a, const CMatrix& b, const CVector& state) {
  require_same_dim(a, b, "covariance");
  const cx ab = expectation_complex(a * b, state);
  const cx ea = expectation_complex(a, state);
  const cx eb = expectation_complex(b, state);
  return ab - ea * eb;
}

CovarianceMatrix2 generalized_variance(const CMatrix& h, const CMatrix& hdot,
                                       const CVector& state) {
  require_same_dim(h, hdot, "generalized_variance");
  require_matching_state(h, state, "generalized_variance");
  check_hermitian(h, "generalized_variance");
  check_hermitian(hdot, "generalized_variance");

  const CMatrix dh = delta_operator(h, state);
  const CMatrix dhd = delta_operator(hdot, state);
  const CVector u = dh * state;
  const CVector w = dhd * state;

  CovarianceMatrix2 out;
  out.var_h = u.squaredNorm();
  out.var_hdot = w.squaredNorm();
  out.cov_h_hdot = u.dot(w);
  out.cov_hdot_h = std::conj(out.cov_h_hdot);

  // Gram determinant of {u, w}: |u|^2 * |w_perp|^2.
  if (out.var_h > 0.0) {
    const CVector w_perp = w - (u.dot(w) / out.var_h) * u;
    out.determinant = out.var_h * w_perp.squaredNorm();
  } else {
    out.determinant = 0.0;
  }
  return out;
}

}  // namespace qfrenet
