#pragma once

#include "qfrenet/types.hpp"

namespace qfrenet {

// Absolute Hermiticity residue max|A - A^dag| accepted before an operator is
// rejected as non-Hermitian.
constexpr double kHermiticityTol = 1e-10;

// Imaginary residue allowed on expectation values of Hermitian operators.
constexpr double kRealnessTol = 1e-12;

double hermiticity_residue(const CMatrix& op);
bool is_hermitian(const CMatrix& op, double tol = kHermiticityTol);

// <state|op|state> for Hermitian op; asserts the imaginary residue is below
// kRealnessTol before discarding it.
double expectation(const CMatrix& op, const CVector& state);

// <state|op|state> for an arbitrary square matrix (no realness assertion).
cx expectation_complex(const CMatrix& op, const CVector& state);

CMatrix commutator(const CMatrix& a, const CMatrix& b);
CMatrix anticommutator(const CMatrix& a, const CMatrix& b);

// op - <op> I; the returned operator has zero expectation in `state`.
CMatrix delta_operator(const CMatrix& op, const CVector& state);

struct MomentSet {
  double mean = 0.0;
  double m2 = 0.0;
  double m3 = 0.0;
  double m4 = 0.0;
  double skewness = 0.0;   // alpha_3 = m3 / m2^{3/2}
  double kurtosis = 0.0;   // alpha_4 = m4 / m2^2
};

// Central moments <(Delta op)^k> for k = 2..up_to, plus the normalized
// skewness/kurtosis. Throws DegenerateDispersion when the state is an
// eigenstate of op (m2 <= 1e-14 * |op|_F^2, a scale-free threshold).
MomentSet central_moments(const CMatrix& op, const CVector& state, int up_to = 4);

// cov(A, B) = <AB> - <A><B>; complex for non-commuting A, B.
cx covariance(const CMatrix& a, const CMatrix& b, const CVector& state);

struct CovarianceMatrix2 {
  double var_h = 0.0;        // <(Delta H)^2>
  double var_hdot = 0.0;     // <(Delta Hdot)^2>
  cx cov_h_hdot{0.0, 0.0};   // <(Delta H)(Delta Hdot)>
  cx cov_hdot_h{0.0, 0.0};   // conjugate of the above
  double determinant = 0.0;  // var_h * var_hdot - |cov_h_hdot|^2, >= 0 up to roundoff
};

// 2x2 covariance matrix of (H, Hdot) in `state` and its determinant. The
// determinant is evaluated as |u|^2 |w - proj_u w|^2 with u = (Delta H)|psi>,
// w = (Delta Hdot)|psi>, which is algebraically the same 2x2 determinant but
// does not cancel catastrophically when the pair is nearly perfectly
// correlated (the interesting regime).
CovarianceMatrix2 generalized_variance(const CMatrix& h, const CMatrix& hdot,
                                       const CVector& state);

}  // namespace qfrenet
