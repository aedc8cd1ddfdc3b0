#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace qfrenet {

using cx = std::complex<double>;

// Dense row-major complex matrices; dimensions here are always small (2..8).
using CMatrix = Eigen::Matrix<cx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using CVector = Eigen::VectorXcd;
using Vec3 = Eigen::Vector3d;

constexpr cx imag_unit{0.0, 1.0};

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NonHermitianOperator : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// State is (numerically) an eigenstate of the observable: higher moments undefined.
struct DegenerateDispersion : std::domain_error {
  using std::domain_error::domain_error;
};

// Evolution speed below threshold: curvature/torsion undefined rather than noise.
struct DegenerateSpeed : std::domain_error {
  using std::domain_error::domain_error;
};

// Normal direction undefined (locally geodesic curve).
struct DegenerateNormal : std::domain_error {
  using std::domain_error::domain_error;
};

struct DimensionUnsupported : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NonFiniteState : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline void require_square(const CMatrix& m, const char* what) {
  if (m.rows() != m.cols())
    throw DimensionMismatch(std::string(what) + ": matrix is not square");
}

inline void require_same_dim(const CMatrix& a, const CMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch(std::string(what) + ": operator dimensions differ");
}

inline void require_matching_state(const CMatrix& op, const CVector& psi, const char* what) {
  if (op.cols() != psi.size())
    throw DimensionMismatch(std::string(what) + ": operator/state dimensions differ");
}

}  // namespace qfrenet
