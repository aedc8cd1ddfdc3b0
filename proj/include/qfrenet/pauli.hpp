#pragma once

#include "qfrenet/types.hpp"

namespace qfrenet {

inline CMatrix pauli_x() {
  CMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

inline CMatrix pauli_y() {
  CMatrix m(2, 2);
  m << 0, -imag_unit, imag_unit, 0;
  return m;
}

inline CMatrix pauli_z() {
  CMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

inline CMatrix identity(int n) { return CMatrix::Identity(n, n); }

// H = v . sigma for a real 3-vector v.
inline CMatrix dot_sigma(const Vec3& v) {
  CMatrix m(2, 2);
  m << cx(v.z(), 0), cx(v.x(), -v.y()), cx(v.x(), v.y()), cx(-v.z(), 0);
  return m;
}

// Spin-1 angular momentum matrices (hbar = 1), basis {|+1>, |0>, |-1>}.
inline CMatrix spin1_jx() {
  const double r = 1.0 / std::sqrt(2.0);
  CMatrix m(3, 3);
  m << 0, r, 0, r, 0, r, 0, r, 0;
  return m;
}

inline CMatrix spin1_jy() {
  const cx c = -imag_unit / std::sqrt(2.0);
  CMatrix m(3, 3);
  m << 0, c, 0, -c, 0, c, 0, -c, 0;
  return m;
}

inline CMatrix spin1_jz() {
  CMatrix m = CMatrix::Zero(3, 3);
  m(0, 0) = 1;
  m(2, 2) = -1;
  return m;
}

inline CVector basis_state(int n, int k) {
  CVector v = CVector::Zero(n);
  v(k) = 1.0;
  return v;
}

}  // namespace qfrenet
