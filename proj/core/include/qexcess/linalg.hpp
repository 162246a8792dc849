#pragma once

#include <Eigen/Dense>

namespace qexcess {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using IndexMatrix = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>;

inline double frobenius(const Matrix& m) { return m.norm(); }

/// tr(RᵀS), the matrix inner product used throughout.
inline double matrix_inner(const Matrix& r, const Matrix& s) { return (r.array() * s.array()).sum(); }

}  // namespace qexcess
