#pragma once

#include <Eigen/Dense>

namespace eos {

/// True when every entry with |i - j| > 1 is exactly zero.
bool is_tridiagonal(const Eigen::MatrixXd& m);

/// Diagonal similarity of a tridiagonal matrix that gives every pair of
/// off-diagonal entries equal magnitude sqrt(|m(i,i+1) m(i+1,i)|) with the
/// original signs.  Pairs with a zero entry decouple and are zeroed.
Eigen::MatrixXd symmetrize_tridiagonal(const Eigen::MatrixXd& m);

/// Largest eigenvalue modulus.  Tridiagonal input is symmetrized first;
/// other matrices are balanced.  Throws EigenSolverError on failure or on
/// non-finite entries.
double spectral_radius(const Eigen::MatrixXd& m);

/// Largest eigenvalue modulus from the unmodified dense eigen-solve.
double spectral_radius_direct(const Eigen::MatrixXd& m);

/// Parlett-Reinsch balancing by powers of two.
Eigen::MatrixXd balance(const Eigen::MatrixXd& m);

}  // namespace eos
