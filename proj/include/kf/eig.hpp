// eig.hpp — Hermitian eigenvalues via cyclic Jacobi rotations, and the
// operator (spectral) norm built on top of them.
#pragma once

#include <vector>

#include "kf/matrix.hpp"

namespace kf {

struct ExtremeEigs {
    double min = 0.0;
    double max = 0.0;
};

// All eigenvalues of a Hermitian matrix, ascending.  The input must be
// Hermitian to 1e-12 entrywise; sizes up to 512 are supported.  `tol` bounds
// the relative error of the returned eigenvalues.
std::vector<double> hermitian_eigenvalues(const Matrix& h, double tol = 1e-10);

// Smallest and largest eigenvalue of a Hermitian matrix.
ExtremeEigs hermitian_extreme_eigs(const Matrix& h, double tol = 1e-10);

// Spectral norm of an arbitrary rectangular matrix, computed as
// sqrt(lambda_max(T* T)).
double operator_norm(const Matrix& t, double tol = 1e-10);

}  // namespace kf
