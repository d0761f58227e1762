// oracles.hpp — independent reference implementations used only by tests.
// These deliberately take different algorithmic routes from the library:
// LU with partial pivoting for solving/inverting, and Householder
// tridiagonalization + Sturm bisection for extreme eigenvalues.
#pragma once

#include "kf/matrix.hpp"
#include "kf/vector.hpp"

namespace oracle {

kf::Vector lu_solve(const kf::Matrix& a, const kf::Vector& b);
kf::Matrix lu_invert(const kf::Matrix& a);

struct Extremes {
    double min = 0.0;
    double max = 0.0;
};

// Extreme eigenvalues of a Hermitian matrix (no symmetry check; callers pass
// exact Hermitian inputs).
Extremes extreme_eigs(const kf::Matrix& h);

}  // namespace oracle
