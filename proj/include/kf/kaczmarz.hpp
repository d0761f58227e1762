// kaczmarz.hpp — row-projection solvers for A x = b.
//
// One step projects the iterate onto the hyperplane of row i:
//
//     x <- x + (b_i - (A x)_i) / ||a_i||^2 * conj(a_i)
//
// (conj because rows act on x by plain multiplication while the projection
// direction is the vector representing that functional).  cyclic_solve sweeps
// the rows in order until the residual drops below tol; single_pass runs the
// abstract one-pass expansion of a known target over a unit-vector system;
// data_driven_pass is the same pass driven only by (A, b).
#pragma once

#include <cstddef>
#include <vector>

#include "kf/systems.hpp"
#include "kf/vector.hpp"

namespace kf {

// A x = b with no (near-)zero rows; construction validates shapes, finiteness
// and row norms.
struct LinearSystem {
    Matrix a;
    Vector b;

    LinearSystem(Matrix a_, Vector b_);

    std::size_t rows() const { return a.rows; }
    std::size_t cols() const { return a.cols; }
};

struct Trajectory {
    std::vector<Vector> iterates;        // x_0, x_1, ... (one per recorded step)
    std::vector<double> residual_norms;  // ||A x - b||, policy depends on the engine
    std::vector<double> error_norms;     // ||x - x_n|| when the true x is known
    std::size_t sweeps = 0;              // sweeps (or passes) actually executed
    bool converged = false;
};

// Rows normalized to unit vectors: e_n = conj(a_n) / ||a_n||, so that
// inner(x, e_n) = (A x)_n / ||a_n||.  Returns the system together with the
// row norms and the correspondingly scaled right-hand side.
struct NormalizedRows {
    UnitVectorSystem system;
    std::vector<double> scales;  // ||a_n||
    Vector b;                    // b_n / ||a_n||
};
NormalizedRows normalize_rows(const LinearSystem& s);

// Cyclic sweeps from x0 until ||A x - b|| <= tol * max(||b||, 1e-300) or the
// sweep budget runs out.  Residuals are recorded once per sweep (plus the
// initial residual); iterates once per row application.
Trajectory cyclic_solve(const LinearSystem& s, const Vector& x0, std::size_t max_sweeps,
                        double tol);

// One pass of the abstract expansion of a known target x over the system:
// x_0 = inner(x, e_0) e_0, then x_n = x_{n-1} + inner(x - x_{n-1}, e_n) e_n.
// Error norms against x are recorded at every step.
Trajectory single_pass(const UnitVectorSystem& sys, const Vector& x);

// Partial sum sum_{i<=n} inner(x, g_i) e_i. Matches single_pass step n exactly
// (same finite-n identity that makes the norms of these expansions Pythagorean).
Vector partial_sum_via_g(const UnitVectorSystem& sys, const AuxiliarySequence& g,
                         const Vector& x, std::size_t n);

// The same pass computed from data only: x starts at b_0 conj(a_0) / ||a_0||^2
// and each subsequent row applies one projection step.  `passes` full passes
// over the rows are executed (the first one starts at row 1); residuals are
// recorded after every row application.  tol > 0 enables early exit checked
// at pass boundaries.
Trajectory data_driven_pass(const LinearSystem& s, std::size_t passes, double tol = 0.0);

}  // namespace kf
