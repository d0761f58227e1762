// diagnostics.hpp — frame bounds and the effectiveness tests built on them.
//
// For a unit-vector system E with auxiliary sequence G, single-pass expansion
// recovers every target exactly when G is a tight frame with constant 1; the
// equivalent operator test says U = C - I must satisfy (U*U)^2 = U*U.  When G
// is merely a frame with lower bound A, the worst-case one-pass energy loss
// is bounded by 1 - A.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kf/kaczmarz.hpp"
#include "kf/systems.hpp"

namespace kf {

struct DiagnosticTols {
    double frame_tol = 1e-10;      // positivity threshold for lower bounds
    double tight_tol = 1e-6;       // |A - 1|, |B - 1| for tightness
    double onb_tol = 1e-8;         // Gram deviation from the identity
    double effective_tol = 1e-6;   // effectiveness defects
};

struct FrameReport {
    double lower = 0.0;          // A: smallest eigenvalue of the frame operator
    double upper = 0.0;          // B: largest eigenvalue of the frame operator
    double gram_min_eig = 0.0;   // smallest eigenvalue of the Gram matrix
    bool is_frame = false;       // A > frame_tol
    bool is_tight_one = false;   // A and B within tight_tol of 1
    bool is_riesz = false;       // square system with invertible Gram
    bool is_onb = false;         // Gram within onb_tol of the identity (entrywise)
};

// Frame bounds of an arbitrary finite vector list (not necessarily unit norm).
FrameReport frame_bounds(const std::vector<Vector>& vectors, const DiagnosticTols& tols = {});

struct EffectivenessResult {
    bool effective = false;
    double defect = 0.0;
};

// Tight-frame test on the auxiliary sequence: defect |A_g - 1| + |B_g - 1|,
// effective iff both terms are within tol.
EffectivenessResult effectiveness_tight(const UnitVectorSystem& sys, double tol = 1e-6);

// Partial-isometry test on U = C - I: defect
// ||(U*U)^2 - U*U|| + ||(U*U)* - U*U|| in operator norm.
EffectivenessResult effectiveness_isometry(const UnitVectorSystem& sys, double tol = 1e-6);

// Worst-case single-pass energy loss sup_x ||x - x_N||^2 / ||x||^2 <= 1 - A_g,
// valid when the auxiliary sequence is a frame; nullopt otherwise.
std::optional<double> almost_effective_bound(const UnitVectorSystem& sys,
                                             const DiagnosticTols& tols = {});

struct ConvergenceBound {
    double a1 = 0.0;                  // lower frame bound of the rows
    double a2 = 0.0;                  // upper frame bound of the rows
    std::optional<double> c1;         // smallest eigenvalue of (C + C*)/2, if positive
    std::optional<double> bound;      // residual bound factor: a2 (1 - a1 c1) / a1
};

// Single-pass residual bound for a normalized-row system: the tail residual
// after one data pass is at most `bound * ||b||^2` in the squared norm.
// Throws NotFrame when the rows do not span; c1 <= 0 leaves bound empty.
ConvergenceBound convergence_bound(const UnitVectorSystem& sys, const DiagnosticTols& tols = {});

enum class Solvability {
    always_converges,      // surjective with orthogonal rows
    not_orthogonal_rows,   // rows fail pairwise orthogonality
    not_surjective,        // rank-deficient
};

const char* to_string(Solvability v);

// For square systems: cyclic projections converge for every rhs and every x0
// exactly when the matrix is invertible with pairwise-orthogonal rows.
Solvability kaczmarz_solvability(const LinearSystem& s, const DiagnosticTols& tols = {});

// Deviation of the mixed expansion f -> sum_n inner(f, g_n) e_n from the
// identity, in operator norm.  Zero exactly for orthonormal systems; the
// auxiliary sequence is generally *not* a dual frame of E.
double duality_defect(const UnitVectorSystem& sys);

// The mixed expansion itself, for probing individual vectors.
Vector dual_expansion(const UnitVectorSystem& sys, const AuxiliarySequence& g, const Vector& f);

struct EffectivenessReport {
    bool effective = false;                       // tight-frame verdict
    bool methods_agree = false;                   // tight vs isometry verdicts
    double tight_defect = 0.0;
    double isometry_defect = 0.0;
    std::optional<double> almost_effective;       // 1 - A_g when G is a frame
    std::optional<double> c1_lower;               // smallest eigenvalue of (C + C*)/2
};

EffectivenessReport effectiveness_report(const UnitVectorSystem& sys,
                                         const DiagnosticTols& tols = {});

}  // namespace kf
