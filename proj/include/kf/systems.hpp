// systems.hpp — unit-vector systems and their auxiliary sequence.
//
// Given unit vectors e_0, ..., e_{N-1} spanning (or not) C^d, the auxiliary
// sequence is defined by the recursion
//
//     g_0 = e_0,      g_n = e_n - sum_{i<n} inner(e_n, e_i) g_i.
//
// Equivalently g_n = e_n + sum_{i<n} c_{ni} e_i where C = M^{-1} and M is the
// unit lower triangular correlation matrix m_ni = inner(e_n, e_i), n > i.
// The g_n drive single-pass reconstruction: the best approximation after
// step n is x_n = sum_{i<=n} inner(x, g_i) e_i.
#pragma once

#include <cstdint>
#include <vector>

#include "kf/matrix.hpp"
#include "kf/rng.hpp"
#include "kf/vector.hpp"

namespace kf {

// A finite list of unit-norm vectors in C^d.  Construction validates
// dimensions, finiteness, and unit norms (to 1e-12).
struct UnitVectorSystem {
    std::size_t dim = 0;
    std::vector<Vector> vectors;

    UnitVectorSystem(std::size_t d, std::vector<Vector> vs);

    std::size_t count() const { return vectors.size(); }
    const Vector& operator[](std::size_t n) const { return vectors[n]; }
};

// M, its inverse C, and U = C - I (dense).  build() verifies M C = I.
struct TriangularPair {
    UnitLowerTriangular M;
    UnitLowerTriangular C;

    static TriangularPair build(const UnitVectorSystem& sys);

    Matrix u() const;  // dense C - I (strictly lower triangular)
};

struct AuxiliarySequence {
    std::vector<Vector> vectors;  // g_0, ..., g_{N-1}

    std::size_t count() const { return vectors.size(); }
    const Vector& operator[](std::size_t n) const { return vectors[n]; }
};

// Correlation matrix m_ni = inner(e_n, e_i) for n > i.
UnitLowerTriangular correlation_matrix(const UnitVectorSystem& sys);

// Auxiliary sequence via the defining recursion.
AuxiliarySequence auxiliary_sequence(const UnitVectorSystem& sys);

// Same sequence assembled from the rows of C: g_n = e_n + sum_{i<n} c_ni e_i.
// Numerically independent route used for cross-checking.
AuxiliarySequence auxiliary_sequence_from_inverse(const UnitVectorSystem& sys,
                                                  const UnitLowerTriangular& c);

// Partial reconstruction x_n = sum_{i<=n} inner(x, g_i) e_i.
Vector reconstruct_from_g(const UnitVectorSystem& sys, const AuxiliarySequence& g,
                          const Vector& x, std::size_t n);

// Analysis maps as matrices: row n of bessel_map is conj(e_n), so
// (L x)_n = inner(x, e_n).  The g-analysis map satisfies L_g = conj(C) L_e.
Matrix bessel_map(const std::vector<Vector>& vectors, std::size_t dim);

// Frame operator S = sum_n e_n inner(., e_n) as a dense d x d matrix.
Matrix frame_operator(const std::vector<Vector>& vectors, std::size_t dim);

// Gram matrix G[i][j] = inner(v_i, v_j).
Matrix gram_matrix(const std::vector<Vector>& vectors);

enum class SystemKind {
    onb,              // random orthonormal basis, N == d
    perturbed_onb,    // ONB plus a fixed-size random perturbation, N == d
    repeated_vector,  // ONB with its first vector listed twice, N == d + 1
    remark,           // e_1 at 60 degrees to e_0, rest orthonormal, N == d
    parseval_rows,    // unit-norm tight frame (harmonic frame, rotated), N >= d
    random_unit,      // independent uniformly random unit vectors
};

const char* to_string(SystemKind kind);

// Deterministic system generator.  Shape rules:
//   onb, perturbed_onb, remark : N == d  (remark needs d >= 2)
//   repeated_vector            : N == d + 1
//   parseval_rows              : N >= d
//   random_unit                : any N >= 1
// The remark construction is canonical and ignores the seed.
UnitVectorSystem generate_system(SystemKind kind, std::size_t d, std::size_t n,
                                 std::uint64_t seed);

}  // namespace kf
