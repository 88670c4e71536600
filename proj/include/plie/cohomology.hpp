#pragma once

#include "plie/restricted.hpp"

namespace plie {

/// Chevalley-Eilenberg complex of L with coefficients in a module, truncated
/// at n_max. Exterior-power bases are ordered by lexicographic index tuples.
struct CochainComplex {
    Representation rho;
    int n_max = 3;
    std::vector<Mat> d;  // d[n]: C^n -> C^(n+1), for n = 0..n_max
    std::vector<u32> cochain_dims;  // dim C^n for n = 0..n_max+1
};

CochainComplex cochain_complex(const Representation& rho, int n_max, u64 budget);

/// dim H^n(L, V); cocycle basis on request via the complex.
u32 cohomology_dim(const CochainComplex& C, int n);
u32 cohomology_dim(const Representation& rho, int n, u64 budget);

/// Subalgebra M with M + A = L and M ∩ A = 0, when one exists. A must be an
/// abelian ideal. Deterministic: built from the lexicographically least
/// solution of the coboundary system.
std::optional<Subspace> complement_abelian_ideal(const LieAlgebra& L, const Subspace& A);

/// All subalgebra complements to A (by lattice scan; used as an oracle).
std::vector<Subspace> all_complements(const LieAlgebra& L, const Subspace& A, u64 budget);

/// a in A with (1 + ad a)(U1) = U2; A an abelian ideal. Returns the least
/// solution or nothing.
std::optional<Vec> conjugating_element(const LieAlgebra& L, const Subspace& A,
                                       const Subspace& U1, const Subspace& U2);

/// The matrix 1 + ad(a), certified to be an algebra automorphism.
Mat apply_alpha(const LieAlgebra& L, const Vec& a);

}  // namespace plie
