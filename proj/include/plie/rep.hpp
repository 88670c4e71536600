#pragma once

#include "plie/lie.hpp"

namespace plie {

/// Module over a Lie algebra: one action matrix per basis element.
/// Validated at construction: rho([e_i,e_j]) = [rho(e_i), rho(e_j)].
struct Representation {
    LiePtr L;
    u32 dim_v = 0;
    std::vector<Mat> action;

    Mat act(const Field& F, const Vec& x) const;  // rho(x)
    Vec apply(const Field& F, const Vec& x, const Vec& v) const;
};

Representation rep_make(LiePtr L, u32 dim_v, std::vector<Mat> action);
Representation rep_trivial(LiePtr L, u32 dim_v);
Representation rep_adjoint(LiePtr L);

/// All submodules (invariant subspaces), computed as the sum-closure of the
/// cyclic submodules; complete and lexicographically ordered.
std::vector<Subspace> submodules(const Representation& rho, u64 budget);
bool is_submodule(const Representation& rho, const Subspace& W);
bool is_irreducible(const Representation& rho, u64 budget);
/// Smallest nonzero submodule containing v.
Subspace cyclic_submodule(const Representation& rho, const Vec& v);
/// Minimal nonzero submodules.
std::vector<Subspace> minimal_submodules(const Representation& rho, u64 budget);

/// Representation on a subquotient W1/W2 (both submodules, W2 <= W1).
Representation rep_subquotient(const Representation& rho, const Subspace& W1,
                               const Subspace& W2);
/// Composition series 0 = M_0 < M_1 < ... < M_k = V (deterministic: the
/// least minimal submodule at each step) together with the factor modules.
struct CompositionSeries {
    std::vector<Subspace> terms;            // ascending, ends with full space
    std::vector<Representation> factors;    // factor i = terms[i+1]/terms[i]
};
CompositionSeries composition_series(const Representation& rho, u64 budget);

Representation rep_tensor(const Representation& a, const Representation& b);
Representation rep_hom(const Representation& a, const Representation& b);
Representation rep_dual(const Representation& a);
/// Restriction to the subalgebra carried by the view.
Representation rep_restrict(const Representation& rho, const SubalgebraView& S);

/// Module isomorphism by intertwiner search: invertible T with
/// rho1(x) T = T rho2(x) for all basis x. Exhaustive over the solution
/// space of the intertwiner equations; budget-capped.
bool modules_isomorphic(const Representation& a, const Representation& b, u64 budget);

}  // namespace plie
