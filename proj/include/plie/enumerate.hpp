#pragma once

#include "plie/lie.hpp"
#include "plie/scan.hpp"

namespace plie {

enum class SubalgFilter { All, Ideals, Maximal };

/// All subalgebras of L matching the filter, by subspace scan with pruning;
/// complete, duplicate-free, ordered by (dim, basis grid).
std::vector<Subspace> enumerate_subalgebras(const LieAlgebra& L, SubalgFilter filter,
                                            u64 budget, scan::Mode mode = scan::Mode::Auto);
/// Same, keeping only subalgebras satisfying an extra predicate.
std::vector<Subspace> enumerate_subalgebras(const LieAlgebra& L,
                                            const std::function<bool(const Subspace&)>& pred,
                                            u64 budget, scan::Mode mode = scan::Mode::Auto);

/// The full ideal lattice: sum-closure of the cyclic ideals. Cheaper than a
/// subspace scan and exact; requires |F|^dim within budget.
std::vector<Subspace> ideal_lattice(const LieAlgebra& L, u64 element_budget);

/// Maximal elements of the proper part of a family of subspaces.
std::vector<Subspace> maximal_members(const Field& F, const std::vector<Subspace>& family,
                                      u32 full_dim);

/// Maximal subalgebras (proper, not contained in any proper subalgebra).
std::vector<Subspace> maximal_subalgebras(const LieAlgebra& L, u64 budget,
                                          scan::Mode mode = scan::Mode::Auto);

/// Frattini subalgebra: intersection of the maximal subalgebras (the whole
/// algebra when none exist, i.e. dim 0).
Subspace frattini(const LieAlgebra& L, u64 budget, scan::Mode mode = scan::Mode::Auto);

/// Minimal ideals via the container scan: every minimal ideal B satisfies
/// [D_k, B] = 0 and B <= D_k for some derived-series term D_k, so B lies in
/// C_L(D_k) ∩ D_k; scanning the vectors of those subspaces and minimizing
/// the cyclic ideals they generate yields exactly the minimal ideals.
std::vector<Subspace> minimal_ideals(const LieAlgebra& L, u64 element_budget);

}  // namespace plie
