#pragma once

#include "plie/classes.hpp"

namespace plie {

/// C-projector of R, by the recursive descent: lift the projector through
/// the least minimal [p]-ideal, recurse into a proper preimage, and
/// complement the ideal at the base. Deterministic.
Subspace projector(const RestrictedAlgebra& R, const RClass& C, const Budget& bud);

/// All C-projectors, by the definition (every [p]-ideal K: (U+K)/K is
/// C-maximal in L/K), over the full [p]-subalgebra lattice.
std::vector<Subspace> all_projectors(const RestrictedAlgebra& R, const RClass& C,
                                     const Budget& bud);

/// Covering-subalgebra check: for every [p]-subalgebra V containing U and
/// every [p]-ideal K of V with V/K in C, U + K = V.
bool is_covering(const RestrictedAlgebra& R, const Subspace& U, const RClass& C,
                 const Budget& bud);

/// Projector computed recursively and cross-checked against the brute-force
/// definition; throws consistency_error on disagreement.
Subspace projector_checked(const RestrictedAlgebra& R, const RClass& C, const Budget& bud);

}  // namespace plie
