#pragma once

#include "plie/classes.hpp"

namespace plie {

/// p-envelope of an ordinary Lie algebra: a restricted algebra that is the
/// [p]-closure of an embedded copy of the source. Minimal when the centre of
/// the target lies inside the embedded source. Every instance returned has
/// had its certificates checked (injectivity, closure, dimension formula,
/// centre containment for the minimal one).
struct Envelope {
    LiePtr source;
    RestrictedAlgebra target;
    Mat embedding;  // dim(target) x dim(source), injective algebra map
    bool minimal = false;
};

/// Build the minimal p-envelope: adjoin ad(e)^p as new basis derivations
/// until every ad(e)^p is inner, pick the least p-operation, take the
/// [p]-closure of the source, and peel central [p]-ideals meeting the
/// source trivially until the centre lies inside it.
Envelope minimal_p_envelope(LiePtr U, const Budget& bud);

/// Envelope whose p-operation vanishes on the abelian ideal A of U
/// (not necessarily minimal).
Envelope null_ideal_envelope(LiePtr U, const Subspace& A, const Budget& bud);

/// Membership of U in the enveloped class of K, decided on the minimal
/// envelope.
bool envd_membership(LiePtr U, const RClass& K, const Budget& bud);

/// Solve ad(b) = M for b (least solution), in the given algebra.
std::optional<Vec> ad_preimage(const LieAlgebra& L, const Mat& M);

/// p-closure of ad(U) inside gl(U): span closed under brackets and matrix
/// p-th powers. Returns its dimension (used by the envelope dimension
/// certificate).
u32 gl_p_closure_dim(const LieAlgebra& U);

}  // namespace plie
