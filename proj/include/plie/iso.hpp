#pragma once

#include "plie/restricted.hpp"

namespace plie {

/// Isomorphism A -> B as the matrix of basis images (columns = images of
/// A's basis), found by backtracking over candidate images with linear-
/// independence, bracket-consistency and ad-characteristic-polynomial
/// pruning. Deterministic: candidates scanned in element order.
std::optional<Mat> find_isomorphism(const LieAlgebra& A, const LieAlgebra& B, u64 node_budget);

/// Restricted isomorphism: additionally phi(x^[p]) = phi(x)^[p] on the basis
/// (enough, by uniqueness of the operation determined on a basis).
std::optional<Mat> find_isomorphism(const RestrictedAlgebra& A, const RestrictedAlgebra& B,
                                    u64 node_budget);

bool isomorphic(const LieAlgebra& A, const LieAlgebra& B, u64 node_budget);
bool isomorphic(const RestrictedAlgebra& A, const RestrictedAlgebra& B, u64 node_budget);

}  // namespace plie
