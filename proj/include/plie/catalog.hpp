#pragma once

#include "plie/envelope.hpp"
#include "plie/projector.hpp"

namespace plie {
namespace catalog {

/// One named construction; exactly one of `restricted` / `ordinary` /
/// `lambda` is set, depending on what the key denotes.
struct Value {
    std::optional<RestrictedAlgebra> restricted;
    std::optional<LiePtr> ordinary;
    std::optional<LambdaSpace> lambda;
};

struct Entry {
    std::string key;
    std::string description;
    u64 default_p;
    std::vector<std::string> facts;  // machine-checkable fact ids
};

const std::vector<Entry>& entries();
Value build(const std::string& key, u64 p);

struct FactResult {
    std::string key;
    u64 p;
    std::string fact;
    bool pass = false;
    std::string detail;
};

/// Run every expected fact of one entry.
std::vector<FactResult> check_facts(const std::string& key, u64 p, const Budget& bud);

/// A small algebra from the exhaustive scan with all its p-operations
/// (empty and restrictable=false when there are none).
struct SmallAlgebra {
    LiePtr algebra;
    bool restrictable = false;
    std::vector<RestrictedAlgebra> operations;
};

/// All Lie algebras of dimension <= max_dim over GF(p), deduplicated by
/// isomorphism at dim <= 3, each with the complete list of p-operations.
/// Deterministic order (structure-constant table index; first representative
/// per isomorphism class).
std::vector<SmallAlgebra> enumerate_small(u64 p, u32 max_dim, const Budget& bud);

/// Sampled variant for larger dimensions, fixed seed, Jacobi-filtered,
/// not deduplicated.
std::vector<SmallAlgebra> enumerate_sampled(u64 p, u32 dim, u32 count, u64 seed,
                                            const Budget& bud);

/// Named builders used across the test suites.
RestrictedAlgebra der_example(u64 p);
RestrictedAlgebra nilder_example(u64 p);
RestrictedAlgebra nocomp_example(u64 p);
RestrictedAlgebra noform_X(u64 p);
RestrictedAlgebra noform_Y(u64 p);
LiePtr noform_L(u64 p);
RestrictedAlgebra example_P(u64 p);
LiePtr example_Q(u64 p);
RestrictedAlgebra example_Qstar(u64 p);
RestrictedAlgebra example_T(u64 p);
RestrictedAlgebra atom_null(u64 p);
RestrictedAlgebra atom_nonnull(u64 p);
LambdaSpace notpn_lambda(u64 p, u32 n, u64 q);
LambdaSpace pnormal_variant_lambda();

}  // namespace catalog
}  // namespace plie
