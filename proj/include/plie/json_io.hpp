#pragma once

#include <json.hpp>

#include "plie/classes.hpp"

namespace plie {

using nlohmann::json;

json field_to_json(const Field& F);
FieldPtr field_from_json(const json& j);

json elem_to_json(const Field& F, Fel x);          // coefficient list, length m
Fel elem_from_json(const Field& F, const json& j);

json vec_to_json(const Field& F, const Vec& v);
Vec vec_from_json(const Field& F, const json& j);

json subspace_to_json(const Field& F, const Subspace& s);

/// Algebra interchange format:
/// {"field": {...}, "dim": n, "labels": [...],
///  "brackets": [{"i": i, "j": j, "value": [elem,...]}, ...],   // i < j
///  "p_images": [[elem,...], ...]}                              // optional
/// Omitted bracket pairs are zero. Loading without p_images attempts the
/// all-zero operation, else the algebra is carried unrestricted.
struct LoadedAlgebra {
    LiePtr L;
    std::optional<RestrictedAlgebra> R;
};

json algebra_to_json(const LieAlgebra& L);
json algebra_to_json(const RestrictedAlgebra& R);
LoadedAlgebra algebra_from_json(const json& j);

/// Lambda-space file: {"field": {...}, "ext_degree": d,
///                     "basis": [[int x (m*d)], ...]}   (extension elements)
json lambda_to_json(const LambdaSpace& lam);
LambdaSpace lambda_from_json(const json& j);

}  // namespace plie
