#include "plie/json_io.hpp"

namespace plie {

json field_to_json(const Field& F) {
    return json{{"p", F.p()}, {"m", F.m()}, {"modulus", F.modulus()}};
}

FieldPtr field_from_json(const json& j) {
    u64 p = j.at("p").get<u64>();
    u32 m = j.at("m").get<u32>();
    FieldPtr F = field_make(p, m);
    if (j.contains("modulus")) {
        auto mod = j.at("modulus").get<std::vector<u32>>();
        if (mod != F->modulus())
            throw std::invalid_argument(
                "field_from_json: modulus differs from the canonical choice");
    }
    return F;
}

json elem_to_json(const Field& F, Fel x) { return json(F.coeffs(x)); }

Fel elem_from_json(const Field& F, const json& j) {
    return F.from_coeffs(j.get<std::vector<u32>>());
}

json vec_to_json(const Field& F, const Vec& v) {
    json out = json::array();
    for (Fel x : v) out.push_back(elem_to_json(F, x));
    return out;
}

Vec vec_from_json(const Field& F, const json& j) {
    Vec v;
    for (const auto& e : j) v.push_back(elem_from_json(F, e));
    return v;
}

json subspace_to_json(const Field& F, const Subspace& s) {
    json rows = json::array();
    for (const Vec& r : s.rows) rows.push_back(vec_to_json(F, r));
    return json{{"ambient_dim", s.ambient}, {"basis", rows}};
}

json algebra_to_json(const LieAlgebra& L) {
    const Field& F = *L.F;
    json brackets = json::array();
    for (u32 i = 0; i < L.dim; ++i)
        for (u32 j = i + 1; j < L.dim; ++j) {
            const Vec& v = L.sc[LieAlgebra::pair_index(i, j, L.dim)];
            if (vec_is_zero(v)) continue;
            brackets.push_back(json{{"i", i}, {"j", j}, {"value", vec_to_json(F, v)}});
        }
    json out{{"field", field_to_json(F)}, {"dim", L.dim}, {"brackets", brackets}};
    if (L.labels.size() == L.dim) out["labels"] = L.labels;
    return out;
}

json algebra_to_json(const RestrictedAlgebra& R) {
    json out = algebra_to_json(*R.L);
    json imgs = json::array();
    for (const Vec& v : R.pop.images) imgs.push_back(vec_to_json(R.field(), v));
    out["p_images"] = imgs;
    return out;
}

LoadedAlgebra algebra_from_json(const json& j) {
    FieldPtr F = field_from_json(j.at("field"));
    u32 dim = j.at("dim").get<u32>();
    std::vector<Vec> sc(dim * (dim - 1) / 2, Vec(dim, 0));
    if (j.contains("brackets"))
        for (const auto& b : j.at("brackets")) {
            u32 i = b.at("i").get<u32>();
            u32 jj = b.at("j").get<u32>();
            if (i >= jj || jj >= dim)
                throw std::invalid_argument("algebra_from_json: bracket index out of order");
            sc[LieAlgebra::pair_index(i, jj, dim)] = vec_from_json(*F, b.at("value"));
        }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    LoadedAlgebra out;
    out.L = lie_make(F, dim, sc, labels);
    if (j.contains("p_images")) {
        std::vector<Vec> imgs;
        for (const auto& v : j.at("p_images")) imgs.push_back(vec_from_json(*F, v));
        out.R = jacobson_construct(out.L, imgs);  // throws when invalid
    } else {
        try {
            out.R = jacobson_construct(out.L, std::vector<Vec>(dim, Vec(dim, 0)));
        } catch (const std::invalid_argument&) {
            out.R = std::nullopt;  // carried unrestricted
        }
    }
    return out;
}

json lambda_to_json(const LambdaSpace& lam) {
    json basis = json::array();
    for (const Vec& row : lam.coords.rows) {
        std::vector<u32> digits(row.begin(), row.end());
        basis.push_back(digits);
    }
    return json{{"field", field_to_json(*lam.F)},
                {"ext_degree", lam.ext_degree},
                {"basis", basis}};
}

LambdaSpace lambda_from_json(const json& j) {
    FieldPtr F = field_from_json(j.at("field"));
    u32 d = j.at("ext_degree").get<u32>();
    FieldPtr E = field_make(F->p(), F->m() * d);
    std::vector<Fel> gens;
    for (const auto& b : j.at("basis")) {
        auto digits = b.get<std::vector<u32>>();
        gens.push_back(E->from_coeffs(digits));
    }
    return lambda_space(F, d, gens);
}

}  // namespace plie
