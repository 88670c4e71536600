#include "plie/catalog.hpp"

#include <algorithm>

#include "plie/iso.hpp"

namespace plie {
namespace catalog {

namespace {

LiePtr der_underlying(FieldPtr F) {
    std::vector<Vec> sc(3, Vec(3, 0));
    sc[LieAlgebra::pair_index(0, 1, 3)] = {0, F->one(), 0};
    return lie_make(F, 3, sc, {"a", "b", "c"});
}

// U-modules of the noform family
Representation noform_V(LiePtr U) {
    const Field& F = *U->F;
    u32 dv = static_cast<u32>(F.p());
    Mat A(dv, dv), B(dv, dv), C(dv, dv);
    for (u32 i = 0; i < dv; ++i) {
        A(i, i) = F.from_int(i);
        B((i + 1) % dv, i) = F.one();
        C(i, i) = F.one();
    }
    return rep_make(U, dv, {A, B, C});
}

Representation noform_W(LiePtr U) {
    const Field& F = *U->F;
    Mat A(2, 2), B(2, 2), C(2, 2);
    A(1, 1) = F.one();
    B(1, 0) = F.neg(F.one());
    C(0, 0) = C(1, 1) = F.one();
    return rep_make(U, 2, {A, B, C});
}

}  // namespace

RestrictedAlgebra der_example(u64 p) {
    auto F = field_make(p, 1);
    return jacobson_construct(der_underlying(F),
                              {{F->one(), 0, 0}, {0, 0, F->one()}, {0, 0, 0}});
}

RestrictedAlgebra nilder_example(u64 p) {
    auto F = field_make(p, 1);
    std::vector<Vec> sc(6, Vec(4, 0));
    sc[LieAlgebra::pair_index(0, 1, 4)] = {0, 0, F->one(), 0};
    auto N = lie_make(F, 4, sc, {"a", "b", "c", "d"});
    return jacobson_construct(N, {Vec(4, 0), Vec(4, 0), {0, 0, 0, F->one()}, Vec(4, 0)});
}

RestrictedAlgebra nocomp_example(u64 p) {
    auto F = field_make(p, 1);
    auto L = lie_make(F, 2, {Vec{0, 0}}, {"a", "b"});
    return jacobson_construct(L, {{0, 0}, {F->one(), 0}});
}

RestrictedAlgebra noform_X(u64 p) {
    auto F = field_make(p, 1);
    auto U = der_underlying(F);
    auto RU = jacobson_construct(
        U, {{F->one(), 0, 0}, {0, 0, F->one()}, {0, 0, F->one()}});  // a, c, c
    return restricted_split_extension(RU, noform_V(U));
}

RestrictedAlgebra noform_Y(u64 p) {
    auto F = field_make(p, 1);
    auto U = der_underlying(F);
    auto RU = jacobson_construct(U, {{F->one(), 0, 0}, Vec(3, 0), {0, 0, F->one()}});  // a, 0, c
    return restricted_split_extension(RU, noform_W(U));
}

LiePtr noform_L(u64 p) {
    auto F = field_make(p, 1);
    auto U = der_underlying(F);
    Representation V = noform_V(U);
    Representation W = noform_W(U);
    u32 dv = V.dim_v + W.dim_v;
    std::vector<Mat> act;
    for (u32 t = 0; t < 3; ++t) {
        Mat M(dv, dv);
        for (u32 i = 0; i < V.dim_v; ++i)
            for (u32 j = 0; j < V.dim_v; ++j) M(i, j) = V.action[t](i, j);
        for (u32 i = 0; i < W.dim_v; ++i)
            for (u32 j = 0; j < W.dim_v; ++j) M(V.dim_v + i, V.dim_v + j) = W.action[t](i, j);
        act.push_back(std::move(M));
    }
    return split_extension(rep_make(U, dv, act));
}

RestrictedAlgebra example_P(u64 p) {
    auto F = field_make(p, 1);
    std::vector<Vec> sc(3, Vec(3, 0));
    sc[LieAlgebra::pair_index(0, 1, 3)] = {0, 0, F->one()};  // [a,b] = c
    auto N = lie_make(F, 3, sc, {"a", "b", "c"});
    u32 dk = static_cast<u32>(p);
    Mat A(dk, dk), B(dk, dk), C(dk, dk);
    for (u32 i = 0; i < dk; ++i) {
        A((i + dk - 1) % dk, i) = F->from_int(i);  // a k_i = i k_{i-1}
        B((i + 1) % dk, i) = F->one();             // b k_i = k_{i+1}
        C(i, i) = F->one();                        // c k_i = k_i
    }
    Representation K = rep_make(N, dk, {A, B, C});
    auto RN = jacobson_construct(N, {Vec(3, 0), {0, 0, F->one()}, {0, 0, F->one()}});
    return restricted_split_extension(RN, K);
}

LiePtr example_Q(u64 p) {
    auto F = field_make(p, 1);
    auto S = lie_make(F, 2, {Vec{0, F->one()}}, {"x", "y"});
    u32 dv = static_cast<u32>(p);
    Mat X(dv, dv), Y(dv, dv);
    for (u32 i = 0; i < dv; ++i) {
        X(i, i) = F->from_int(i);
        Y((i + 1) % dv, i) = F->one();
    }
    return split_extension(rep_make(S, dv, {X, Y}));
}

RestrictedAlgebra example_Qstar(u64 p) {
    auto F = field_make(p, 1);
    std::vector<Vec> sc(3, Vec(3, 0));
    sc[LieAlgebra::pair_index(0, 1, 3)] = {0, F->one(), 0};  // [x,y] = y
    auto Sstar = lie_make(F, 3, sc, {"x", "y", "z"});
    u32 dv = static_cast<u32>(p);
    Mat X(dv, dv), Y(dv, dv), Z(dv, dv);
    for (u32 i = 0; i < dv; ++i) {
        X(i, i) = F->from_int(i);
        Y((i + 1) % dv, i) = F->one();
        Z(i, i) = F->one();
    }
    Representation rho = rep_make(Sstar, dv, {X, Y, Z});
    auto R = jacobson_construct(Sstar,
                                {{F->one(), 0, 0}, {0, 0, F->one()}, {0, 0, F->one()}});
    return restricted_split_extension(R, rho);
}

RestrictedAlgebra example_T(u64 p) {
    auto F = field_make(p, 1);
    std::vector<Vec> scN(3, Vec(3, 0));
    scN[LieAlgebra::pair_index(0, 1, 3)] = {0, 0, F->one()};
    auto N = lie_make(F, 3, scN, {"a", "b", "c"});
    auto RN = jacobson_construct(N, {Vec(3, 0), {0, 0, F->one()}, {0, 0, F->one()}});
    std::vector<Vec> scS(3, Vec(3, 0));
    scS[LieAlgebra::pair_index(0, 1, 3)] = {0, F->one(), 0};
    auto Sstar = lie_make(F, 3, scS, {"x", "y", "z"});
    auto RS = jacobson_construct(Sstar,
                                 {{F->one(), 0, 0}, {0, 0, F->one()}, {0, 0, F->one()}});
    RestrictedAlgebra top = restricted_direct_sum(RN, RS);
    u32 dk = static_cast<u32>(p), dv = static_cast<u32>(p);
    Mat KA(dk, dk), KB(dk, dk), KC(dk, dk);
    for (u32 i = 0; i < dk; ++i) {
        KA((i + dk - 1) % dk, i) = F->from_int(i);
        KB((i + 1) % dk, i) = F->one();
        KC(i, i) = F->one();
    }
    Mat VX(dv, dv), VY(dv, dv), VZ(dv, dv);
    for (u32 i = 0; i < dv; ++i) {
        VX(i, i) = F->from_int(i);
        VY((i + 1) % dv, i) = F->one();
        VZ(i, i) = F->one();
    }
    std::vector<Mat> kact = {KA, KB, KC}, vact = {VX, VY, VZ};
    u32 d = dk * dv;
    std::vector<Mat> act;
    for (u32 t = 0; t < 6; ++t) {
        Mat M(d, d);
        if (t < 3) {
            for (u32 i = 0; i < dk; ++i)
                for (u32 r = 0; r < dk; ++r) {
                    Fel c = kact[t](r, i);
                    if (c == 0) continue;
                    for (u32 j = 0; j < dv; ++j) M(r * dv + j, i * dv + j) = c;
                }
        } else {
            for (u32 j = 0; j < dv; ++j)
                for (u32 s = 0; s < dv; ++s) {
                    Fel c = vact[t - 3](s, j);
                    if (c == 0) continue;
                    for (u32 i = 0; i < dk; ++i) M(i * dv + s, i * dv + j) = c;
                }
        }
        act.push_back(std::move(M));
    }
    Representation rho = rep_make(top.L, d, act);
    RestrictedAlgebra X = restricted_split_extension(top, rho);
    // c and z both act as the identity on K tensor V, so c - z is a central
    // kernel vector; the primitive algebra is the quotient by it
    Vec cz(X.dim(), 0);
    cz[d + 2] = F->one();
    cz[d + 5] = F->neg(F->one());
    Subspace ker = subspace_span(*F, X.dim(), {cz});
    return p_quotient(X, ker).R;
}

RestrictedAlgebra atom_null(u64 p) {
    auto F = field_make(p, 1);
    auto L = lie_make(F, 1, {});
    return jacobson_construct(L, {Vec{0}});
}

RestrictedAlgebra atom_nonnull(u64 p) {
    auto F = field_make(p, 1);
    auto L = lie_make(F, 1, {});
    return jacobson_construct(L, {Vec{F->one()}});
}

LambdaSpace notpn_lambda(u64 p, u32 n, u64 q) {
    auto F = field_make(p, n);
    std::vector<bool> is_power(F->size(), false);
    for (u64 x = 1; x < F->size(); ++x) is_power[F->pow(static_cast<Fel>(x), q)] = true;
    Fel c = 0;
    bool found = false;
    for (u64 x = 1; x < F->size() && !found; ++x)
        if (!is_power[x]) {
            c = static_cast<Fel>(x);
            found = true;
        }
    if (!found) throw std::invalid_argument("notpn_lambda: every element has a q-th root");
    auto E = field_make(p, n * static_cast<u32>(q));
    Embedding emb(F, E);
    Poly f;
    f.c.assign(static_cast<size_t>(q) + 1, 0);
    f.c[0] = E->neg(emb(c));
    f.c[static_cast<size_t>(q)] = E->one();  // t^q - c
    auto roots = roots_in(*E, f);
    if (roots.empty()) throw consistency_error("notpn_lambda: no root in the degree-q extension");
    return lambda_space(F, static_cast<u32>(q), roots);
}

LambdaSpace pnormal_variant_lambda() {
    // p = 3, q = 2 | p-1: c = 2 has no square root in GF(3)
    auto F = field_make(3, 1);
    auto E = field_make(3, 2);
    Embedding emb(F, E);
    Poly f = poly_from({E->neg(emb(2)), 0, E->one()});
    auto roots = roots_in(*E, f);
    if (roots.size() != 2) throw consistency_error("pnormal_variant_lambda: expected two roots");
    return lambda_space(F, 2, {roots[0]});
}

const std::vector<Entry>& entries() {
    static const std::vector<Entry> table = {
        {"der", "3-dim ab=b with a^[p]=a, b^[p]=c, c^[p]=0", 2,
         {"derived-not-p-ideal", "psi-strictly-contains-phi", "soluble-not-nilpotent",
          "in-pC", "pA-residual-is-derived-closure"}},
        {"nilder", "4-dim nilpotent ab=c with c^[p]=d", 2,
         {"derived-not-p-ideal", "psi-strictly-contains-phi", "nilpotent"}},
        {"nocomp", "2-dim abelian, b^[p]=a: complemented ideal without [p]-complement", 2,
         {"vector-complement-exists", "no-p-complement"}},
        {"noform_X", "split extension of the weight module V by ab=b", 2, {"restrictable"}},
        {"noform_Y", "split extension of the 2-dim module W by ab=b", 2, {"restrictable"}},
        {"noform_L", "split extension of V + W: admits no p-operation", 2,
         {"not-restrictable"}},
        {"P", "split extension of the p-dim module K by the Heisenberg algebra", 3,
         {"restricted", "in-ploc-pN2"}},
        {"Q", "split extension of the weight module V by xy=y: not restrictable", 3,
         {"not-restrictable"}},
        {"Qstar", "Q with an extra identity generator z", 3,
         {"restricted", "minimal-envelope-of-Q", "in-ploc-M"}},
        {"T", "split extension of K tensor V by N + S*", 3,
         {"primitive", "not-in-ploc-pN2", "not-in-ploc-M"}},
        {"P_lambda", "primitive completely soluble algebra of an eigenvalue", 2,
         {"primitive", "completely-soluble"}},
        {"notpn", "span of the conjugates of a q-th root: not p-normal", 2,
         {"not-p-normal", "conjugation-closed"}},
        {"pnormal_variant", "q | p-1 variant: p-normal", 3, {"p-normal"}},
        {"atom_null", "1-dim null atom", 2, {"atom", "primitive"}},
        {"atom_nonnull", "1-dim with a^[p]=a", 2, {"atom", "primitive"}},
    };
    return table;
}

Value build(const std::string& key, u64 p) {
    Value v;
    if (key == "der") v.restricted = der_example(p);
    else if (key == "nilder") v.restricted = nilder_example(p);
    else if (key == "nocomp") v.restricted = nocomp_example(p);
    else if (key == "noform_X") v.restricted = noform_X(p);
    else if (key == "noform_Y") v.restricted = noform_Y(p);
    else if (key == "noform_L") v.ordinary = noform_L(p);
    else if (key == "P") v.restricted = example_P(p);
    else if (key == "Q") v.ordinary = example_Q(p);
    else if (key == "Qstar") v.restricted = example_Qstar(p);
    else if (key == "T") v.restricted = example_T(p);
    else if (key == "P_lambda") {
        auto F = field_make(p, 1);
        v.restricted = build_P_lambda(lambda_prime_field(F), F->one());
    } else if (key == "notpn") {
        auto [n, q] = find_qn(p);
        v.lambda = notpn_lambda(p, n, q);
    } else if (key == "pnormal_variant") v.lambda = pnormal_variant_lambda();
    else if (key == "atom_null") v.restricted = atom_null(p);
    else if (key == "atom_nonnull") v.restricted = atom_nonnull(p);
    else throw std::invalid_argument("catalog: unknown key '" + key + "'");
    return v;
}

std::vector<FactResult> check_facts(const std::string& key, u64 p, const Budget& bud) {
    std::vector<FactResult> out;
    const Entry* entry = nullptr;
    for (const Entry& e : entries())
        if (e.key == key) entry = &e;
    if (!entry) throw std::invalid_argument("catalog: unknown key '" + key + "'");
    Value v = build(key, p);
    auto push = [&](const std::string& fact, bool pass, const std::string& detail = "") {
        out.push_back({key, p, fact, pass, detail});
    };
    for (const std::string& fact : entry->facts) {
        try {
            if (fact == "derived-not-p-ideal") {
                const auto& R = *v.restricted;
                Subspace D = derived_subalgebra(*R.L);
                push(fact, !p_closed_check(R, D, ClosureMode::Ideal));
            } else if (fact == "psi-strictly-contains-phi") {
                const auto& R = *v.restricted;
                Subspace psi = p_frattini(R, bud.subspaces);
                Subspace phi = frattini(*R.L, bud.subspaces);
                push(fact, subspace_leq(R.field(), phi, psi) && psi.dim() > phi.dim());
            } else if (fact == "soluble-not-nilpotent") {
                const auto& R = *v.restricted;
                push(fact, is_soluble(*R.L) && !is_nilpotent(*R.L));
            } else if (fact == "nilpotent") {
                push(fact, is_nilpotent(*v.restricted->L));
            } else if (fact == "in-pC") {
                push(fact, is_member(*v.restricted, *class_pC(), bud));
            } else if (fact == "pA-residual-is-derived-closure") {
                const auto& R = *v.restricted;
                Subspace res = residual(R, *class_pA(), bud);
                push(fact, res == p_closure(R, derived_subalgebra(*R.L), ClosureMode::Ideal));
            } else if (fact == "vector-complement-exists") {
                const auto& R = *v.restricted;
                Subspace A = subspace_span(R.field(), 2, {{R.field().one(), 0}});
                push(fact, complement_abelian_ideal(*R.L, A).has_value());
            } else if (fact == "no-p-complement") {
                const auto& R = *v.restricted;
                Subspace A = subspace_span(R.field(), 2, {{R.field().one(), 0}});
                bool any = false;
                for (const Subspace& C : all_complements(*R.L, A, bud.subspaces))
                    if (p_closed_check(R, C, ClosureMode::Subalgebra)) any = true;
                push(fact, !any);
            } else if (fact == "restrictable" || fact == "restricted") {
                if (v.restricted)
                    push(fact, is_restrictable(*v.restricted->L));
                else
                    push(fact, is_restrictable(**v.ordinary));
            } else if (fact == "not-restrictable") {
                push(fact, !is_restrictable(**v.ordinary));
            } else if (fact == "in-ploc-pN2") {
                push(fact, class_ploc(class_nilpotent_class_le(2))->direct(*v.restricted, bud));
            } else if (fact == "in-ploc-M") {
                push(fact,
                     class_ploc(class_metabelian_nilpotent_abelian())->direct(*v.restricted, bud));
            } else if (fact == "not-in-ploc-pN2") {
                push(fact, !class_ploc(class_nilpotent_class_le(2))->direct(*v.restricted, bud));
            } else if (fact == "not-in-ploc-M") {
                push(fact,
                     !class_ploc(class_metabelian_nilpotent_abelian())->direct(*v.restricted, bud));
            } else if (fact == "primitive") {
                push(fact, is_primitive(*v.restricted, bud.elements).has_value());
            } else if (fact == "completely-soluble") {
                push(fact, class_pC()->direct(*v.restricted, bud));
            } else if (fact == "minimal-envelope-of-Q") {
                Envelope env = minimal_p_envelope(example_Q(p), bud);
                bool ok = env.target.dim() == v.restricted->dim() &&
                          isomorphic(*env.target.L, *v.restricted->L, bud.iso_nodes);
                push(fact, ok);
            } else if (fact == "atom") {
                push(fact, is_atom(*v.restricted, bud.elements));
            } else if (fact == "not-p-normal") {
                push(fact, !is_p_normal(*v.lambda).p_normal);
            } else if (fact == "conjugation-closed") {
                push(fact, is_p_normal(*v.lambda).conjugation_closed);
            } else if (fact == "p-normal") {
                push(fact, is_p_normal(*v.lambda).p_normal);
            } else {
                push(fact, false, "unknown fact id");
            }
        } catch (const std::exception& e) {
            push(fact, false, e.what());
        }
    }
    return out;
}

// ------------------------------------------------------- small enumeration

namespace {

u64 pow_u64(u64 b, u64 e) {
    u64 r = 1;
    while (e--) {
        if (r > (u64(1) << 62) / b) throw capacity_error("enumerate_small: table space too large");
        r *= b;
    }
    return r;
}

std::optional<LiePtr> algebra_from_table(FieldPtr F, u32 dim, u64 index) {
    u32 npairs = dim * (dim - 1) / 2;
    u64 q = F->size();
    std::vector<Vec> sc(npairs, Vec(dim, 0));
    for (u32 pr = npairs; pr-- > 0;)
        for (u32 k = dim; k-- > 0;) {
            sc[pr][k] = static_cast<Fel>(index % q);
            index /= q;
        }
    try {
        return lie_make(F, dim, sc);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

SmallAlgebra with_operations(LiePtr L, const Budget& bud) {
    SmallAlgebra out;
    out.algebra = L;
    out.restrictable = is_restrictable(*L);
    if (out.restrictable) out.operations = enumerate_p_operations(L, bud.p_operations);
    return out;
}

}  // namespace

std::vector<SmallAlgebra> enumerate_small(u64 p, u32 max_dim, const Budget& bud) {
    auto F = field_make(p, 1);
    std::vector<SmallAlgebra> out;
    for (u32 dim = 1; dim <= max_dim; ++dim) {
        u32 npairs = dim * (dim - 1) / 2;
        u64 total = pow_u64(F->size(), static_cast<u64>(npairs) * dim);
        std::vector<LiePtr> reps;
        for (u64 idx = 0; idx < total; ++idx) {
            auto L = algebra_from_table(F, dim, idx);
            if (!L) continue;
            bool dup = false;
            if (dim <= 3) {
                for (const LiePtr& R : reps)
                    if (isomorphic(**L, *R, bud.iso_nodes)) {
                        dup = true;
                        break;
                    }
            }
            if (!dup) reps.push_back(*L);
        }
        for (const LiePtr& L : reps) out.push_back(with_operations(L, bud));
    }
    return out;
}

std::vector<SmallAlgebra> enumerate_sampled(u64 p, u32 dim, u32 count, u64 seed,
                                            const Budget& bud) {
    auto F = field_make(p, 1);
    u32 npairs = dim * (dim - 1) / 2;
    u64 total = pow_u64(F->size(), static_cast<u64>(npairs) * dim);
    std::vector<SmallAlgebra> out;
    u64 state = seed;
    auto next = [&]() {
        state += 0x9E3779B97f4A7C15ULL;
        u64 z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    };
    u32 tries = 0;
    while (out.size() < count && tries < count * 200) {
        ++tries;
        u64 idx = next() % total;
        auto L = algebra_from_table(F, dim, idx);
        if (!L) continue;
        out.push_back(with_operations(*L, bud));
    }
    return out;
}

}  // namespace catalog
}  // namespace plie
