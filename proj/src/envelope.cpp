#include "plie/envelope.hpp"

#include <algorithm>

namespace plie {

std::optional<Vec> ad_preimage(const LieAlgebra& L, const Mat& M) {
    const Field& F = *L.F;
    u32 n = L.dim;
    Mat sys(n * n, n);
    for (u32 j = 0; j < n; ++j) {
        Vec ej(n, 0);
        ej[j] = F.one();
        Mat adj = L.ad(ej);
        for (u32 r = 0; r < n; ++r)
            for (u32 c = 0; c < n; ++c) sys(r * n + c, j) = adj(r, c);
    }
    Vec rhs(n * n, 0);
    for (u32 r = 0; r < n; ++r)
        for (u32 c = 0; c < n; ++c) rhs[r * n + c] = M(r, c);
    return solve(F, sys, rhs);
}

u32 gl_p_closure_dim(const LieAlgebra& U) {
    const Field& F = *U.F;
    u32 n = U.dim;
    if (n == 0) return 0;
    auto flatten = [&](const Mat& M) {
        Vec v(n * n);
        for (u32 i = 0; i < n * n; ++i) v[i] = M.a[i];
        return v;
    };
    std::vector<Vec> flat;
    for (u32 i = 0; i < n; ++i) {
        Vec ei(n, 0);
        ei[i] = F.one();
        flat.push_back(flatten(U.ad(ei)));
    }
    Subspace span = subspace_span(F, n * n, flat);
    while (true) {
        std::vector<Mat> basis;
        for (const Vec& row : span.rows) {
            Mat M(n, n);
            for (u32 i = 0; i < n * n; ++i) M.a[i] = row[i];
            basis.push_back(std::move(M));
        }
        std::vector<Vec> extra;
        for (size_t i = 0; i < basis.size(); ++i) {
            Vec fp = flatten(mat_pow(F, basis[i], F.p()));
            if (!subspace_contains(F, span, fp)) extra.push_back(fp);
            for (size_t j = i + 1; j < basis.size(); ++j) {
                Vec br = flatten(mat_sub(F, mat_mul(F, basis[i], basis[j]),
                                         mat_mul(F, basis[j], basis[i])));
                if (!subspace_contains(F, span, br)) extra.push_back(br);
            }
        }
        if (extra.empty()) break;
        for (Vec& v : extra) flat.push_back(std::move(v));
        span = subspace_span(F, n * n, flat);
    }
    return span.dim();
}

namespace {

// Adjoin a derivation D of L as a new basis element f with [f, x] = D(x);
// Jacobi persists because D satisfies the Leibniz rule.
LiePtr adjoin_derivation(const LieAlgebra& L, const Mat& D) {
    u32 n = L.dim;
    auto bracket_ij = [&](u32 i, u32 j) {
        Vec r(n + 1, 0);
        if (j < n) {
            Vec b = L.bracket_basis(i, j);
            std::copy(b.begin(), b.end(), r.begin());
        } else if (i < n) {
            Vec ei(n, 0);
            ei[i] = L.F->one();
            Vec d = mat_apply(*L.F, D, ei);
            for (u32 t = 0; t < n; ++t) r[t] = L.F->neg(d[t]);  // [e_i, f] = -D(e_i)
        }
        return r;
    };
    return lie_from_bracket(L.F, n + 1, bracket_ij);
}

struct ClosureState {
    RestrictedAlgebra E;
    Mat iota;  // dim(E) x dim(U)
};

ClosureState close_around(const RestrictedAlgebra& R, const Mat& iota, u32 dimU) {
    const Field& F = R.field();
    std::vector<Vec> gens;
    for (u32 j = 0; j < dimU; ++j) {
        Vec col(R.dim(), 0);
        for (u32 r = 0; r < R.dim(); ++r) col[r] = iota(r, j);
        gens.push_back(std::move(col));
    }
    Subspace C = p_closure(R, subspace_span(F, R.dim(), gens), ClosureMode::Subalgebra);
    RestrictedView view = restricted_view(R, C);
    Mat iota2(C.dim(), dimU);
    for (u32 j = 0; j < dimU; ++j) {
        auto c = subspace_coords(F, C, gens[j]);
        if (!c) throw consistency_error("envelope: source escaped its own closure");
        for (u32 r = 0; r < C.dim(); ++r) iota2(r, j) = (*c)[r];
    }
    return {view.R, iota2};
}

Subspace embedded_source(const Field& F, const ClosureState& st, u32 dimU) {
    std::vector<Vec> rows;
    for (u32 j = 0; j < dimU; ++j) {
        Vec col(st.E.dim(), 0);
        for (u32 r = 0; r < st.E.dim(); ++r) col[r] = st.iota(r, j);
        rows.push_back(std::move(col));
    }
    return subspace_span(F, st.E.dim(), rows);
}

// Greedy complement of `inside` within `ambient_space`, scanning the whole
// space element by element; `only_null` restricts to vectors with zero
// p-image (needed to quotient safely).
Subspace greedy_complement(const RestrictedAlgebra& E, const Subspace& ambient_space,
                           const Subspace& inside, bool only_null, u64 element_budget) {
    const Field& F = E.field();
    u64 total = vec_count(F, ambient_space.dim());
    if (total > element_budget) throw capacity_error("envelope: centre scan over budget");
    Subspace acc = inside;
    std::vector<Vec> picked;
    for (u64 idx = 1; idx < total; ++idx) {
        Vec coef = vec_from_index(F, ambient_space.dim(), idx);
        Vec z(E.dim(), 0);
        for (u32 k = 0; k < ambient_space.dim(); ++k)
            if (coef[k] != 0) z = vec_add(F, z, vec_scale(F, coef[k], ambient_space.rows[k]));
        if (subspace_contains(F, acc, z)) continue;
        if (only_null && !vec_is_zero(evaluate_p(E, z))) continue;
        picked.push_back(z);
        std::vector<Vec> g = acc.rows;
        g.push_back(z);
        acc = subspace_span(F, E.dim(), g);
        if (acc.dim() == ambient_space.dim()) break;
    }
    return subspace_span(F, E.dim(), picked);
}

}  // namespace

Envelope minimal_p_envelope(LiePtr U, const Budget& bud) {
    const Field& F = *U->F;
    u64 p = F.p();
    u32 dimU = U->dim;
    // derivation tower until every ad(e)^p is inner
    LiePtr cur = U;
    u32 cap = dimU + gl_p_closure_dim(*U) + 8;
    while (true) {
        bool extended = false;
        for (u32 i = 0; i < cur->dim; ++i) {
            Vec ei(cur->dim, 0);
            ei[i] = F.one();
            Mat D = mat_pow(F, cur->ad(ei), p);
            if (!ad_preimage(*cur, D)) {
                cur = adjoin_derivation(*cur, D);
                extended = true;
                break;
            }
        }
        if (!extended) break;
        if (cur->dim > cap) throw consistency_error("minimal_p_envelope: tower exceeded its cap");
    }
    // least p-operation on the tower
    std::vector<Vec> images;
    for (u32 i = 0; i < cur->dim; ++i) {
        Vec ei(cur->dim, 0);
        ei[i] = F.one();
        auto b = ad_preimage(*cur, mat_pow(F, cur->ad(ei), p));
        if (!b) throw consistency_error("minimal_p_envelope: tower not restrictable");
        images.push_back(*b);
    }
    RestrictedAlgebra big = jacobson_construct(cur, images);
    Mat incl(cur->dim, dimU);
    for (u32 j = 0; j < dimU; ++j) incl(j, j) = F.one();
    ClosureState st = close_around(big, incl, dimU);
    // peel central [p]-ideals meeting the source trivially
    while (true) {
        Subspace src = embedded_source(F, st, dimU);
        Subspace Z = center(*st.E.L);
        if (subspace_leq(F, Z, src)) break;
        u32 dim_before = st.E.dim();
        Subspace meet = subspace_intersect(F, Z, src);
        Subspace Z0 = greedy_complement(st.E, Z, meet, false, bud.elements);
        st.E = null_on_ideal_pop(st.E, Z0);
        st = close_around(st.E, st.iota, dimU);
        // quotient away the remaining null central part outside the source
        src = embedded_source(F, st, dimU);
        Z = center(*st.E.L);
        meet = subspace_intersect(F, Z, src);
        Subspace Z1 = greedy_complement(st.E, Z, meet, true, bud.elements);
        if (Z1.dim() > 0) {
            RestrictedQuotient q = p_quotient(st.E, Z1);
            Mat iota3 = mat_mul(F, q.proj, st.iota);
            st = close_around(q.R, iota3, dimU);
        }
        if (st.E.dim() >= dim_before && Z1.dim() == 0)
            throw consistency_error("minimal_p_envelope: centre reduction stalled");
    }
    // certificates
    Envelope env{U, st.E, st.iota, true};
    if (rref(F, st.iota).rank != dimU)
        throw consistency_error("minimal_p_envelope: embedding not injective");
    for (u32 i = 0; i < dimU; ++i)
        for (u32 j = i + 1; j < dimU; ++j) {
            Vec ei(dimU, 0), ej(dimU, 0);
            ei[i] = F.one();
            ej[j] = F.one();
            Vec lhs = mat_apply(F, st.iota, U->bracket(ei, ej));
            Vec rhs = st.E.L->bracket(mat_apply(F, st.iota, ei), mat_apply(F, st.iota, ej));
            if (lhs != rhs) throw consistency_error("minimal_p_envelope: not a homomorphism");
        }
    Subspace src = embedded_source(F, st, dimU);
    if (!(p_closure(st.E, src, ClosureMode::Subalgebra) == subspace_full(F, st.E.dim())))
        throw consistency_error("minimal_p_envelope: closure certificate failed");
    u32 adU_dim = dimU - center(*U).dim();
    u32 expected = dimU + (gl_p_closure_dim(*U) - adU_dim);
    if (st.E.dim() != expected)
        throw consistency_error("minimal_p_envelope: dimension certificate failed (got " +
                                std::to_string(st.E.dim()) + ", expected " +
                                std::to_string(expected) + ")");
    if (!subspace_leq(F, center(*st.E.L), src))
        throw consistency_error("minimal_p_envelope: centre certificate failed");
    return env;
}

Envelope null_ideal_envelope(LiePtr U, const Subspace& A, const Budget& bud) {
    const Field& F = *U->F;
    Envelope env = minimal_p_envelope(U, bud);
    u32 dimU = U->dim;
    std::vector<Vec> arows;
    for (const Vec& r : A.rows) arows.push_back(mat_apply(F, env.embedding, r));
    Subspace Aimg = subspace_span(F, env.target.dim(), arows);
    RestrictedAlgebra modded = null_on_ideal_pop(env.target, Aimg);
    ClosureState st = close_around(modded, env.embedding, dimU);
    Envelope out{U, st.E, st.iota, false};
    for (const Vec& r : A.rows) {
        Vec img = mat_apply(F, st.iota, r);
        if (!vec_is_zero(evaluate_p(st.E, img)))
            throw consistency_error("null_ideal_envelope: operation does not vanish on A");
    }
    if (rref(F, st.iota).rank != dimU)
        throw consistency_error("null_ideal_envelope: embedding not injective");
    Subspace src = embedded_source(F, st, dimU);
    if (!(p_closure(st.E, src, ClosureMode::Subalgebra) == subspace_full(F, st.E.dim())))
        throw consistency_error("null_ideal_envelope: closure certificate failed");
    return out;
}

bool envd_membership(LiePtr U, const RClass& K, const Budget& bud) {
    Envelope env = minimal_p_envelope(U, bud);
    return is_member(env.target, K, bud);
}

}  // namespace plie
