#include "plie/restricted.hpp"

#include <algorithm>

namespace plie {

namespace {

// matrix with polynomial entries, used for ad(tx+y)^(p-1)(x)
using PolyVec = std::vector<std::vector<Fel>>;  // per coordinate: coeffs in t

// Solve ad(b) = M for b; lexicographically least solution.
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

}  // namespace

Vec jacobson_correction(const LieAlgebra& L, const Vec& x, const Vec& y) {
    const Field& F = *L.F;
    u32 n = L.dim;
    u64 p = F.p();
    if (p == 0) throw std::logic_error("char 0");
    // w(t) = ad(tx+y)^(p-1)(x) with polynomial coordinates
    PolyVec w(n);
    for (u32 i = 0; i < n; ++i) w[i] = {x[i]};  // degree 0
    const Mat adx = L.ad(x), ady = L.ad(y);
    for (u64 step = 0; step < p - 1; ++step) {
        // apply ad(tx+y): new_i = sum over j of (t*adx + ady)(i,j) * w_j
        PolyVec nw(n);
        size_t deg = 0;
        for (u32 i = 0; i < n; ++i) deg = std::max(deg, w[i].size());
        for (u32 i = 0; i < n; ++i) nw[i].assign(deg + 1, 0);
        for (u32 i = 0; i < n; ++i)
            for (u32 j = 0; j < n; ++j) {
                Fel cx = adx(i, j), cy = ady(i, j);
                if (cx == 0 && cy == 0) continue;
                for (size_t d = 0; d < w[j].size(); ++d) {
                    Fel v = w[j][d];
                    if (v == 0) continue;
                    if (cy != 0) nw[i][d] = F.add(nw[i][d], F.mul(cy, v));
                    if (cx != 0) nw[i][d + 1] = F.add(nw[i][d + 1], F.mul(cx, v));
                }
            }
        w = std::move(nw);
    }
    // S(x,y) = sum_i s_i, with i*s_i = coefficient of t^(i-1)
    Vec S(n, 0);
    for (u64 i = 1; i <= p - 1; ++i) {
        Fel inv_i = F.inv(F.from_int(i));
        for (u32 c = 0; c < n; ++c) {
            Fel coef = (i - 1) < w[c].size() ? w[c][i - 1] : 0;
            if (coef != 0) S[c] = F.add(S[c], F.mul(inv_i, coef));
        }
    }
    return S;
}

Vec evaluate_p(const RestrictedAlgebra& R, const Vec& x) {
    const LieAlgebra& L = *R.L;
    const Field& F = *L.F;
    u32 n = L.dim;
    u64 p = F.p();
    // decompose over the basis; fold in one coordinate at a time:
    // (z + y)^[p] = z^[p] + y^[p] + S(z, y) with z = x_k e_k, y = the tail
    std::vector<u32> support;
    for (u32 i = 0; i < n; ++i)
        if (x[i] != 0) support.push_back(i);
    if (support.empty()) return Vec(n, 0);
    Vec acc_val(n, 0);   // value of tail^[p]
    Vec tail(n, 0);      // the tail itself
    for (size_t si = support.size(); si-- > 0;) {
        u32 k = support[si];
        Vec z(n, 0);
        z[k] = x[k];
        // z^[p] = x_k^p * e_k^[p]
        Vec zp = vec_scale(F, F.pow(x[k], p), R.pop.images[k]);
        if (vec_is_zero(tail)) {
            acc_val = zp;
        } else {
            Vec S = jacobson_correction(L, z, tail);
            acc_val = vec_add(F, vec_add(F, zp, acc_val), S);
        }
        tail = vec_add(F, tail, z);
    }
    // postcondition: ad(value) = ad(x)^p
    Mat lhs = L.ad(acc_val);
    Mat rhs = mat_pow(F, L.ad(x), p);
    if (!(lhs == rhs)) throw consistency_error("evaluate_p: ad(x^[p]) != ad(x)^p");
    return acc_val;
}

RestrictedAlgebra jacobson_construct(LiePtr L, std::vector<Vec> images) {
    if (images.size() != L->dim)
        throw std::invalid_argument("jacobson_construct: one image per basis element");
    const Field& F = *L->F;
    u64 p = F.p();
    for (u32 i = 0; i < L->dim; ++i) {
        Vec ei(L->dim, 0);
        ei[i] = F.one();
        Mat adp = mat_pow(F, L->ad(ei), p);
        if (!(adp == L->ad(images[i])))
            throw std::invalid_argument("jacobson_construct: ad(e_" + std::to_string(i) +
                                        ")^p is not ad of the proposed image");
    }
    return RestrictedAlgebra{std::move(L), POperation{std::move(images)}};
}

bool is_restrictable(const LieAlgebra& L) {
    const Field& F = *L.F;
    u64 p = F.p();
    for (u32 i = 0; i < L.dim; ++i) {
        Vec ei(L.dim, 0);
        ei[i] = F.one();
        if (!ad_preimage(L, mat_pow(F, L.ad(ei), p))) return false;
    }
    return true;
}

bool is_restrictable_by_scan(const LieAlgebra& L, u64 element_budget) {
    const Field& F = *L.F;
    u64 p = F.p();
    u64 total = vec_count(F, L.dim);
    if (total > element_budget) throw capacity_error("is_restrictable_by_scan: over budget");
    for (u64 idx = 0; idx < total; ++idx) {
        Vec x = vec_from_index(F, L.dim, idx);
        if (!ad_preimage(L, mat_pow(F, L.ad(x), p))) return false;
    }
    return true;
}

std::vector<RestrictedAlgebra> enumerate_p_operations(LiePtr L, u64 budget) {
    const Field& F = *L->F;
    u64 p = F.p();
    u32 n = L->dim;
    // reference images: least ad-preimages
    std::vector<Vec> base;
    for (u32 i = 0; i < n; ++i) {
        Vec ei(n, 0);
        ei[i] = F.one();
        auto b = ad_preimage(*L, mat_pow(F, L->ad(ei), p));
        if (!b) return {};  // not restrictable
        base.push_back(*b);
    }
    Subspace Z = center(*L);
    u64 zc = vec_count(F, Z.dim());
    u64 shifts = 1;
    for (u32 i = 0; i < n; ++i) {
        if (shifts > budget / zc && zc > 1)
            throw capacity_error("enumerate_p_operations: |Z|^dim over budget");
        shifts *= zc;
    }
    if (shifts > budget) throw capacity_error("enumerate_p_operations: |Z|^dim over budget");
    std::vector<RestrictedAlgebra> out;
    out.reserve(static_cast<size_t>(shifts));
    for (u64 s = 0; s < shifts; ++s) {
        u64 t = s;
        std::vector<Vec> imgs = base;
        for (u32 i = n; i-- > 0;) {
            u64 d = t % zc;
            t /= zc;
            if (d != 0) {
                Vec coef = vec_from_index(F, Z.dim(), d);
                for (u32 k = 0; k < Z.dim(); ++k)
                    if (coef[k] != 0) imgs[i] = vec_add(F, imgs[i], vec_scale(F, coef[k], Z.rows[k]));
            }
        }
        out.push_back(RestrictedAlgebra{L, POperation{std::move(imgs)}});
    }
    return out;
}

bool p_closed_check(const RestrictedAlgebra& R, const Subspace& U, ClosureMode kind) {
    const Field& F = R.field();
    if (kind == ClosureMode::Subalgebra && !is_subalgebra(*R.L, U)) return false;
    if (kind == ClosureMode::Ideal && !is_ideal(*R.L, U)) return false;
    // basis-image test; correction terms lie in U since U is a subalgebra
    for (const Vec& u : U.rows)
        if (!subspace_contains(F, U, evaluate_p(R, u))) return false;
    return true;
}

Subspace p_closure(const RestrictedAlgebra& R, const Subspace& U, ClosureMode kind) {
    const Field& F = R.field();
    Subspace cur = closure(*R.L, U, kind);
    while (true) {
        std::vector<Vec> gens = cur.rows;
        for (const Vec& u : cur.rows) gens.push_back(evaluate_p(R, u));
        Subspace next = closure(*R.L, subspace_span(F, R.dim(), gens), kind);
        if (next == cur) return cur;
        cur = next;
    }
}

RestrictedView restricted_view(const RestrictedAlgebra& R, const Subspace& U) {
    const Field& F = R.field();
    SubalgebraView v = subalgebra_view(*R.L, U);
    std::vector<Vec> images;
    for (u32 i = 0; i < U.dim(); ++i) {
        Vec img = evaluate_p(R, U.rows[i]);
        auto c = subspace_coords(F, U, img);
        if (!c) throw std::invalid_argument("restricted_view: not a [p]-subalgebra");
        images.push_back(*c);
    }
    return RestrictedView{jacobson_construct(v.algebra, std::move(images)), v};
}

std::vector<Subspace> p_subalgebra_lattice(const RestrictedAlgebra& R, u64 budget,
                                           scan::Mode mode) {
    auto keep = [&](const Subspace& S) {
        return is_subalgebra(*R.L, S) && p_closed_check(R, S, ClosureMode::Subalgebra);
    };
    return scan::subspaces(R.field(), R.dim(), keep, budget, mode);
}

std::vector<Subspace> p_ideal_lattice(const RestrictedAlgebra& R, u64 element_budget) {
    std::vector<Subspace> ideals = ideal_lattice(*R.L, element_budget);
    std::vector<Subspace> out;
    for (Subspace& I : ideals)
        if (p_closed_check(R, I, ClosureMode::Ideal)) out.push_back(std::move(I));
    return out;
}

std::vector<Subspace> maximal_p_subalgebras(const RestrictedAlgebra& R, u64 budget,
                                            scan::Mode mode) {
    return maximal_members(R.field(), p_subalgebra_lattice(R, budget, mode), R.dim());
}

Subspace p_frattini(const RestrictedAlgebra& R, u64 budget, scan::Mode mode) {
    auto maxes = maximal_p_subalgebras(R, budget, mode);
    Subspace psi = subspace_full(R.field(), R.dim());
    for (const Subspace& m : maxes) psi = subspace_intersect(R.field(), psi, m);
    return psi;
}

std::vector<Subspace> minimal_p_ideals(const RestrictedAlgebra& R, u64 element_budget) {
    const Field& F = R.field();
    const LieAlgebra& L = *R.L;
    if (L.dim == 0) return {};
    // containers along D_0 = L, D_{k+1} = p-closure of [D_k, D_k] as ideal
    std::vector<Subspace> containers;
    Subspace D = subspace_full(F, L.dim);
    while (true) {
        containers.push_back(subspace_intersect(F, centralizer(L, D), D));
        std::vector<Vec> gens;
        for (u32 i = 0; i < D.dim(); ++i)
            for (u32 j = i + 1; j < D.dim(); ++j) gens.push_back(L.bracket(D.rows[i], D.rows[j]));
        Subspace next = p_closure(R, subspace_span(F, L.dim, gens), ClosureMode::Ideal);
        if (next == D) {
            if (D.dim() > 0) containers.push_back(D);
            break;
        }
        if (next.dim() == 0) break;
        D = next;
    }
    auto cyclic_p_ideal = [&](const Vec& v) {
        return p_closure(R, subspace_span(F, L.dim, {v}), ClosureMode::Ideal);
    };
    std::vector<Subspace> cyc;
    for (const Subspace& C : containers) {
        u64 total = vec_count(F, C.dim());
        if (total > element_budget)
            throw capacity_error("minimal_p_ideals: container scan over budget");
        for (u64 idx = 1; idx < total; ++idx) {
            Vec coef = vec_from_index(F, C.dim(), idx);
            Vec v(L.dim, 0);
            for (u32 k = 0; k < C.dim(); ++k)
                if (coef[k] != 0) v = vec_add(F, v, vec_scale(F, coef[k], C.rows[k]));
            Subspace s = cyclic_p_ideal(v);
            if (std::find(cyc.begin(), cyc.end(), s) == cyc.end()) cyc.push_back(std::move(s));
        }
    }
    std::vector<Subspace> mins;
    for (const Subspace& s : cyc) {
        bool minimal = true;
        for (const Subspace& t : cyc)
            if (t.dim() < s.dim() && subspace_leq(F, t, s)) {
                minimal = false;
                break;
            }
        if (minimal) mins.push_back(s);
    }
    std::sort(mins.begin(), mins.end(),
              [](const Subspace& a, const Subspace& b) { return subspace_cmp(a, b) < 0; });
    return mins;
}

RestrictedQuotient p_quotient(const RestrictedAlgebra& R, const Subspace& K) {
    const Field& F = R.field();
    if (!p_closed_check(R, K, ClosureMode::Ideal))
        throw std::invalid_argument("p_quotient: not a [p]-ideal");
    Quotient q = quotient(*R.L, K);
    u32 qd = q.algebra->dim;
    std::vector<Vec> images;
    for (u32 i = 0; i < qd; ++i) {
        Vec lift(q.sect.rows, 0);
        for (u32 r = 0; r < q.sect.rows; ++r) lift[r] = q.sect(r, i);
        images.push_back(mat_apply(F, q.proj, evaluate_p(R, lift)));
    }
    RestrictedQuotient out{jacobson_construct(q.algebra, std::move(images)), q.proj, q.sect,
                           q.kernel};
    return out;
}

std::optional<Subspace> is_primitive(const RestrictedAlgebra& R, u64 element_budget) {
    for (const Subspace& A : minimal_p_ideals(R, element_budget)) {
        if (centralizer(*R.L, A) == A) return A;
    }
    return std::nullopt;
}

RestrictedAlgebra null_on_ideal_pop(const RestrictedAlgebra& R, const Subspace& A) {
    const Field& F = R.field();
    const LieAlgebra& L = *R.L;
    if (!is_ideal(L, A)) throw std::invalid_argument("null_on_ideal_pop: not an ideal");
    for (u32 i = 0; i < A.dim(); ++i)
        for (u32 j = i; j < A.dim(); ++j)
            if (!vec_is_zero(L.bracket(A.rows[i], A.rows[j])))
                throw std::invalid_argument("null_on_ideal_pop: ideal not abelian");
    // basis of A extended by complement coordinates keeping old images
    std::vector<bool> is_pivot(L.dim, false);
    for (u32 p : A.pivots) is_pivot[p] = true;
    std::vector<Vec> images(L.dim);
    // new basis: rows of A, then unit vectors at non-pivot coordinates. We
    // need images on the STANDARD basis; express via the change of basis.
    std::vector<Vec> nb;
    for (const Vec& r : A.rows) nb.push_back(r);
    for (u32 c = 0; c < L.dim; ++c)
        if (!is_pivot[c]) {
            Vec e(L.dim, 0);
            e[c] = F.one();
            nb.push_back(e);
        }
    std::vector<Vec> nb_images;
    for (u32 i = 0; i < L.dim; ++i) {
        if (i < A.dim())
            nb_images.push_back(Vec(L.dim, 0));  // null on A
        else
            nb_images.push_back(evaluate_p(R, nb[i]));  // keep old images elsewhere
    }
    // the new p-operation is determined by its values on the new basis;
    // convert to standard basis images through a temporary algebra-with-
    // basis: e_j = sum c_k nb_k, so e_j^[p'] needs full evaluation. Build a
    // RestrictedAlgebra on the same L with images defined on the standard
    // basis by re-evaluating: first construct on the permuted basis view.
    Mat B = mat_from_rows(nb, L.dim);  // rows are new basis
    // solve x * B = e_j to express e_j in new basis
    Mat Bt = mat_transpose(B);
    std::vector<Vec> std_images(L.dim);
    // temporary restricted structure on the new-basis algebra
    auto bracket_ij = [&](u32 i, u32 j) {
        Vec b = L.bracket(nb[i], nb[j]);
        auto sol = solve(F, Bt, b);  // coefficients in the new basis
        if (!sol) throw consistency_error("null_on_ideal_pop: change of basis failed");
        return *sol;
    };
    LiePtr Lnb = lie_from_bracket(L.F, L.dim, bracket_ij);
    std::vector<Vec> nb_images_local;
    for (u32 i = 0; i < L.dim; ++i) {
        auto sol = solve(F, Bt, nb_images[i]);
        if (!sol) throw consistency_error("null_on_ideal_pop: image outside space");
        nb_images_local.push_back(*sol);
    }
    RestrictedAlgebra Rnb = jacobson_construct(Lnb, nb_images_local);
    for (u32 j = 0; j < L.dim; ++j) {
        Vec ej(L.dim, 0);
        ej[j] = F.one();
        auto coords = solve(F, Bt, ej);
        if (!coords) throw consistency_error("null_on_ideal_pop: basis change failed");
        Vec val_local = evaluate_p(Rnb, *coords);
        // back to standard coordinates
        Vec val(L.dim, 0);
        for (u32 k = 0; k < L.dim; ++k)
            if (val_local[k] != 0) val = vec_add(F, val, vec_scale(F, val_local[k], nb[k]));
        std_images[j] = val;
    }
    return jacobson_construct(R.L, std_images);
}

std::optional<std::vector<Subspace>> is_p_subnormal(const RestrictedAlgebra& R,
                                                    const Subspace& S) {
    const Field& F = R.field();
    std::vector<Subspace> chain;
    Subspace T = subspace_full(F, R.dim());
    chain.push_back(T);
    while (true) {
        if (T == S) return chain;
        // ideal closure of S in T, then [p]-closure, all inside T
        RestrictedView tv = restricted_view(R, T);
        auto Sloc_rows = std::vector<Vec>{};
        for (const Vec& r : S.rows) {
            auto c = subspace_coords(F, T, r);
            if (!c) return std::nullopt;  // S not inside T: cannot happen if S <= L
            Sloc_rows.push_back(*c);
        }
        Subspace Sloc = subspace_span(F, T.dim(), Sloc_rows);
        Subspace next_loc = p_closure(tv.R, Sloc, ClosureMode::Ideal);
        // back to ambient
        std::vector<Vec> amb;
        for (const Vec& r : next_loc.rows) amb.push_back(tv.view.to_ambient(F, r));
        Subspace next = subspace_span(F, R.dim(), amb);
        if (next == T) return std::nullopt;  // stabilized above S
        chain.push_back(next);
        T = next;
    }
}

bool is_p_module(const RestrictedAlgebra& R, const Representation& rho) {
    const Field& F = R.field();
    u64 p = F.p();
    for (u32 i = 0; i < R.dim(); ++i) {
        Mat lhs = rho.act(F, R.pop.images[i]);
        Mat rhs = mat_pow(F, rho.action[i], p);
        if (!(lhs == rhs)) return false;
    }
    return true;
}

LiePtr split_extension(const Representation& rho) {
    const LieAlgebra& L = *rho.L;
    const Field& F = *L.F;
    u32 dv = rho.dim_v, n = dv + L.dim;
    auto bracket_ij = [&](u32 i, u32 j) {
        Vec r(n, 0);
        if (i < dv && j < dv) return r;  // module part abelian
        if (i >= dv && j >= dv) {
            Vec b = L.bracket_basis(i - dv, j - dv);
            std::copy(b.begin(), b.end(), r.begin() + dv);
            return r;
        }
        // i < dv <= j: [v, x] = -rho(x) v
        const Mat& A = rho.action[j - dv];
        for (u32 k = 0; k < dv; ++k) r[k] = F.neg(A(k, i));
        return r;
    };
    std::vector<std::string> labels;
    if (L.labels.size() == L.dim) {
        for (u32 i = 0; i < dv; ++i) labels.push_back("v" + std::to_string(i));
        labels.insert(labels.end(), L.labels.begin(), L.labels.end());
    }
    return lie_from_bracket(L.F, n, bracket_ij, labels);
}

RestrictedAlgebra restricted_split_extension(const RestrictedAlgebra& R,
                                             const Representation& rho,
                                             const std::vector<Vec>* module_images) {
    const Field& F = R.field();
    if (!is_p_module(R, rho))
        throw std::invalid_argument("restricted_split_extension: not a p-module");
    LiePtr X = split_extension(rho);
    u32 dv = rho.dim_v;
    std::vector<Vec> images(X->dim, Vec(X->dim, 0));
    if (module_images) {
        if (module_images->size() != dv)
            throw std::invalid_argument("restricted_split_extension: one image per module basis");
        // v^[p] must lie in V^L = invariants
        for (u32 i = 0; i < dv; ++i) {
            const Vec& img = (*module_images)[i];
            for (u32 t = 0; t < R.dim(); ++t)
                if (!vec_is_zero(mat_apply(F, rho.action[t], img)))
                    throw std::invalid_argument(
                        "restricted_split_extension: module image not invariant");
            for (u32 k = 0; k < dv; ++k) images[i][k] = img[k];
        }
    }
    for (u32 i = 0; i < R.dim(); ++i)
        for (u32 k = 0; k < R.dim(); ++k) images[dv + i][dv + k] = R.pop.images[i][k];
    return jacobson_construct(X, images);
}

bool is_atom(const RestrictedAlgebra& R, u64 element_budget) {
    const Field& F = R.field();
    if (R.dim() == 0) return false;
    u64 total = vec_count(F, R.dim());
    if (total > element_budget) throw capacity_error("is_atom: over budget");
    for (u64 idx = 1; idx < total; ++idx) {
        Vec v = vec_from_index(F, R.dim(), idx);
        if (p_closure(R, subspace_span(F, R.dim(), {v}), ClosureMode::Subalgebra).dim() != R.dim())
            return false;
    }
    return true;
}

RestrictedAlgebra restricted_direct_sum(const RestrictedAlgebra& A, const RestrictedAlgebra& B) {
    LiePtr L = direct_sum(*A.L, *B.L);
    std::vector<Vec> images(L->dim, Vec(L->dim, 0));
    for (u32 i = 0; i < A.dim(); ++i)
        for (u32 k = 0; k < A.dim(); ++k) images[i][k] = A.pop.images[i][k];
    for (u32 i = 0; i < B.dim(); ++i)
        for (u32 k = 0; k < B.dim(); ++k) images[A.dim() + i][A.dim() + k] = B.pop.images[i][k];
    return jacobson_construct(L, images);
}

Representation chief_factor_module(const RestrictedAlgebra& R, const Subspace& upper,
                                   const Subspace& lower) {
    const Field& F = R.field();
    const LieAlgebra& L = *R.L;
    // factor basis: rows of upper reduced mod lower
    std::vector<Vec> fb;
    for (const Vec& r : upper.rows) {
        Vec v = r;
        for (u32 k = 0; k < lower.dim(); ++k) {
            Fel c = v[lower.pivots[k]];
            if (c != 0) v = vec_sub(F, v, vec_scale(F, c, lower.rows[k]));
        }
        if (!vec_is_zero(v)) fb.push_back(std::move(v));
    }
    Subspace carrier = subspace_span(F, R.dim(), fb);
    u32 d = carrier.dim();
    auto to_factor = [&](Vec v) {
        for (u32 k = 0; k < lower.dim(); ++k) {
            Fel c = v[lower.pivots[k]];
            if (c != 0) v = vec_sub(F, v, vec_scale(F, c, lower.rows[k]));
        }
        auto coords = subspace_coords(F, carrier, v);
        if (!coords) throw consistency_error("chief_factor_module: escape from carrier");
        return *coords;
    };
    std::vector<Mat> act;
    for (u32 t = 0; t < L.dim; ++t) {
        Vec et(L.dim, 0);
        et[t] = F.one();
        Mat M(d, d);
        for (u32 j = 0; j < d; ++j) {
            Vec img = L.bracket(et, carrier.rows[j]);
            Vec fc = to_factor(img);
            for (u32 r = 0; r < d; ++r) M(r, j) = fc[r];
        }
        act.push_back(std::move(M));
    }
    return rep_make(R.L, d, std::move(act));
}

RestrictedAlgebra chief_factor_algebra(const RestrictedAlgebra& R, const Subspace& upper,
                                       const Subspace& lower) {
    // upper/lower as an abelian restricted algebra with the induced images
    RestrictedView uv = restricted_view(R, upper);
    const Field& F = R.field();
    // lower inside the view coordinates
    std::vector<Vec> low_loc;
    for (const Vec& r : lower.rows) {
        auto c = subspace_coords(F, upper, r);
        if (!c) throw std::invalid_argument("chief_factor_algebra: lower not inside upper");
        low_loc.push_back(*c);
    }
    return p_quotient(uv.R, subspace_span(F, upper.dim(), low_loc)).R;
}

ChiefSeries p_chief_series(const RestrictedAlgebra& R, u64 element_budget) {
    const Field& F = R.field();
    ChiefSeries cs;
    // build ascending via quotients, then flip: repeatedly pick the least
    // minimal [p]-ideal of the current quotient and pull it back
    std::vector<Subspace> ascending;  // in L-coordinates
    ascending.push_back(subspace_zero(R.dim()));
    RestrictedAlgebra cur = R;
    Mat lift = mat_identity(F, R.dim());   // section: cur coords -> L coords
    while (ascending.back().dim() < R.dim()) {
        auto mins = minimal_p_ideals(cur, element_budget);
        if (mins.empty()) throw consistency_error("p_chief_series: no minimal [p]-ideal");
        const Subspace& A = mins.front();  // lexicographically least
        // pull back to L: preimage = span(lift(A rows)) + current kernel
        std::vector<Vec> gens;
        for (const Vec& r : A.rows) gens.push_back(mat_apply(F, lift, r));
        for (const Vec& r : ascending.back().rows) gens.push_back(r);
        Subspace next = subspace_span(F, R.dim(), gens);
        ascending.push_back(next);
        if (next.dim() == R.dim()) break;
        // quotient further
        RestrictedQuotient q = p_quotient(cur, A);
        lift = mat_mul(F, lift, q.sect);
        cur = q.R;
    }
    // descending terms
    for (size_t i = ascending.size(); i-- > 0;) cs.terms.push_back(ascending[i]);
    // classify factors: factor i = terms[i]/terms[i+1]
    for (size_t i = 0; i + 1 < cs.terms.size(); ++i) {
        const Subspace& up = cs.terms[i];
        const Subspace& lo = cs.terms[i + 1];
        ChiefFactor f;
        f.upper = up;
        f.lower = lo;
        f.dim = up.dim() - lo.dim();
        // null: x^[p] in lower for all x in upper
        f.null_factor = true;
        for (const Vec& r : up.rows)
            if (!subspace_contains(F, lo, evaluate_p(R, r))) {
                f.null_factor = false;
                break;
            }
        // central: [L, upper] <= lower
        f.central = true;
        for (u32 t = 0; t < R.dim() && f.central; ++t) {
            Vec et(R.dim(), 0);
            et[t] = F.one();
            for (const Vec& r : up.rows)
                if (!subspace_contains(F, lo, R.L->bracket(et, r))) {
                    f.central = false;
                    break;
                }
        }
        RestrictedAlgebra fa = chief_factor_algebra(R, up, lo);
        f.atom_factor = is_atom(fa, element_budget);
        cs.factors.push_back(std::move(f));
    }
    return cs;
}

}  // namespace plie
