#include "plie/rep.hpp"

#include <algorithm>

namespace plie {

Mat Representation::act(const Field& F, const Vec& x) const {
    Mat M(dim_v, dim_v);
    for (u32 i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        M = mat_add(F, M, mat_scale(F, x[i], action[i]));
    }
    return M;
}

Vec Representation::apply(const Field& F, const Vec& x, const Vec& v) const {
    Vec r(dim_v, 0);
    for (u32 i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        r = vec_add(F, r, vec_scale(F, x[i], mat_apply(F, action[i], v)));
    }
    return r;
}

Representation rep_make(LiePtr L, u32 dim_v, std::vector<Mat> action) {
    if (action.size() != L->dim) throw std::invalid_argument("rep_make: one matrix per basis element");
    const Field& F = *L->F;
    for (const Mat& M : action)
        if (M.rows != dim_v || M.cols != dim_v)
            throw std::invalid_argument("rep_make: matrix dimension mismatch");
    Representation rho{L, dim_v, std::move(action)};
    for (u32 i = 0; i < L->dim; ++i)
        for (u32 j = i + 1; j < L->dim; ++j) {
            Mat lhs = rho.act(F, L->bracket_basis(i, j));
            Mat rhs = mat_sub(F, mat_mul(F, rho.action[i], rho.action[j]),
                              mat_mul(F, rho.action[j], rho.action[i]));
            if (!(lhs == rhs))
                throw std::invalid_argument("rep_make: not a representation at basis pair (" +
                                            std::to_string(i) + "," + std::to_string(j) + ")");
        }
    return rho;
}

Representation rep_trivial(LiePtr L, u32 dim_v) {
    std::vector<Mat> act(L->dim, Mat(dim_v, dim_v));
    return rep_make(std::move(L), dim_v, std::move(act));
}

Representation rep_adjoint(LiePtr L) {
    std::vector<Mat> act;
    act.reserve(L->dim);
    for (u32 i = 0; i < L->dim; ++i) {
        Vec ei(L->dim, 0);
        ei[i] = L->F->one();
        act.push_back(L->ad(ei));
    }
    u32 n = L->dim;
    return rep_make(std::move(L), n, std::move(act));
}

bool is_submodule(const Representation& rho, const Subspace& W) {
    const Field& F = *rho.L->F;
    for (const Mat& M : rho.action)
        for (const Vec& w : W.rows)
            if (!subspace_contains(F, W, mat_apply(F, M, w))) return false;
    return true;
}

Subspace cyclic_submodule(const Representation& rho, const Vec& v) {
    const Field& F = *rho.L->F;
    Subspace cur = subspace_span(F, rho.dim_v, {v});
    while (true) {
        std::vector<Vec> gens = cur.rows;
        for (const Mat& M : rho.action)
            for (const Vec& w : cur.rows) gens.push_back(mat_apply(F, M, w));
        Subspace next = subspace_span(F, rho.dim_v, gens);
        if (next == cur) return cur;
        cur = next;
    }
}

std::vector<Subspace> submodules(const Representation& rho, u64 budget) {
    const Field& F = *rho.L->F;
    u64 total = vec_count(F, rho.dim_v);
    if (total > budget) throw capacity_error("submodules: module too large to scan");
    // cyclic submodules, deduplicated
    std::vector<Subspace> cyc;
    for (u64 idx = 1; idx < total; ++idx) {
        Subspace s = cyclic_submodule(rho, vec_from_index(F, rho.dim_v, idx));
        if (std::find(cyc.begin(), cyc.end(), s) == cyc.end()) cyc.push_back(std::move(s));
    }
    // close under sums
    std::vector<Subspace> all = cyc;
    all.push_back(subspace_zero(rho.dim_v));
    bool grew = true;
    while (grew) {
        grew = false;
        size_t n = all.size();
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) {
                Subspace s = subspace_sum(F, all[i], all[j]);
                if (std::find(all.begin(), all.end(), s) == all.end()) {
                    all.push_back(std::move(s));
                    grew = true;
                }
            }
    }
    std::sort(all.begin(), all.end(),
              [](const Subspace& a, const Subspace& b) { return subspace_cmp(a, b) < 0; });
    return all;
}

bool is_irreducible(const Representation& rho, u64 budget) {
    const Field& F = *rho.L->F;
    if (rho.dim_v == 0) return false;
    u64 total = vec_count(F, rho.dim_v);
    if (total > budget) throw capacity_error("is_irreducible: module too large to scan");
    for (u64 idx = 1; idx < total; ++idx) {
        if (cyclic_submodule(rho, vec_from_index(F, rho.dim_v, idx)).dim() != rho.dim_v)
            return false;
    }
    return true;
}

std::vector<Subspace> minimal_submodules(const Representation& rho, u64 budget) {
    const Field& F = *rho.L->F;
    u64 total = vec_count(F, rho.dim_v);
    if (total > budget) throw capacity_error("minimal_submodules: module too large to scan");
    std::vector<Subspace> cyc;
    for (u64 idx = 1; idx < total; ++idx) {
        Subspace s = cyclic_submodule(rho, vec_from_index(F, rho.dim_v, idx));
        if (std::find(cyc.begin(), cyc.end(), s) == cyc.end()) cyc.push_back(std::move(s));
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

Representation rep_subquotient(const Representation& rho, const Subspace& W1, const Subspace& W2) {
    const Field& F = *rho.L->F;
    if (!subspace_leq(F, W2, W1)) throw std::invalid_argument("rep_subquotient: W2 not inside W1");
    // basis of W1/W2: rows of W1 whose pivots are not pivots of W2, reduced mod W2
    std::vector<Vec> fbasis;
    for (u32 i = 0; i < W1.dim(); ++i) {
        Vec r = W1.rows[i];
        for (u32 k = 0; k < W2.dim(); ++k) {
            Fel c = r[W2.pivots[k]];
            if (c != 0) r = vec_sub(F, r, vec_scale(F, c, W2.rows[k]));
        }
        if (!vec_is_zero(r)) fbasis.push_back(std::move(r));
    }
    Subspace carrier = subspace_span(F, W1.ambient, fbasis);  // section of the factor
    u32 d = carrier.dim();
    // reduce a vector of W1 to factor coordinates
    auto to_factor = [&](Vec v) {
        for (u32 k = 0; k < W2.dim(); ++k) {
            Fel c = v[W2.pivots[k]];
            if (c != 0) v = vec_sub(F, v, vec_scale(F, c, W2.rows[k]));
        }
        auto coords = subspace_coords(F, carrier, v);
        if (!coords) throw consistency_error("rep_subquotient: vector escaped the carrier");
        return *coords;
    };
    std::vector<Mat> act;
    for (u32 i = 0; i < rho.L->dim; ++i) {
        Mat M(d, d);
        for (u32 j = 0; j < d; ++j) {
            Vec img = mat_apply(F, rho.action[i], carrier.rows[j]);
            Vec fc = to_factor(img);
            for (u32 r = 0; r < d; ++r) M(r, j) = fc[r];
        }
        act.push_back(std::move(M));
    }
    return rep_make(rho.L, d, std::move(act));
}

CompositionSeries composition_series(const Representation& rho, u64 budget) {
    const Field& F = *rho.L->F;
    CompositionSeries cs;
    cs.terms.push_back(subspace_zero(rho.dim_v));
    Subspace cur = cs.terms.back();
    while (cur.dim() < rho.dim_v) {
        // least minimal submodule of V/cur: scan cyclic submodules containing cur
        Subspace best = subspace_full(F, rho.dim_v);
        bool found = false;
        u64 total = vec_count(F, rho.dim_v);
        if (total > budget) throw capacity_error("composition_series: module too large");
        for (u64 idx = 1; idx < total; ++idx) {
            Vec v = vec_from_index(F, rho.dim_v, idx);
            if (subspace_contains(F, cur, v)) continue;
            Subspace s = subspace_sum(F, cur, cyclic_submodule(rho, v));
            if (!found || s.dim() < best.dim() ||
                (s.dim() == best.dim() && subspace_cmp(s, best) < 0)) {
                best = s;
                found = true;
            }
        }
        if (!found) throw consistency_error("composition_series: no next term");
        cs.factors.push_back(rep_subquotient(rho, best, cur));
        cs.terms.push_back(best);
        cur = cs.terms.back();
    }
    return cs;
}

Representation rep_tensor(const Representation& a, const Representation& b) {
    const Field& F = *a.L->F;
    u32 d = a.dim_v * b.dim_v;
    // basis e_i (x) f_j at index i*dim_b + j; x(v (x) w) = xv (x) w + v (x) xw
    std::vector<Mat> act;
    for (u32 t = 0; t < a.L->dim; ++t) {
        Mat M(d, d);
        const Mat& A = a.action[t];
        const Mat& B = b.action[t];
        for (u32 i = 0; i < a.dim_v; ++i)
            for (u32 j = 0; j < b.dim_v; ++j) {
                u32 col = i * b.dim_v + j;
                for (u32 r = 0; r < a.dim_v; ++r)
                    if (A(r, i) != 0) M(r * b.dim_v + j, col) = F.add(M(r * b.dim_v + j, col), A(r, i));
                for (u32 s = 0; s < b.dim_v; ++s)
                    if (B(s, j) != 0) M(i * b.dim_v + s, col) = F.add(M(i * b.dim_v + s, col), B(s, j));
            }
        act.push_back(std::move(M));
    }
    return rep_make(a.L, d, std::move(act));
}

Representation rep_hom(const Representation& a, const Representation& b) {
    // Hom(V, W): f at basis E_{ij} (j -> i), index i*dim_a + j maps v_j to w_i.
    // (x f)(v) = x f(v) - f(x v):  matrix: B (x) I - I (x) A^T in the E-basis.
    const Field& F = *a.L->F;
    u32 d = a.dim_v * b.dim_v;
    std::vector<Mat> act;
    for (u32 t = 0; t < a.L->dim; ++t) {
        Mat M(d, d);
        const Mat& A = a.action[t];
        const Mat& B = b.action[t];
        for (u32 i = 0; i < b.dim_v; ++i)
            for (u32 j = 0; j < a.dim_v; ++j) {
                u32 col = i * a.dim_v + j;
                // B * E_{ij}: row r of B picks (r,i): goes to E_{rj}
                for (u32 r = 0; r < b.dim_v; ++r)
                    if (B(r, i) != 0) M(r * a.dim_v + j, col) = F.add(M(r * a.dim_v + j, col), B(r, i));
                // E_{ij} * A: E_{ij} A has entry (i, s) = A(j, s): goes to E_{is}
                for (u32 s = 0; s < a.dim_v; ++s)
                    if (A(j, s) != 0)
                        M(i * a.dim_v + s, col) = F.sub(M(i * a.dim_v + s, col), A(j, s));
            }
        act.push_back(std::move(M));
    }
    return rep_make(a.L, d, std::move(act));
}

Representation rep_dual(const Representation& a) {
    const Field& F = *a.L->F;
    std::vector<Mat> act;
    for (const Mat& A : a.action) act.push_back(mat_scale(F, F.neg(F.one()), mat_transpose(A)));
    return rep_make(a.L, a.dim_v, std::move(act));
}

Representation rep_restrict(const Representation& rho, const SubalgebraView& S) {
    const Field& F = *rho.L->F;
    std::vector<Mat> act;
    for (u32 i = 0; i < S.space.dim(); ++i) act.push_back(rho.act(F, S.space.rows[i]));
    return rep_make(S.algebra, rho.dim_v, std::move(act));
}

bool modules_isomorphic(const Representation& a, const Representation& b, u64 budget) {
    if (a.dim_v != b.dim_v) return false;
    if (a.L->dim != b.L->dim) throw std::invalid_argument("modules_isomorphic: different algebras");
    const Field& F = *a.L->F;
    u32 n = a.dim_v;
    if (n == 0) return true;
    // solve a.act(e_i) T = T b.act(e_i): linear in T's n^2 entries
    u32 nL = a.L->dim;
    Mat sys(nL * n * n, n * n);
    for (u32 t = 0; t < nL; ++t) {
        const Mat& A = a.action[t];
        const Mat& B = b.action[t];
        for (u32 i = 0; i < n; ++i)
            for (u32 j = 0; j < n; ++j) {
                u32 row = t * n * n + i * n + j;
                // (A T)_{ij} = sum_k A(i,k) T(k,j);  (T B)_{ij} = sum_k T(i,k) B(k,j)
                for (u32 k = 0; k < n; ++k) {
                    if (A(i, k) != 0) sys(row, k * n + j) = F.add(sys(row, k * n + j), A(i, k));
                    if (B(k, j) != 0) sys(row, i * n + k) = F.sub(sys(row, i * n + k), B(k, j));
                }
            }
    }
    Subspace sol = kernel(F, sys);
    if (sol.dim() == 0) return false;
    // scan the solution space for an invertible T
    u64 total = 1;
    for (u32 i = 0; i < sol.dim(); ++i) {
        if (total > budget) throw capacity_error("modules_isomorphic: intertwiner space too large");
        total *= F.size();
    }
    if (total > budget) throw capacity_error("modules_isomorphic: intertwiner space too large");
    for (u64 idx = 1; idx < total; ++idx) {
        Vec coef = vec_from_index(F, sol.dim(), idx);
        Vec flat(n * n, 0);
        for (u32 k = 0; k < sol.dim(); ++k)
            if (coef[k] != 0) flat = vec_add(F, flat, vec_scale(F, coef[k], sol.rows[k]));
        Mat T(n, n);
        for (u32 i = 0; i < n; ++i)
            for (u32 j = 0; j < n; ++j) T(i, j) = flat[i * n + j];
        if (rref(F, T).rank == n) return true;
    }
    return false;
}

}  // namespace plie
