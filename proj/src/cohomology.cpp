#include "plie/cohomology.hpp"

#include <algorithm>

namespace plie {

namespace {

// sorted index tuples of size k from {0..n-1}, lex order
std::vector<std::vector<u32>> tuples(u32 n, u32 k) {
    std::vector<std::vector<u32>> out;
    if (k > n) return out;
    std::vector<u32> t(k);
    for (u32 i = 0; i < k; ++i) t[i] = i;
    while (true) {
        out.push_back(t);
        if (k == 0) break;
        u32 i = k;
        bool done = true;
        while (i-- > 0) {
            if (t[i] < n - k + i) {
                ++t[i];
                for (u32 j = i + 1; j < k; ++j) t[j] = t[j - 1] + 1;
                done = false;
                break;
            }
        }
        if (done) break;
    }
    return out;
}

u64 binom(u32 n, u32 k) {
    if (k > n) return 0;
    u64 r = 1;
    for (u32 i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

// index of a sorted tuple in lex order, -1 if absent
int tuple_index(const std::vector<std::vector<u32>>& all, const std::vector<u32>& t) {
    auto it = std::lower_bound(all.begin(), all.end(), t);
    if (it == all.end() || *it != t) return -1;
    return static_cast<int>(it - all.begin());
}

}  // namespace

CochainComplex cochain_complex(const Representation& rho, int n_max, u64 budget) {
    const Field& F = *rho.L->F;
    const LieAlgebra& L = *rho.L;
    u32 n = L.dim, dv = rho.dim_v;
    CochainComplex C;
    C.rho = rho;
    C.n_max = n_max;
    for (int k = 0; k <= n_max + 1; ++k) {
        u64 dim = binom(n, static_cast<u32>(k)) * dv;
        if (dim > budget) throw capacity_error("cochain_complex: cochain space over budget");
        C.cochain_dims.push_back(static_cast<u32>(dim));
    }
    for (int deg = 0; deg <= n_max; ++deg) {
        u32 k = static_cast<u32>(deg);
        auto dom = tuples(n, k);
        auto cod = tuples(n, k + 1);
        Mat D(C.cochain_dims[k + 1], C.cochain_dims[k]);
        for (u32 ti = 0; ti < dom.size(); ++ti) {
            for (u32 s = 0; s < dv; ++s) {
                u32 col = ti * dv + s;
                for (u32 ui = 0; ui < cod.size(); ++ui) {
                    const auto& U = cod[ui];
                    Vec val(dv, 0);
                    // first sum: (-1)^i rho(e_{U[i]}) omega(U minus U[i])
                    for (u32 i = 0; i <= k; ++i) {
                        std::vector<u32> rest;
                        for (u32 a = 0; a <= k; ++a)
                            if (a != i) rest.push_back(U[a]);
                        if (static_cast<int>(ti) == tuple_index(dom, rest)) {
                            Vec ev(dv, 0);
                            ev[s] = F.one();
                            Vec term = mat_apply(F, rho.action[U[i]], ev);
                            if (i % 2 == 1) term = vec_scale(F, F.neg(F.one()), term);
                            val = vec_add(F, val, term);
                        }
                    }
                    // second sum: (-1)^{i+j} omega([e_{U[i]}, e_{U[j]}] wedge rest)
                    for (u32 i = 0; i <= k; ++i)
                        for (u32 j = i + 1; j <= k; ++j) {
                            Vec br = L.bracket_basis(U[i], U[j]);
                            std::vector<u32> rest;
                            for (u32 a = 0; a <= k; ++a)
                                if (a != i && a != j) rest.push_back(U[a]);
                            for (u32 t = 0; t < n; ++t) {
                                if (br[t] == 0) continue;
                                if (std::find(rest.begin(), rest.end(), t) != rest.end()) continue;
                                std::vector<u32> merged = rest;
                                u32 pos = 0;
                                while (pos < merged.size() && merged[pos] < t) ++pos;
                                merged.insert(merged.begin() + pos, t);
                                if (static_cast<int>(ti) != tuple_index(dom, merged)) continue;
                                Fel coef = br[t];
                                u32 sgn = (i + j + pos) % 2;
                                if (sgn == 1) coef = F.neg(coef);
                                val[s] = F.add(val[s], coef);
                            }
                        }
                    for (u32 r = 0; r < dv; ++r)
                        if (val[r] != 0) D(ui * dv + r, col) = F.add(D(ui * dv + r, col), val[r]);
                }
            }
        }
        C.d.push_back(std::move(D));
    }
    for (int deg = 0; deg + 1 <= n_max; ++deg) {
        Mat comp = mat_mul(F, C.d[static_cast<size_t>(deg) + 1], C.d[static_cast<size_t>(deg)]);
        if (!mat_is_zero(comp)) throw consistency_error("cochain_complex: d after d is nonzero");
    }
    return C;
}

u32 cohomology_dim(const CochainComplex& C, int n) {
    if (n < 0 || n > C.n_max) throw std::invalid_argument("cohomology_dim: degree out of range");
    const Field& F = *C.rho.L->F;
    u32 zk = kernel(F, C.d[static_cast<size_t>(n)]).dim();
    u32 bk = (n == 0) ? 0 : rref(F, C.d[static_cast<size_t>(n) - 1]).rank;
    return zk - bk;
}

u32 cohomology_dim(const Representation& rho, int n, u64 budget) {
    return cohomology_dim(cochain_complex(rho, n, budget), n);
}

std::optional<Subspace> complement_abelian_ideal(const LieAlgebra& L, const Subspace& A) {
    const Field& F = *L.F;
    if (!is_ideal(L, A)) throw std::invalid_argument("complement_abelian_ideal: not an ideal");
    for (u32 i = 0; i < A.dim(); ++i)
        for (u32 j = i + 1; j < A.dim(); ++j)
            if (!vec_is_zero(L.bracket(A.rows[i], A.rows[j])))
                throw std::invalid_argument("complement_abelian_ideal: ideal not abelian");
    if (A.dim() == 0) return subspace_full(F, L.dim);
    if (A.dim() == L.dim) return subspace_zero(L.dim);
    Quotient q = quotient(L, A);
    u32 nq = q.algebra->dim, na = A.dim();
    auto sect = [&](u32 i) {
        Vec v(L.dim, 0);
        for (u32 r = 0; r < L.dim; ++r) v[r] = q.sect(r, i);
        return v;
    };
    // unknowns phi(j) in A-coordinates; condition per quotient pair (i<j):
    // g(i,j) + x_i.phi(j) - x_j.phi(i) - phi([i,j]) = 0, module action
    // x.a = [s(x), a], cocycle g(i,j) = [s(i),s(j)] - s([i,j]).
    u32 rows = (nq * (nq - 1) / 2) * na;
    if (rows == 0) {
        std::vector<Vec> gens;
        for (u32 i = 0; i < nq; ++i) gens.push_back(sect(i));
        Subspace M = subspace_span(F, L.dim, gens);
        if (is_subalgebra(L, M)) return M;
        return std::nullopt;
    }
    Mat sys(rows, nq * na);
    Vec rhs(rows, 0);
    u32 row = 0;
    for (u32 i = 0; i < nq; ++i)
        for (u32 j = i + 1; j < nq; ++j) {
            Vec qi(nq, 0), qj(nq, 0);
            qi[i] = F.one();
            qj[j] = F.one();
            Vec brq = q.algebra->bracket(qi, qj);
            Vec sij(L.dim, 0);
            for (u32 r = 0; r < nq; ++r)
                if (brq[r] != 0) sij = vec_add(F, sij, vec_scale(F, brq[r], sect(r)));
            Vec g = vec_sub(F, L.bracket(sect(i), sect(j)), sij);
            auto gc = subspace_coords(F, A, g);
            if (!gc) throw consistency_error("complement_abelian_ideal: cocycle outside A");
            for (u32 t = 0; t < na; ++t) rhs[row + t] = F.neg((*gc)[t]);
            for (u32 k = 0; k < na; ++k) {
                auto ac = subspace_coords(F, A, L.bracket(sect(i), A.rows[k]));
                if (!ac) throw consistency_error("complement_abelian_ideal: action escapes A");
                for (u32 t = 0; t < na; ++t)
                    sys(row + t, j * na + k) = F.add(sys(row + t, j * na + k), (*ac)[t]);
                auto ac2 = subspace_coords(F, A, L.bracket(sect(j), A.rows[k]));
                if (!ac2) throw consistency_error("complement_abelian_ideal: action escapes A");
                for (u32 t = 0; t < na; ++t)
                    sys(row + t, i * na + k) = F.sub(sys(row + t, i * na + k), (*ac2)[t]);
            }
            for (u32 r = 0; r < nq; ++r) {
                if (brq[r] == 0) continue;
                for (u32 k = 0; k < na; ++k)
                    sys(row + k, r * na + k) = F.sub(sys(row + k, r * na + k), brq[r]);
            }
            row += na;
        }
    auto phi = solve(F, sys, rhs);
    if (!phi) return std::nullopt;
    std::vector<Vec> gens;
    for (u32 i = 0; i < nq; ++i) {
        Vec m = sect(i);
        for (u32 k = 0; k < na; ++k) {
            Fel c = (*phi)[i * na + k];
            if (c != 0) m = vec_add(F, m, vec_scale(F, c, A.rows[k]));
        }
        gens.push_back(std::move(m));
    }
    Subspace M = subspace_span(F, L.dim, gens);
    if (!is_subalgebra(L, M) || M.dim() + A.dim() != L.dim ||
        subspace_intersect(F, M, A).dim() != 0)
        throw consistency_error("complement_abelian_ideal: construction check failed");
    return M;
}

std::vector<Subspace> all_complements(const LieAlgebra& L, const Subspace& A, u64 budget) {
    const Field& F = *L.F;
    std::vector<Subspace> out;
    for (const Subspace& M : enumerate_subalgebras(L, SubalgFilter::All, budget)) {
        if (M.dim() + A.dim() == L.dim && subspace_intersect(F, M, A).dim() == 0)
            out.push_back(M);
    }
    return out;
}

std::optional<Vec> conjugating_element(const LieAlgebra& L, const Subspace& A,
                                       const Subspace& U1, const Subspace& U2) {
    const Field& F = *L.F;
    if (U1.dim() != U2.dim()) return std::nullopt;
    if (A.dim() == 0) return (U1 == U2) ? std::optional<Vec>(Vec(L.dim, 0)) : std::nullopt;
    auto residue = [&](Vec v) {
        for (u32 k = 0; k < U2.dim(); ++k) {
            Fel c = v[U2.pivots[k]];
            if (c != 0) v = vec_sub(F, v, vec_scale(F, c, U2.rows[k]));
        }
        return v;
    };
    u32 rows = U1.dim() * L.dim;
    Mat sys(rows, A.dim());
    Vec rhs(rows, 0);
    for (u32 r = 0; r < U1.dim(); ++r) {
        Vec res_u = residue(U1.rows[r]);
        for (u32 t = 0; t < L.dim; ++t) rhs[r * L.dim + t] = F.neg(res_u[t]);
        for (u32 k = 0; k < A.dim(); ++k) {
            Vec res_b = residue(L.bracket(A.rows[k], U1.rows[r]));
            for (u32 t = 0; t < L.dim; ++t) sys(r * L.dim + t, k) = res_b[t];
        }
    }
    auto sol = solve(F, sys, rhs);
    if (!sol) return std::nullopt;
    Vec a(L.dim, 0);
    for (u32 k = 0; k < A.dim(); ++k)
        if ((*sol)[k] != 0) a = vec_add(F, a, vec_scale(F, (*sol)[k], A.rows[k]));
    std::vector<Vec> img;
    Mat al = apply_alpha(L, a);
    for (const Vec& u : U1.rows) img.push_back(mat_apply(F, al, u));
    if (!(subspace_span(F, L.dim, img) == U2)) return std::nullopt;
    return a;
}

Mat apply_alpha(const LieAlgebra& L, const Vec& a) {
    const Field& F = *L.F;
    Mat al = mat_add(F, mat_identity(F, L.dim), L.ad(a));
    for (u32 i = 0; i < L.dim; ++i)
        for (u32 j = i + 1; j < L.dim; ++j) {
            Vec ei(L.dim, 0), ej(L.dim, 0);
            ei[i] = F.one();
            ej[j] = F.one();
            Vec lhs = mat_apply(F, al, L.bracket(ei, ej));
            Vec rhs = L.bracket(mat_apply(F, al, ei), mat_apply(F, al, ej));
            if (lhs != rhs) throw consistency_error("apply_alpha: 1 + ad(a) is not an automorphism");
        }
    return al;
}

}  // namespace plie
