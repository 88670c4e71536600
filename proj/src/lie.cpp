#include "plie/lie.hpp"

#include <algorithm>

namespace plie {

Vec LieAlgebra::bracket_basis(u32 i, u32 j) const {
    if (i == j) return Vec(dim, 0);
    if (i < j) return sc[pair_index(i, j, dim)];
    Vec v = sc[pair_index(j, i, dim)];
    for (Fel& x : v) x = F->neg(x);
    return v;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
    const Field& f = *F;
    Vec r(dim, 0);
    for (u32 i = 0; i < dim; ++i) {
        if (x[i] == 0) continue;
        for (u32 j = 0; j < dim; ++j) {
            if (y[j] == 0 || i == j) continue;
            Fel c = f.mul(x[i], y[j]);
            const Vec bij = bracket_basis(i, j);
            for (u32 k = 0; k < dim; ++k)
                if (bij[k] != 0) r[k] = f.add(r[k], f.mul(c, bij[k]));
        }
    }
    return r;
}

Mat LieAlgebra::ad(const Vec& x) const {
    Mat M(dim, dim);
    for (u32 j = 0; j < dim; ++j) {
        Vec ej(dim, 0);
        ej[j] = F->one();
        Vec col = bracket(x, ej);
        for (u32 i = 0; i < dim; ++i) M(i, j) = col[i];
    }
    return M;
}

bool LieAlgebra::is_abelian() const {
    for (const Vec& v : sc)
        if (!vec_is_zero(v)) return false;
    return true;
}

LiePtr lie_make(FieldPtr F, u32 dim, std::vector<Vec> sc, std::vector<std::string> labels) {
    u32 npairs = dim * (dim - 1) / 2;
    if (sc.size() != npairs) throw std::invalid_argument("lie_make: wrong number of brackets");
    for (const Vec& v : sc)
        if (v.size() != dim) throw std::invalid_argument("lie_make: bracket vector length mismatch");
    auto L = std::make_shared<LieAlgebra>();
    L->F = std::move(F);
    L->dim = dim;
    L->sc = std::move(sc);
    L->labels = std::move(labels);
    // Jacobi on all basis triples
    for (u32 i = 0; i < dim; ++i)
        for (u32 j = i + 1; j < dim; ++j)
            for (u32 k = j + 1; k < dim; ++k) {
                Vec ei(dim, 0), ej(dim, 0), ek(dim, 0);
                ei[i] = L->F->one();
                ej[j] = L->F->one();
                ek[k] = L->F->one();
                Vec s = vec_add(*L->F, L->bracket(L->bracket(ei, ej), ek),
                                vec_add(*L->F, L->bracket(L->bracket(ej, ek), ei),
                                        L->bracket(L->bracket(ek, ei), ej)));
                if (!vec_is_zero(s))
                    throw std::invalid_argument("lie_make: Jacobi fails on basis triple (" +
                                                std::to_string(i) + "," + std::to_string(j) + "," +
                                                std::to_string(k) + ")");
            }
    return L;
}

LiePtr lie_from_bracket(FieldPtr F, u32 dim, const std::function<Vec(u32, u32)>& bracket_ij,
                        std::vector<std::string> labels) {
    std::vector<Vec> sc;
    sc.reserve(dim * (dim - 1) / 2);
    for (u32 i = 0; i < dim; ++i)
        for (u32 j = i + 1; j < dim; ++j) sc.push_back(bracket_ij(i, j));
    return lie_make(std::move(F), dim, std::move(sc), std::move(labels));
}

namespace {

// span of [U, V]
Subspace bracket_span(const LieAlgebra& L, const Subspace& U, const Subspace& V) {
    std::vector<Vec> gens;
    for (const Vec& u : U.rows)
        for (const Vec& v : V.rows) gens.push_back(L.bracket(u, v));
    return subspace_span(*L.F, L.dim, gens);
}

}  // namespace

SeriesReport series(const LieAlgebra& L, SeriesReport::Kind kind) {
    SeriesReport rep;
    rep.kind = kind;
    Subspace cur = subspace_full(*L.F, L.dim);
    rep.terms.push_back(cur);
    Subspace whole = cur;
    while (true) {
        Subspace next = (kind == SeriesReport::Derived) ? bracket_span(L, cur, cur)
                                                        : bracket_span(L, whole, cur);
        if (next == cur) break;
        cur = next;
        rep.terms.push_back(cur);
        if (cur.dim() == 0) break;
    }
    rep.stabilized_at_zero = rep.terms.back().dim() == 0;
    return rep;
}

bool is_soluble(const LieAlgebra& L) { return series(L, SeriesReport::Derived).stabilized_at_zero; }
bool is_nilpotent(const LieAlgebra& L) {
    return series(L, SeriesReport::LowerCentral).stabilized_at_zero;
}

Subspace closure(const LieAlgebra& L, const Subspace& S, ClosureMode mode) {
    Subspace cur = S;
    Subspace whole = subspace_full(*L.F, L.dim);
    while (true) {
        Subspace extra = (mode == ClosureMode::Subalgebra) ? bracket_span(L, cur, cur)
                                                           : bracket_span(L, whole, cur);
        Subspace next = subspace_sum(*L.F, cur, extra);
        if (next == cur) return cur;
        cur = next;
    }
}

bool is_subalgebra(const LieAlgebra& L, const Subspace& S) {
    for (u32 i = 0; i < S.dim(); ++i)
        for (u32 j = i + 1; j < S.dim(); ++j)
            if (!subspace_contains(*L.F, S, L.bracket(S.rows[i], S.rows[j]))) return false;
    return true;
}

bool is_ideal(const LieAlgebra& L, const Subspace& S) {
    for (u32 i = 0; i < L.dim; ++i) {
        Vec ei(L.dim, 0);
        ei[i] = L.F->one();
        for (const Vec& s : S.rows)
            if (!subspace_contains(*L.F, S, L.bracket(ei, s))) return false;
    }
    return true;
}

Subspace centralizer(const LieAlgebra& L, const Subspace& A) {
    if (A.dim() == 0) return subspace_full(*L.F, L.dim);
    Mat sys(A.dim() * L.dim, L.dim);
    for (u32 r = 0; r < A.dim(); ++r) {
        for (u32 j = 0; j < L.dim; ++j) {
            Vec ej(L.dim, 0);
            ej[j] = L.F->one();
            Vec b = L.bracket(ej, A.rows[r]);
            for (u32 k = 0; k < L.dim; ++k) sys(r * L.dim + k, j) = b[k];
        }
    }
    return kernel(*L.F, sys);
}

Subspace normalizer(const LieAlgebra& L, const Subspace& U) {
    if (U.dim() == L.dim || U.dim() == 0) return subspace_full(*L.F, L.dim);
    Mat sys(U.dim() * L.dim, L.dim);
    for (u32 r = 0; r < U.dim(); ++r)
        for (u32 j = 0; j < L.dim; ++j) {
            Vec ej(L.dim, 0);
            ej[j] = L.F->one();
            Vec b = L.bracket(ej, U.rows[r]);
            for (u32 k = 0; k < U.dim(); ++k) {
                Fel c = b[U.pivots[k]];
                if (c != 0) b = vec_sub(*L.F, b, vec_scale(*L.F, c, U.rows[k]));
            }
            for (u32 k = 0; k < L.dim; ++k) sys(r * L.dim + k, j) = b[k];
        }
    return kernel(*L.F, sys);
}

Subspace center(const LieAlgebra& L) { return centralizer(L, subspace_full(*L.F, L.dim)); }

Subspace engel(const LieAlgebra& L, const Vec& a) {
    Mat P = mat_pow(*L.F, L.ad(a), L.dim);
    return kernel(*L.F, P);
}

Subspace derived_subalgebra(const LieAlgebra& L) {
    std::vector<Vec> gens;
    for (u32 i = 0; i < L.dim; ++i)
        for (u32 j = i + 1; j < L.dim; ++j) gens.push_back(L.bracket_basis(i, j));
    return subspace_span(*L.F, L.dim, gens);
}

Quotient quotient(const LieAlgebra& L, const Subspace& I) {
    if (!is_ideal(L, I)) throw std::invalid_argument("quotient: not an ideal");
    const Field& F = *L.F;
    std::vector<bool> is_pivot(L.dim, false);
    for (u32 p : I.pivots) is_pivot[p] = true;
    std::vector<u32> qcols;
    for (u32 c = 0; c < L.dim; ++c)
        if (!is_pivot[c]) qcols.push_back(c);
    u32 qdim = static_cast<u32>(qcols.size());
    Mat proj(qdim, L.dim);
    for (u32 j = 0; j < L.dim; ++j) {
        Vec ej(L.dim, 0);
        ej[j] = F.one();
        for (u32 k = 0; k < I.dim(); ++k) {
            Fel c = ej[I.pivots[k]];
            if (c != 0) ej = vec_sub(F, ej, vec_scale(F, c, I.rows[k]));
        }
        for (u32 r = 0; r < qdim; ++r) proj(r, j) = ej[qcols[r]];
    }
    Mat sect(L.dim, qdim);
    for (u32 r = 0; r < qdim; ++r) sect(qcols[r], r) = F.one();
    auto bracket_ij = [&](u32 i, u32 j) {
        Vec xi(L.dim, 0), xj(L.dim, 0);
        xi[qcols[i]] = F.one();
        xj[qcols[j]] = F.one();
        return mat_apply(F, proj, L.bracket(xi, xj));
    };
    std::vector<std::string> labels;
    if (L.labels.size() == L.dim)
        for (u32 c : qcols) labels.push_back(L.labels[c]);
    Quotient q;
    q.algebra = lie_from_bracket(L.F, qdim, bracket_ij, labels);
    q.proj = proj;
    q.sect = sect;
    q.kernel = I;
    return q;
}

LiePtr direct_sum(const LieAlgebra& A, const LieAlgebra& B) {
    if (!(*A.F == *B.F)) throw std::invalid_argument("direct_sum: field mismatch");
    u32 n = A.dim + B.dim;
    auto bracket_ij = [&](u32 i, u32 j) {
        Vec r(n, 0);
        if (i < A.dim && j < A.dim) {
            Vec b = A.bracket_basis(i, j);
            std::copy(b.begin(), b.end(), r.begin());
        } else if (i >= A.dim && j >= A.dim) {
            Vec b = B.bracket_basis(i - A.dim, j - A.dim);
            std::copy(b.begin(), b.end(), r.begin() + A.dim);
        }
        return r;
    };
    std::vector<std::string> labels;
    if (A.labels.size() == A.dim && B.labels.size() == B.dim) {
        labels = A.labels;
        labels.insert(labels.end(), B.labels.begin(), B.labels.end());
    }
    return lie_from_bracket(A.F, n, bracket_ij, labels);
}

std::vector<Mat> derivations(const LieAlgebra& L) {
    const Field& F = *L.F;
    u32 n = L.dim;
    if (n == 0) return {};
    if (n == 1) {
        std::vector<Mat> basis;
        Mat D(1, 1);
        D(0, 0) = F.one();
        basis.push_back(D);
        return basis;
    }
    u32 npairs = n * (n - 1) / 2;
    Mat sys(npairs * n, n * n);
    u32 row = 0;
    for (u32 i = 0; i < n; ++i)
        for (u32 j = i + 1; j < n; ++j) {
            const Vec cij = L.bracket_basis(i, j);
            for (u32 k = 0; k < n; ++k) {
                for (u32 l = 0; l < n; ++l)
                    if (cij[l] != 0) sys(row + k, k * n + l) = F.add(sys(row + k, k * n + l), cij[l]);
                for (u32 l = 0; l < n; ++l) {
                    Fel c = L.bracket_basis(l, j)[k];
                    if (c != 0) sys(row + k, l * n + i) = F.sub(sys(row + k, l * n + i), c);
                }
                for (u32 l = 0; l < n; ++l) {
                    Fel c = L.bracket_basis(i, l)[k];
                    if (c != 0) sys(row + k, l * n + j) = F.sub(sys(row + k, l * n + j), c);
                }
            }
            row += n;
        }
    Subspace K = kernel(F, sys);
    std::vector<Mat> basis;
    for (const Vec& v : K.rows) {
        Mat D(n, n);
        for (u32 i = 0; i < n; ++i)
            for (u32 j = 0; j < n; ++j) D(i, j) = v[i * n + j];
        basis.push_back(std::move(D));
    }
    return basis;
}

Vec SubalgebraView::to_ambient(const Field& F, const Vec& local) const {
    Vec r(space.ambient, 0);
    for (u32 i = 0; i < space.dim(); ++i)
        if (local[i] != 0) r = vec_add(F, r, vec_scale(F, local[i], space.rows[i]));
    return r;
}

std::optional<Vec> SubalgebraView::to_local(const Field& F, const Vec& ambient) const {
    return subspace_coords(F, space, ambient);
}

SubalgebraView subalgebra_view(const LieAlgebra& L, const Subspace& U) {
    if (!is_subalgebra(L, U)) throw std::invalid_argument("subalgebra_view: not a subalgebra");
    const Field& F = *L.F;
    auto bracket_ij = [&](u32 i, u32 j) {
        Vec b = L.bracket(U.rows[i], U.rows[j]);
        auto c = subspace_coords(F, U, b);
        if (!c) throw consistency_error("subalgebra_view: bracket escaped the subalgebra");
        return *c;
    };
    SubalgebraView v;
    v.algebra = lie_from_bracket(L.F, U.dim(), bracket_ij);
    v.space = U;
    return v;
}

}  // namespace plie
