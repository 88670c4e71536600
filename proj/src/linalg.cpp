#include "plie/linalg.hpp"

#include <algorithm>

namespace plie {

Mat mat_identity(const Field& F, u32 n) {
    Mat I(n, n);
    for (u32 i = 0; i < n; ++i) I(i, i) = F.one();
    return I;
}

Mat mat_zero(u32 r, u32 c) { return Mat(r, c); }

Mat mat_add(const Field& F, const Mat& A, const Mat& B) {
    Mat R(A.rows, A.cols);
    for (size_t i = 0; i < A.a.size(); ++i) R.a[i] = F.add(A.a[i], B.a[i]);
    return R;
}

Mat mat_sub(const Field& F, const Mat& A, const Mat& B) {
    Mat R(A.rows, A.cols);
    for (size_t i = 0; i < A.a.size(); ++i) R.a[i] = F.sub(A.a[i], B.a[i]);
    return R;
}

Mat mat_scale(const Field& F, Fel c, const Mat& A) {
    Mat R(A.rows, A.cols);
    for (size_t i = 0; i < A.a.size(); ++i) R.a[i] = F.mul(c, A.a[i]);
    return R;
}

Mat mat_mul(const Field& F, const Mat& A, const Mat& B) {
    Mat R(A.rows, B.cols);
    for (u32 i = 0; i < A.rows; ++i)
        for (u32 k = 0; k < A.cols; ++k) {
            Fel aik = A(i, k);
            if (aik == 0) continue;
            for (u32 j = 0; j < B.cols; ++j)
                R(i, j) = F.add(R(i, j), F.mul(aik, B(k, j)));
        }
    return R;
}

Mat mat_pow(const Field& F, const Mat& A, u64 e) {
    Mat R = mat_identity(F, A.rows), base = A;
    while (e) {
        if (e & 1) R = mat_mul(F, R, base);
        base = mat_mul(F, base, base);
        e >>= 1;
    }
    return R;
}

Mat mat_transpose(const Mat& A) {
    Mat R(A.cols, A.rows);
    for (u32 i = 0; i < A.rows; ++i)
        for (u32 j = 0; j < A.cols; ++j) R(j, i) = A(i, j);
    return R;
}

bool mat_is_zero(const Mat& A) {
    return std::all_of(A.a.begin(), A.a.end(), [](Fel x) { return x == 0; });
}

Vec mat_apply(const Field& F, const Mat& A, const Vec& x) {
    Vec r(A.rows, 0);
    for (u32 i = 0; i < A.rows; ++i) {
        Fel s = 0;
        for (u32 j = 0; j < A.cols; ++j)
            if (A(i, j) != 0 && x[j] != 0) s = F.add(s, F.mul(A(i, j), x[j]));
        r[i] = s;
    }
    return r;
}

Mat mat_from_rows(const std::vector<Vec>& rows, u32 cols) {
    Mat M(static_cast<u32>(rows.size()), cols);
    for (u32 i = 0; i < rows.size(); ++i)
        for (u32 j = 0; j < cols; ++j) M(i, j) = rows[i][j];
    return M;
}

Vec vec_add(const Field& F, const Vec& x, const Vec& y) {
    Vec r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = F.add(x[i], y[i]);
    return r;
}

Vec vec_sub(const Field& F, const Vec& x, const Vec& y) {
    Vec r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = F.sub(x[i], y[i]);
    return r;
}

Vec vec_scale(const Field& F, Fel c, const Vec& x) {
    Vec r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = F.mul(c, x[i]);
    return r;
}

bool vec_is_zero(const Vec& x) {
    return std::all_of(x.begin(), x.end(), [](Fel v) { return v == 0; });
}

int vec_cmp(const Vec& x, const Vec& y) {
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i] != y[i]) return x[i] < y[i] ? -1 : 1;
    }
    return 0;
}

int subspace_cmp(const Subspace& a, const Subspace& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim() ? -1 : 1;
    for (u32 i = 0; i < a.dim(); ++i) {
        int c = vec_cmp(a.rows[i], b.rows[i]);
        if (c) return c;
    }
    return 0;
}

RrefResult rref(const Field& F, const Mat& M) {
    // Work rows carry the original-row bookkeeping on the side.
    std::vector<Vec> rows;
    rows.reserve(M.rows);
    for (u32 i = 0; i < M.rows; ++i) {
        Vec r(M.cols);
        for (u32 j = 0; j < M.cols; ++j) r[j] = M(i, j);
        rows.push_back(std::move(r));
    }
    std::vector<Vec> work = rows;
    u32 rank = 0;
    std::vector<u32> pivots;
    for (u32 col = 0; col < M.cols && rank < work.size(); ++col) {
        u32 sel = rank;
        while (sel < work.size() && work[sel][col] == 0) ++sel;
        if (sel == work.size()) continue;
        std::swap(work[sel], work[rank]);
        Fel inv = F.inv(work[rank][col]);
        work[rank] = vec_scale(F, inv, work[rank]);
        for (u32 r = 0; r < work.size(); ++r) {
            if (r == rank || work[r][col] == 0) continue;
            Fel c = work[r][col];
            work[r] = vec_sub(F, work[r], vec_scale(F, c, work[rank]));
        }
        pivots.push_back(col);
        ++rank;
    }
    RrefResult res;
    res.rank = rank;
    res.space.ambient = M.cols;
    res.space.pivots = pivots;
    res.space.rows.assign(work.begin(), work.begin() + rank);
    // original row i = sum over k of M(i, pivots[k]) * basis row k
    res.row_coords = Mat(M.rows, rank);
    for (u32 i = 0; i < M.rows; ++i)
        for (u32 k = 0; k < rank; ++k) res.row_coords(i, k) = rows[i][pivots[k]];
    return res;
}

Subspace subspace_zero(u32 ambient) {
    Subspace s;
    s.ambient = ambient;
    return s;
}

Subspace subspace_full(const Field& F, u32 ambient) {
    Subspace s;
    s.ambient = ambient;
    for (u32 i = 0; i < ambient; ++i) {
        Vec r(ambient, 0);
        r[i] = F.one();
        s.rows.push_back(std::move(r));
        s.pivots.push_back(i);
    }
    return s;
}

Subspace subspace_span(const Field& F, u32 ambient, const std::vector<Vec>& gens) {
    if (gens.empty()) return subspace_zero(ambient);
    return rref(F, mat_from_rows(gens, ambient)).space;
}

Subspace subspace_sum(const Field& F, const Subspace& U, const Subspace& V) {
    if (U.ambient != V.ambient) throw std::invalid_argument("subspace_sum: ambient mismatch");
    std::vector<Vec> all = U.rows;
    all.insert(all.end(), V.rows.begin(), V.rows.end());
    return subspace_span(F, U.ambient, all);
}

Subspace subspace_intersect(const Field& F, const Subspace& U, const Subspace& V) {
    if (U.ambient != V.ambient)
        throw std::invalid_argument("subspace_intersect: ambient mismatch");
    if (U.dim() == 0 || V.dim() == 0) return subspace_zero(U.ambient);
    // coefficient vectors (a,b) with a*U = b*V form the kernel of [U^T | -V^T]
    u32 du = U.dim(), dv = V.dim();
    Mat S(U.ambient, du + dv);
    for (u32 j = 0; j < du; ++j)
        for (u32 i = 0; i < U.ambient; ++i) S(i, j) = U.rows[j][i];
    for (u32 j = 0; j < dv; ++j)
        for (u32 i = 0; i < U.ambient; ++i) S(i, du + j) = F.neg(V.rows[j][i]);
    Subspace K = kernel(F, S);
    std::vector<Vec> gens;
    for (const Vec& c : K.rows) {
        Vec x(U.ambient, 0);
        for (u32 j = 0; j < du; ++j)
            if (c[j] != 0) x = vec_add(F, x, vec_scale(F, c[j], U.rows[j]));
        gens.push_back(std::move(x));
    }
    return subspace_span(F, U.ambient, gens);
}

bool subspace_contains(const Field& F, const Subspace& U, const Vec& v) {
    Vec r = v;
    for (u32 k = 0; k < U.dim(); ++k) {
        Fel c = r[U.pivots[k]];
        if (c != 0) r = vec_sub(F, r, vec_scale(F, c, U.rows[k]));
    }
    return vec_is_zero(r);
}

bool subspace_leq(const Field& F, const Subspace& U, const Subspace& V) {
    for (const Vec& r : U.rows)
        if (!subspace_contains(F, V, r)) return false;
    return true;
}

std::optional<Vec> subspace_coords(const Field& F, const Subspace& U, const Vec& v) {
    Vec r = v;
    Vec coords(U.dim(), 0);
    for (u32 k = 0; k < U.dim(); ++k) {
        Fel c = r[U.pivots[k]];
        coords[k] = c;
        if (c != 0) r = vec_sub(F, r, vec_scale(F, c, U.rows[k]));
    }
    if (!vec_is_zero(r)) return std::nullopt;
    return coords;
}

Subspace kernel(const Field& F, const Mat& A) {
    RrefResult R = rref(F, A);  // rref of A itself: row space rows; kernel from columns
    // Standard: kernel of A from RREF of A. Need RREF of A (rows x cols).
    const Subspace& E = R.space;
    std::vector<bool> is_pivot(A.cols, false);
    for (u32 p : E.pivots) is_pivot[p] = true;
    std::vector<Vec> gens;
    for (u32 c = 0; c < A.cols; ++c) {
        if (is_pivot[c]) continue;
        Vec v(A.cols, 0);
        v[c] = F.one();
        for (u32 k = 0; k < E.dim(); ++k) v[E.pivots[k]] = F.neg(E.rows[k][c]);
        gens.push_back(std::move(v));
    }
    return subspace_span(F, A.cols, gens);
}

Subspace image(const Field& F, const Mat& A) {
    return rref(F, mat_transpose(A)).space;
}

std::optional<Vec> solve(const Field& F, const Mat& A, const Vec& b) {
    // RREF of [A | b]
    Mat Ab(A.rows, A.cols + 1);
    for (u32 i = 0; i < A.rows; ++i) {
        for (u32 j = 0; j < A.cols; ++j) Ab(i, j) = A(i, j);
        Ab(i, A.cols) = b[i];
    }
    RrefResult R = rref(F, Ab);
    const Subspace& E = R.space;
    for (u32 p : E.pivots)
        if (p == A.cols) return std::nullopt;  // inconsistent
    Vec x(A.cols, 0);
    for (u32 k = 0; k < E.dim(); ++k) x[E.pivots[k]] = E.rows[k][A.cols];
    // canonicalize: zero the coordinates at the kernel's pivot columns; any
    // other solution differs by a kernel element whose leading entry sits at
    // such a column, so the canonical representative is the least one
    Subspace K = kernel(F, A);
    for (u32 k = 0; k < K.dim(); ++k) {
        Fel c = x[K.pivots[k]];
        if (c != 0) x = vec_sub(F, x, vec_scale(F, c, K.rows[k]));
    }
    return x;
}

Vec vec_from_index(const Field& F, u32 n, u64 index) {
    Vec v(n);
    u64 q = F.size();
    for (u32 i = n; i-- > 0;) {
        v[i] = static_cast<Fel>(index % q);
        index /= q;
    }
    return v;
}

u64 vec_count(const Field& F, u32 n) {
    u64 q = F.size(), c = 1;
    for (u32 i = 0; i < n; ++i) {
        if (c > (u64(1) << 62) / q) throw capacity_error("vector space too large to scan");
        c *= q;
    }
    return c;
}

}  // namespace plie
