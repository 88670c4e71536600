#pragma once

#include <optional>
#include <vector>

#include "plie/gf.hpp"

namespace plie {

using Vec = std::vector<Fel>;

/// Dense row-major matrix over a Field (the field travels separately).
struct Mat {
    u32 rows = 0, cols = 0;
    std::vector<Fel> a;

    Mat() = default;
    Mat(u32 r, u32 c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    Fel& operator()(u32 i, u32 j) { return a[static_cast<size_t>(i) * cols + j]; }
    Fel operator()(u32 i, u32 j) const { return a[static_cast<size_t>(i) * cols + j]; }

    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

Mat mat_identity(const Field& F, u32 n);
Mat mat_zero(u32 r, u32 c);
Mat mat_add(const Field& F, const Mat& A, const Mat& B);
Mat mat_sub(const Field& F, const Mat& A, const Mat& B);
Mat mat_scale(const Field& F, Fel c, const Mat& A);
Mat mat_mul(const Field& F, const Mat& A, const Mat& B);
Mat mat_pow(const Field& F, const Mat& A, u64 e);
Mat mat_transpose(const Mat& A);
bool mat_is_zero(const Mat& A);
Vec mat_apply(const Field& F, const Mat& A, const Vec& x);
Mat mat_from_rows(const std::vector<Vec>& rows, u32 cols);

Vec vec_add(const Field& F, const Vec& x, const Vec& y);
Vec vec_sub(const Field& F, const Vec& x, const Vec& y);
Vec vec_scale(const Field& F, Fel c, const Vec& x);
bool vec_is_zero(const Vec& x);
/// Lexicographic compare with the field's element order.
int vec_cmp(const Vec& x, const Vec& y);

/// Canonical subspace of F^n: reduced-row-echelon basis, pivot columns
/// strictly increasing, no zero rows. Equality of subspaces is equality of
/// the basis grids.
struct Subspace {
    u32 ambient = 0;
    std::vector<Vec> rows;   // RREF rows
    std::vector<u32> pivots; // pivot column of each row

    u32 dim() const { return static_cast<u32>(rows.size()); }
    bool operator==(const Subspace& o) const {
        return ambient == o.ambient && rows == o.rows;
    }
};

/// Order: dimension first, then row grids lexicographically.
int subspace_cmp(const Subspace& a, const Subspace& b);

struct RrefResult {
    Subspace space;   // row space
    u32 rank = 0;
    // coordinates of each original row in the RREF basis (rows x rank)
    Mat row_coords;
};

RrefResult rref(const Field& F, const Mat& M);

Subspace subspace_zero(u32 ambient);
Subspace subspace_full(const Field& F, u32 ambient);
Subspace subspace_span(const Field& F, u32 ambient, const std::vector<Vec>& gens);
Subspace subspace_sum(const Field& F, const Subspace& U, const Subspace& V);
Subspace subspace_intersect(const Field& F, const Subspace& U, const Subspace& V);
bool subspace_contains(const Field& F, const Subspace& U, const Vec& v);
bool subspace_leq(const Field& F, const Subspace& U, const Subspace& V);  // U <= V
/// Coordinates of v in U's basis; nullopt if v is outside U.
std::optional<Vec> subspace_coords(const Field& F, const Subspace& U, const Vec& v);

/// Solution of A x = b with the lexicographically least x (zero at the
/// kernel's pivot coordinates); nullopt when inconsistent.
std::optional<Vec> solve(const Field& F, const Mat& A, const Vec& b);
Subspace kernel(const Field& F, const Mat& A);
Subspace image(const Field& F, const Mat& A);  // column space, as subspace of F^rows

/// Enumerate all vectors of F^n in index order: index digits are the
/// coordinates, first coordinate most significant.
Vec vec_from_index(const Field& F, u32 n, u64 index);
u64 vec_count(const Field& F, u32 n);  // |F|^n, throws capacity_error past 2^62

}  // namespace plie
