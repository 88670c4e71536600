#include "plie/iso.hpp"

#include <algorithm>

#include "plie/poly.hpp"

namespace plie {

namespace {

struct IsoSearch {
    const LieAlgebra& A;
    const LieAlgebra& B;
    const RestrictedAlgebra* RA = nullptr;
    const RestrictedAlgebra* RB = nullptr;
    u64 nodes = 0;
    u64 node_budget;
    std::vector<Vec> images;          // chosen images of e_0..e_{k-1}
    std::vector<Poly> a_charpolys;    // char polys of ad_A(e_i)
    std::vector<Vec> candidates_cache;

    bool extend(u32 k);
};

bool IsoSearch::extend(u32 k) {
    const Field& F = *A.F;
    u32 n = A.dim;
    if (k == n) {
        // full map: verify all brackets and (if restricted) the p-images
        Mat T(n, n);
        for (u32 j = 0; j < n; ++j)
            for (u32 i = 0; i < n; ++i) T(i, j) = images[j][i];
        auto phi = [&](const Vec& x) { return mat_apply(F, T, x); };
        for (u32 i = 0; i < n; ++i)
            for (u32 j = i + 1; j < n; ++j) {
                Vec ei(n, 0), ej(n, 0);
                ei[i] = F.one();
                ej[j] = F.one();
                if (B.bracket(images[i], images[j]) != phi(A.bracket(ei, ej))) return false;
            }
        if (RA) {
            for (u32 i = 0; i < n; ++i)
                if (evaluate_p(*RB, images[i]) != phi(RA->pop.images[i])) return false;
        }
        return true;
    }
    // candidates: all vectors of B with matching ad char poly, independent of
    // the current images, bracket-consistent with complete pairs
    u64 total = vec_count(F, n);
    for (u64 idx = 0; idx < total; ++idx) {
        if (++nodes > node_budget) throw capacity_error("find_isomorphism: node budget exceeded");
        Vec cand = vec_from_index(F, n, idx);
        if (k == 0 && vec_is_zero(cand) && n > 0) continue;
        // linear independence
        std::vector<Vec> sp = images;
        sp.push_back(cand);
        if (subspace_span(F, n, sp).dim() != k + 1) continue;
        if (char_poly(F, B.ad(cand)).c != a_charpolys[k].c) continue;
        // bracket consistency for pairs (i, k) whose bracket lies in span(e_0..e_k)
        bool ok = true;
        images.push_back(cand);
        for (u32 i = 0; i < k && ok; ++i) {
            Vec br = A.bracket_basis(i, k);
            bool inside = true;
            for (u32 t = k + 1; t < n; ++t)
                if (br[t] != 0) inside = false;
            if (!inside) continue;
            Vec expect(n, 0);
            for (u32 t = 0; t <= k; ++t)
                if (br[t] != 0) expect = vec_add(F, expect, vec_scale(F, br[t], images[t]));
            if (B.bracket(images[i], images[k]) != expect) ok = false;
        }
        if (ok && extend(k + 1)) return true;
        images.pop_back();
    }
    return false;
}

std::optional<Mat> run_iso(const LieAlgebra& A, const LieAlgebra& B, const RestrictedAlgebra* RA,
                           const RestrictedAlgebra* RB, u64 node_budget) {
    if (A.dim != B.dim || !(*A.F == *B.F)) return std::nullopt;
    const Field& F = *A.F;
    u32 n = A.dim;
    if (n == 0) return Mat(0, 0);
    IsoSearch s{A, B, RA, RB, 0, node_budget, {}, {}, {}};
    for (u32 i = 0; i < n; ++i) {
        Vec ei(n, 0);
        ei[i] = F.one();
        s.a_charpolys.push_back(char_poly(F, A.ad(ei)));
    }
    if (!s.extend(0)) return std::nullopt;
    Mat T(n, n);
    for (u32 j = 0; j < n; ++j)
        for (u32 i = 0; i < n; ++i) T(i, j) = s.images[j][i];
    return T;
}

}  // namespace

std::optional<Mat> find_isomorphism(const LieAlgebra& A, const LieAlgebra& B, u64 node_budget) {
    return run_iso(A, B, nullptr, nullptr, node_budget);
}

std::optional<Mat> find_isomorphism(const RestrictedAlgebra& A, const RestrictedAlgebra& B,
                                    u64 node_budget) {
    return run_iso(*A.L, *B.L, &A, &B, node_budget);
}

bool isomorphic(const LieAlgebra& A, const LieAlgebra& B, u64 node_budget) {
    return find_isomorphism(A, B, node_budget).has_value();
}

bool isomorphic(const RestrictedAlgebra& A, const RestrictedAlgebra& B, u64 node_budget) {
    return find_isomorphism(A, B, node_budget).has_value();
}

}  // namespace plie
