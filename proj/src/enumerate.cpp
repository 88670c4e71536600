#include "plie/enumerate.hpp"

#include <algorithm>

namespace plie {

namespace {

// first-violation pruning: stop at the first bracket that escapes
bool subalgebra_pred(const LieAlgebra& L, const Subspace& S) {
    for (u32 i = 0; i < S.dim(); ++i)
        for (u32 j = i + 1; j < S.dim(); ++j)
            if (!subspace_contains(*L.F, S, L.bracket(S.rows[i], S.rows[j]))) return false;
    return true;
}

bool ideal_pred(const LieAlgebra& L, const Subspace& S) {
    for (u32 i = 0; i < L.dim; ++i) {
        Vec ei(L.dim, 0);
        ei[i] = L.F->one();
        for (const Vec& s : S.rows)
            if (!subspace_contains(*L.F, S, L.bracket(ei, s))) return false;
    }
    return true;
}

}  // namespace

std::vector<Subspace> enumerate_subalgebras(const LieAlgebra& L, SubalgFilter filter, u64 budget,
                                            scan::Mode mode) {
    auto keep = [&](const Subspace& S) {
        if (!subalgebra_pred(L, S)) return false;
        if (filter == SubalgFilter::Ideals) return ideal_pred(L, S);
        return true;
    };
    std::vector<Subspace> subs = scan::subspaces(*L.F, L.dim, keep, budget, mode);
    if (filter != SubalgFilter::Maximal) return subs;
    return maximal_members(*L.F, subs, L.dim);
}

std::vector<Subspace> enumerate_subalgebras(const LieAlgebra& L,
                                            const std::function<bool(const Subspace&)>& pred,
                                            u64 budget, scan::Mode mode) {
    auto keep = [&](const Subspace& S) { return subalgebra_pred(L, S) && pred(S); };
    return scan::subspaces(*L.F, L.dim, keep, budget, mode);
}

std::vector<Subspace> maximal_members(const Field& F, const std::vector<Subspace>& family,
                                      u32 full_dim) {
    std::vector<Subspace> proper;
    for (const Subspace& s : family)
        if (s.dim() < full_dim) proper.push_back(s);
    std::vector<Subspace> maximal;
    for (const Subspace& s : proper) {
        bool is_max = true;
        for (const Subspace& t : proper)
            if (t.dim() > s.dim() && subspace_leq(F, s, t)) {
                is_max = false;
                break;
            }
        if (is_max) maximal.push_back(s);
    }
    return maximal;
}

std::vector<Subspace> maximal_subalgebras(const LieAlgebra& L, u64 budget, scan::Mode mode) {
    return enumerate_subalgebras(L, SubalgFilter::Maximal, budget, mode);
}

Subspace frattini(const LieAlgebra& L, u64 budget, scan::Mode mode) {
    auto maxes = maximal_subalgebras(L, budget, mode);
    Subspace phi = subspace_full(*L.F, L.dim);
    for (const Subspace& m : maxes) phi = subspace_intersect(*L.F, phi, m);
    return phi;
}

std::vector<Subspace> ideal_lattice(const LieAlgebra& L, u64 element_budget) {
    const Field& F = *L.F;
    u64 total = vec_count(F, L.dim);
    if (total > element_budget) throw capacity_error("ideal_lattice: element scan over budget");
    std::vector<Subspace> cyc;
    for (u64 idx = 1; idx < total; ++idx) {
        Subspace s = closure(L, subspace_span(F, L.dim, {vec_from_index(F, L.dim, idx)}),
                             ClosureMode::Ideal);
        if (std::find(cyc.begin(), cyc.end(), s) == cyc.end()) cyc.push_back(std::move(s));
    }
    std::vector<Subspace> all = cyc;
    all.push_back(subspace_zero(L.dim));
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

std::vector<Subspace> minimal_ideals(const LieAlgebra& L, u64 element_budget) {
    const Field& F = *L.F;
    if (L.dim == 0) return {};
    // containers: C_L(D_k) ∩ D_k along the derived series (D_0 = L gives Z(L))
    std::vector<Subspace> containers;
    Subspace D = subspace_full(F, L.dim);
    while (true) {
        containers.push_back(subspace_intersect(F, centralizer(L, D), D));
        // next derived term
        std::vector<Vec> gens;
        for (u32 i = 0; i < D.dim(); ++i)
            for (u32 j = i + 1; j < D.dim(); ++j) gens.push_back(L.bracket(D.rows[i], D.rows[j]));
        Subspace next = subspace_span(F, L.dim, gens);
        if (next == D) {
            // chain stabilized above zero (non-soluble input): the descent
            // argument says nothing about ideals inside the stable term, so
            // scan all of it
            if (D.dim() > 0) containers.push_back(D);
            break;
        }
        if (next.dim() == 0) break;
        D = next;
    }
    std::vector<Subspace> cyc;
    for (const Subspace& C : containers) {
        u64 total = vec_count(F, C.dim());
        if (total > element_budget) throw capacity_error("minimal_ideals: container scan over budget");
        for (u64 idx = 1; idx < total; ++idx) {
            Vec coef = vec_from_index(F, C.dim(), idx);
            Vec v(L.dim, 0);
            for (u32 k = 0; k < C.dim(); ++k)
                if (coef[k] != 0) v = vec_add(F, v, vec_scale(F, coef[k], C.rows[k]));
            Subspace s = closure(L, subspace_span(F, L.dim, {v}), ClosureMode::Ideal);
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

}  // namespace plie
