#include "plie/projector.hpp"

#include <algorithm>

namespace plie {

namespace {

// image of a subspace under a linear map
Subspace push_subspace(const Field& F, const Mat& M, const Subspace& S, u32 target_dim) {
    std::vector<Vec> gens;
    for (const Vec& r : S.rows) gens.push_back(mat_apply(F, M, r));
    return subspace_span(F, target_dim, gens);
}

}  // namespace

Subspace projector(const RestrictedAlgebra& R, const RClass& C, const Budget& bud) {
    const Field& F = R.field();
    if (is_member(R, C, bud)) return subspace_full(F, R.dim());
    auto mins = minimal_p_ideals(R, bud.elements);
    if (mins.empty()) throw consistency_error("projector: non-member without minimal [p]-ideal");
    const Subspace& A = mins.front();
    RestrictedQuotient q = p_quotient(R, A);
    Subspace ubar = projector(q.R, C, bud);
    if (ubar.dim() < q.R.dim()) {
        // proper preimage; recurse inside it
        std::vector<Vec> gens;
        for (const Vec& r : ubar.rows) gens.push_back(mat_apply(F, q.sect, r));
        for (const Vec& r : A.rows) gens.push_back(r);
        Subspace U = subspace_span(F, R.dim(), gens);
        RestrictedView uv = restricted_view(R, U);
        Subspace ploc = projector(uv.R, C, bud);
        std::vector<Vec> amb;
        for (const Vec& r : ploc.rows) amb.push_back(uv.view.to_ambient(F, r));
        return subspace_span(F, R.dim(), amb);
    }
    // L/A in C, L not: complement A; the complement is a maximal
    // [p]-subalgebra (A cannot be central when C contains all atoms)
    auto M = complement_abelian_ideal(*R.L, A);
    if (!M)
        throw consistency_error("projector: no complement to the minimal [p]-ideal at the base");
    if (!p_closed_check(R, *M, ClosureMode::Subalgebra))
        throw consistency_error("projector: complement is not a [p]-subalgebra");
    return *M;
}

std::vector<Subspace> all_projectors(const RestrictedAlgebra& R, const RClass& C,
                                     const Budget& bud) {
    const Field& F = R.field();
    auto subs = p_subalgebra_lattice(R, bud.subspaces);
    auto ideals = p_ideal_lattice(R, bud.elements);
    // per-ideal data: quotient, its [p]-subalgebra lattice, membership flags
    struct KData {
        RestrictedQuotient q;
        std::vector<Subspace> lattice;
        std::vector<bool> member;
    };
    std::vector<KData> kdata;
    kdata.reserve(ideals.size());
    for (const Subspace& K : ideals) {
        KData d{p_quotient(R, K), {}, {}};
        d.lattice = p_subalgebra_lattice(d.q.R, bud.subspaces);
        d.member.reserve(d.lattice.size());
        for (const Subspace& W : d.lattice)
            d.member.push_back(is_member(restricted_view(d.q.R, W).R, C, bud));
        kdata.push_back(std::move(d));
    }
    std::vector<Subspace> out;
    for (const Subspace& U : subs) {
        bool ok = true;
        for (const KData& d : kdata) {
            Subspace img = push_subspace(F, d.q.proj, U, d.q.R.dim());  // (U+K)/K
            // img must be in C and maximal among the quotient's
            // [p]-subalgebras that are in C
            bool img_member = false;
            for (size_t w = 0; w < d.lattice.size(); ++w)
                if (d.lattice[w] == img) {
                    img_member = d.member[w];
                    break;
                }
            if (!img_member) {
                ok = false;
                break;
            }
            for (size_t w = 0; w < d.lattice.size(); ++w) {
                const Subspace& W = d.lattice[w];
                if (!d.member[w] || W.dim() <= img.dim() || !subspace_leq(F, img, W)) continue;
                ok = false;
                break;
            }
            if (!ok) break;
        }
        if (ok) out.push_back(U);
    }
    return out;
}

bool is_covering(const RestrictedAlgebra& R, const Subspace& U, const RClass& C,
                 const Budget& bud) {
    const Field& F = R.field();
    {
        RestrictedView uv = restricted_view(R, U);
        if (!is_member(uv.R, C, bud)) return false;
    }
    for (const Subspace& V : p_subalgebra_lattice(R, bud.subspaces)) {
        if (!subspace_leq(F, U, V)) continue;
        RestrictedView vv = restricted_view(R, V);
        // U in V's coordinates
        std::vector<Vec> uloc;
        for (const Vec& r : U.rows) {
            auto c = subspace_coords(F, V, r);
            if (!c) throw consistency_error("is_covering: U escaped V");
            uloc.push_back(*c);
        }
        Subspace Uv = subspace_span(F, V.dim(), uloc);
        for (const Subspace& K : p_ideal_lattice(vv.R, bud.elements)) {
            if (!is_member(p_quotient(vv.R, K).R, C, bud)) continue;
            if (subspace_sum(F, Uv, K).dim() != V.dim()) return false;
        }
    }
    return true;
}

Subspace projector_checked(const RestrictedAlgebra& R, const RClass& C, const Budget& bud) {
    Subspace P = projector(R, C, bud);
    auto brute = all_projectors(R, C, bud);
    if (std::find(brute.begin(), brute.end(), P) == brute.end())
        throw consistency_error("projector_checked: recursion disagrees with the definition");
    return P;
}

}  // namespace plie
