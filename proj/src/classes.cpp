#include "plie/classes.hpp"

#include <algorithm>

namespace plie {

// ---------------------------------------------------------------- lambda

bool LambdaSpace::contains(Fel lambda_in_E) const {
    auto digits = E->coeffs(lambda_in_E);
    Vec v(digits.begin(), digits.end());
    return subspace_contains(*Fp, coords, v);
}

namespace {

Vec e_coords(const Field& E, Fel x) {
    auto d = E.coeffs(x);
    return Vec(d.begin(), d.end());
}

Fel e_from_coords(const Field& E, const Vec& v) {
    std::vector<u32> d(v.begin(), v.end());
    return E.from_coeffs(d);
}

}  // namespace

LambdaSpace lambda_space(FieldPtr F, u32 ext_degree, const std::vector<Fel>& generators_in_E) {
    LambdaSpace lam;
    lam.F = F;
    lam.ext_degree = ext_degree;
    lam.E = field_make(F->p(), F->m() * ext_degree);
    lam.emb = std::make_shared<const Embedding>(F, lam.E);
    lam.Fp = field_make(F->p(), 1);
    // F-span closure: GF(p)-span of emb(basis of F) * generators
    std::vector<Vec> gens;
    for (Fel g : generators_in_E) {
        for (u32 i = 0; i < F->m(); ++i) {
            std::vector<u32> c(F->m(), 0);
            c[i] = 1;
            Fel fb = F->from_coeffs(c);
            gens.push_back(e_coords(*lam.E, lam.E->mul((*lam.emb)(fb), g)));
        }
    }
    lam.coords = subspace_span(*lam.Fp, F->m() * ext_degree, gens);
    return lam;
}

LambdaSpace lambda_prime_field(FieldPtr F) {
    return lambda_space(F, 1, {F->one()});
}

PNormalReport is_p_normal(const LambdaSpace& lam) {
    PNormalReport rep;
    rep.p_normal = true;
    rep.conjugation_closed = true;
    u64 p = lam.E->p();
    u64 q = 1;
    for (u32 i = 0; i < lam.F->m(); ++i) q *= p;
    for (const Vec& row : lam.coords.rows) {
        Fel x = e_from_coords(*lam.E, row);
        if (!lam.contains(lam.E->pow(x, p))) rep.p_normal = false;
        if (!lam.contains(lam.E->pow(x, q))) rep.conjugation_closed = false;
    }
    return rep;
}

// ------------------------------------------------------------ membership

std::vector<RestrictedAlgebra> primitive_quotients(const RestrictedAlgebra& R,
                                                   const Budget& bud) {
    std::vector<RestrictedAlgebra> out;
    for (const Subspace& K : p_ideal_lattice(R, bud.elements)) {
        RestrictedQuotient q = p_quotient(R, K);
        if (is_primitive(q.R, bud.elements)) out.push_back(q.R);
    }
    return out;
}

MembershipResult membership(const RestrictedAlgebra& R, const RClass& C, const Budget& bud) {
    MembershipResult res;
    for (const Subspace& K : p_ideal_lattice(R, bud.elements)) {
        RestrictedQuotient q = p_quotient(R, K);
        auto soc = is_primitive(q.R, bud.elements);
        if (!soc) continue;
        ++res.primitive_quotients_checked;
        if (!C.skeleton(q.R, *soc, bud)) {
            res.member = false;
            res.failing_kernel = K;
            return res;
        }
    }
    res.member = true;
    return res;
}

bool is_member(const RestrictedAlgebra& R, const RClass& C, const Budget& bud) {
    return membership(R, C, bud).member;
}

// ------------------------------------------------------- series utilities

Subspace nilpotent_residual(const RestrictedAlgebra& R) {
    SeriesReport lcs = series(*R.L, SeriesReport::LowerCentral);
    return p_closure(R, lcs.terms.back(), ClosureMode::Ideal);
}

u32 nilpotent_length(const RestrictedAlgebra& R) {
    RestrictedAlgebra cur = R;
    u32 len = 0;
    while (cur.dim() > 0) {
        Subspace res = nilpotent_residual(cur);
        ++len;
        if (res.dim() == 0) break;          // this layer is nilpotent, done
        if (res.dim() == cur.dim()) break;  // perfect core; not soluble
        cur = restricted_view(cur, res).R;
    }
    return len;
}

std::vector<Subspace> ordinary_chief_series(const LieAlgebra& L, u64 element_budget) {
    const Field& F = *L.F;
    std::vector<Subspace> ascending;
    ascending.push_back(subspace_zero(L.dim));
    LiePtr cur = std::make_shared<LieAlgebra>(L);
    Mat lift = mat_identity(F, L.dim);
    while (ascending.back().dim() < L.dim) {
        auto mins = minimal_ideals(*cur, element_budget);
        if (mins.empty()) throw consistency_error("ordinary_chief_series: no minimal ideal");
        const Subspace& A = mins.front();
        std::vector<Vec> gens;
        for (const Vec& r : A.rows) gens.push_back(mat_apply(F, lift, r));
        for (const Vec& r : ascending.back().rows) gens.push_back(r);
        ascending.push_back(subspace_span(F, L.dim, gens));
        if (ascending.back().dim() == L.dim) break;
        Quotient q = quotient(*cur, A);
        lift = mat_mul(F, lift, q.sect);
        cur = q.algebra;
    }
    std::vector<Subspace> terms;
    for (size_t i = ascending.size(); i-- > 0;) terms.push_back(ascending[i]);
    return terms;
}

Subspace factor_centralizer(const LieAlgebra& L, const Subspace& upper, const Subspace& lower) {
    const Field& F = *L.F;
    // x with [x, upper] <= lower
    if (upper.dim() == 0) return subspace_full(F, L.dim);
    auto residue = [&](Vec v) {
        for (u32 k = 0; k < lower.dim(); ++k) {
            Fel c = v[lower.pivots[k]];
            if (c != 0) v = vec_sub(F, v, vec_scale(F, c, lower.rows[k]));
        }
        return v;
    };
    Mat sys(upper.dim() * L.dim, L.dim);
    for (u32 r = 0; r < upper.dim(); ++r)
        for (u32 j = 0; j < L.dim; ++j) {
            Vec ej(L.dim, 0);
            ej[j] = F.one();
            Vec b = residue(L.bracket(ej, upper.rows[r]));
            for (u32 t = 0; t < L.dim; ++t) sys(r * L.dim + t, j) = b[t];
        }
    return kernel(F, sys);
}

Subspace nilradical(const RestrictedAlgebra& R, const Budget& bud) {
    const Field& F = R.field();
    auto terms = ordinary_chief_series(*R.L, bud.elements);
    Subspace N = subspace_full(F, R.dim());
    for (size_t i = 0; i + 1 < terms.size(); ++i)
        N = subspace_intersect(F, N, factor_centralizer(*R.L, terms[i], terms[i + 1]));
    return N;
}

Subspace nilradical_p(const RestrictedAlgebra& R, const Budget& bud) {
    const Field& F = R.field();
    ChiefSeries cs = p_chief_series(R, bud.elements);
    Subspace N = subspace_full(F, R.dim());
    for (const auto& f : cs.factors)
        N = subspace_intersect(F, N, factor_centralizer(*R.L, f.upper, f.lower));
    return N;
}

// --------------------------------------------------------------- classes

RClassPtr class_pS() {
    auto c = std::make_shared<RClass>();
    c->name = "pS";
    c->formation = c->saturated = true;
    c->skeleton = [](const RestrictedAlgebra&, const Subspace&, const Budget&) { return true; };
    c->direct = [](const RestrictedAlgebra&, const Budget&) { return true; };
    return c;
}

RClassPtr class_pN() {
    auto c = std::make_shared<RClass>();
    c->name = "pN";
    c->formation = c->saturated = true;
    c->skeleton = [](const RestrictedAlgebra& P, const Subspace& soc, const Budget&) {
        return soc.dim() == P.dim();  // primitive nilpotent = atom
    };
    c->direct = [](const RestrictedAlgebra& R, const Budget&) { return is_nilpotent(*R.L); };
    return c;
}

RClassPtr class_pA() {
    auto c = std::make_shared<RClass>();
    c->name = "pA";
    c->formation = true;
    c->saturated = false;  // the abelian formation is not saturated
    c->skeleton = [](const RestrictedAlgebra& P, const Subspace&, const Budget&) {
        return P.L->is_abelian();
    };
    c->direct = [](const RestrictedAlgebra& R, const Budget&) { return R.L->is_abelian(); };
    return c;
}

RClassPtr class_pC() {
    auto c = std::make_shared<RClass>();
    c->name = "pC";
    c->formation = c->saturated = true;
    auto completely_soluble = [](const RestrictedAlgebra& R, const Budget&) {
        Subspace D = derived_subalgebra(*R.L);
        if (D.dim() == 0) return true;
        return is_nilpotent(*subalgebra_view(*R.L, D).algebra);
    };
    c->skeleton = [completely_soluble](const RestrictedAlgebra& P, const Subspace&,
                                       const Budget& b) { return completely_soluble(P, b); };
    c->direct = completely_soluble;
    return c;
}

RClassPtr class_pU() {
    auto c = std::make_shared<RClass>();
    c->name = "pU";
    c->formation = c->saturated = true;
    auto supersoluble = [](const RestrictedAlgebra& R, const Budget& b) {
        for (const auto& f : p_chief_series(R, b.elements).factors)
            if (!f.atom_factor) return false;
        return true;
    };
    c->skeleton = [supersoluble](const RestrictedAlgebra& P, const Subspace&, const Budget& b) {
        return supersoluble(P, b);
    };
    c->direct = supersoluble;
    return c;
}

RClassPtr class_pNk(u32 k) {
    auto c = std::make_shared<RClass>();
    c->name = "pN^" + std::to_string(k);
    c->formation = c->saturated = true;
    auto pred = [k](const RestrictedAlgebra& R, const Budget&) {
        return nilpotent_length(R) <= k;
    };
    c->skeleton = [pred](const RestrictedAlgebra& P, const Subspace&, const Budget& b) {
        return pred(P, b);
    };
    c->direct = pred;
    return c;
}

RClassPtr class_nilpotent_class_le(u32 k) {
    auto c = std::make_shared<RClass>();
    c->name = "pN_" + std::to_string(k);
    c->formation = true;
    c->saturated = false;
    auto pred = [k](const RestrictedAlgebra& R, const Budget&) {
        SeriesReport lcs = series(*R.L, SeriesReport::LowerCentral);
        // class <= k: the (k+1)-st term (index k) is zero
        if (!lcs.stabilized_at_zero) return false;
        return lcs.terms.size() <= static_cast<size_t>(k) + 1;
    };
    c->skeleton = [pred](const RestrictedAlgebra& P, const Subspace&, const Budget& b) {
        return pred(P, b);
    };
    c->direct = pred;
    return c;
}

RClassPtr class_pEv(const LambdaSpace& lam) {
    auto rep = is_p_normal(lam);
    if (!rep.p_normal)
        throw std::invalid_argument("class_pEv: the subspace is not p-normal");
    auto c = std::make_shared<RClass>();
    c->name = "pEv";
    c->formation = c->saturated = true;
    LambdaSpace l = lam;
    auto pred = [l](const RestrictedAlgebra& R, const Budget& b) {
        return all_ad_eigenvalues_in(R, l, b);
    };
    c->skeleton = [pred](const RestrictedAlgebra& P, const Subspace&, const Budget& b) {
        return pred(P, b);
    };
    c->direct = pred;
    return c;
}

RClassPtr class_metabelian_nilpotent_abelian() {
    auto c = std::make_shared<RClass>();
    c->name = "M";
    c->formation = true;
    c->saturated = false;
    auto pred = [](const RestrictedAlgebra& R, const Budget& b) {
        Subspace D = derived_subalgebra(*R.L);
        if (D.dim() > 0 && !subalgebra_view(*R.L, D).algebra->is_abelian()) return false;
        for (const Subspace& S : enumerate_subalgebras(*R.L, SubalgFilter::All, b.subspaces)) {
            auto V = subalgebra_view(*R.L, S);
            if (is_nilpotent(*V.algebra) && !V.algebra->is_abelian()) return false;
        }
        return true;
    };
    c->skeleton = [pred](const RestrictedAlgebra& P, const Subspace&, const Budget& b) {
        return pred(P, b);
    };
    c->direct = pred;
    return c;
}

RClassPtr residual_product(RClassPtr K, RClassPtr F2) {
    if (!F2->formation || !F2->direct)
        throw std::invalid_argument("residual_product: second factor must be a formation");
    auto c = std::make_shared<RClass>();
    c->name = K->name + "*" + F2->name;
    c->formation = c->saturated = true;
    RClassPtr k = K, f = F2;
    auto pred = [k, f](const RestrictedAlgebra& R, const Budget& b) {
        Subspace res = residual(R, *f, b);
        if (res.dim() == 0) return true;  // residual 0 is in every class here
        auto view = restricted_view(R, res);
        return k->direct ? k->direct(view.R, b) : is_member(view.R, *k, b);
    };
    c->skeleton = [pred](const RestrictedAlgebra& P, const Subspace&, const Budget& b) {
        return pred(P, b);
    };
    c->direct = pred;
    return c;
}

RClassPtr class_ploc(RClassPtr F2) {
    if (!F2->formation || !F2->direct)
        throw std::invalid_argument("class_ploc: needs a formation");
    auto c = std::make_shared<RClass>();
    c->name = "ploc:" + F2->name;
    c->formation = c->saturated = true;
    RClassPtr f = F2;
    auto pred = [f](const RestrictedAlgebra& R, const Budget& b) {
        Subspace N = nilradical(R, b);
        if (!p_closed_check(R, N, ClosureMode::Ideal))
            throw consistency_error("class_ploc: nil radical is not a [p]-ideal");
        return f->direct(p_quotient(R, N).R, b);
    };
    c->skeleton = [pred](const RestrictedAlgebra& P, const Subspace&, const Budget& b) {
        return pred(P, b);
    };
    c->direct = pred;
    return c;
}

RClassPtr class_join(RClassPtr a, RClassPtr b) {
    auto c = std::make_shared<RClass>();
    c->name = "join:" + a->name + "," + b->name;
    c->formation = false;  // joins need not be formations
    c->saturated = true;   // every p-Schunck class is frat-closed
    RClassPtr x = a, y = b;
    c->skeleton = [x, y](const RestrictedAlgebra& P, const Subspace& soc, const Budget& bud) {
        return x->skeleton(P, soc, bud) || y->skeleton(P, soc, bud);
    };
    return c;
}

RClassPtr class_meet(RClassPtr a, RClassPtr b) {
    auto c = std::make_shared<RClass>();
    c->name = "meet:" + a->name + "," + b->name;
    c->formation = a->formation && b->formation && a->direct && b->direct;
    c->saturated = a->saturated && b->saturated;
    RClassPtr x = a, y = b;
    c->skeleton = [x, y](const RestrictedAlgebra& P, const Subspace& soc, const Budget& bud) {
        return x->skeleton(P, soc, bud) && y->skeleton(P, soc, bud);
    };
    if (c->formation)
        c->direct = [x, y](const RestrictedAlgebra& R, const Budget& bud) {
            return x->direct(R, bud) && y->direct(R, bud);
        };
    return c;
}

Subspace residual(const RestrictedAlgebra& R, const RClass& F, const Budget& bud) {
    if (!F.formation || !F.direct)
        throw std::invalid_argument("residual: class is not a formation");
    const Field& f = R.field();
    std::vector<Subspace> good;
    for (const Subspace& K : p_ideal_lattice(R, bud.elements)) {
        if (F.direct(p_quotient(R, K).R, bud)) good.push_back(K);
    }
    if (good.empty()) throw consistency_error("residual: no quotient lies in the formation");
    Subspace res = subspace_full(f, R.dim());
    for (const Subspace& K : good) res = subspace_intersect(f, res, K);
    // certificates: the intersection itself has quotient in F and is minimal
    if (!F.direct(p_quotient(R, res).R, bud))
        throw consistency_error("residual: intersection quotient escaped the formation");
    for (const Subspace& K : good)
        if (!subspace_leq(f, res, K)) throw consistency_error("residual: not minimal");
    return res;
}

ClosureReport closure_check(const RClass& C, const std::vector<RestrictedAlgebra>& sample,
                            const Budget& bud) {
    ClosureReport rep;
    const auto in = [&](const RestrictedAlgebra& R) { return is_member(R, C, bud); };
    for (size_t idx = 0; idx < sample.size(); ++idx) {
        const RestrictedAlgebra& R = sample[idx];
        auto ideals = p_ideal_lattice(R, bud.elements);
        bool member = in(R);
        // quotient membership once per [p]-ideal
        std::vector<bool> qmem(ideals.size());
        for (size_t i = 0; i < ideals.size(); ++i) qmem[i] = in(p_quotient(R, ideals[i]).R);
        if (member) {
            for (size_t i = 0; i < ideals.size(); ++i)
                if (!qmem[i]) {
                    rep.quot_ok = false;
                    rep.counterexample = "quotient closure fails at sample " + std::to_string(idx);
                    return rep;
                }
        } else {
            // sdir: K1 ∩ K2 = 0 with both quotients in C forces membership
            for (size_t i = 0; i < ideals.size(); ++i)
                for (size_t j = i; j < ideals.size(); ++j) {
                    if (!qmem[i] || !qmem[j]) continue;
                    if (subspace_intersect(R.field(), ideals[i], ideals[j]).dim() != 0) continue;
                    rep.sdir_ok = false;
                    rep.counterexample =
                        "subdirect closure fails at sample " + std::to_string(idx);
                    return rep;
                }
            // frat: K <= Psi with quotient in C forces membership
            Subspace psi = p_frattini(R, bud.subspaces);
            for (size_t i = 0; i < ideals.size(); ++i) {
                if (!qmem[i] || !subspace_leq(R.field(), ideals[i], psi)) continue;
                rep.frat_ok = false;
                rep.counterexample = "frattini closure fails at sample " + std::to_string(idx);
                return rep;
            }
        }
    }
    return rep;
}

ChiefFactorReport classify_chief_factor(const RestrictedAlgebra& R, const Subspace& upper,
                                        const Subspace& lower, const RClass& F,
                                        const Budget& bud) {
    const Field& f = R.field();
    ChiefFactorReport rep;
    rep.centralizer = factor_centralizer(*R.L, upper, lower);
    if (!p_closed_check(R, rep.centralizer, ClosureMode::Ideal))
        throw consistency_error("classify_chief_factor: centralizer is not a [p]-ideal");
    RestrictedQuotient q = p_quotient(R, rep.centralizer);
    Representation mod = chief_factor_module(R, upper, lower);
    // module of the quotient: act by the sections of the quotient basis
    std::vector<Mat> act;
    for (u32 i = 0; i < q.R.dim(); ++i) {
        Vec lift(R.dim(), 0);
        for (u32 r = 0; r < R.dim(); ++r) lift[r] = q.sect(r, i);
        act.push_back(mod.act(f, lift));
    }
    Representation modq = rep_make(q.R.L, mod.dim_v, std::move(act));
    RestrictedAlgebra X = restricted_split_extension(q.R, modq);
    rep.f_central = is_member(X, F, bud);
    return rep;
}

namespace {

bool module_f_central(const RestrictedAlgebra& S, const Representation& rho, const RClass& F,
                      const Budget& bud) {
    const Field& f = S.field();
    // C_S(V) = kernel of x -> rho(x)
    u32 n = S.dim(), dv = rho.dim_v;
    Mat sys(dv * dv, n);
    for (u32 j = 0; j < n; ++j)
        for (u32 r = 0; r < dv; ++r)
            for (u32 c2 = 0; c2 < dv; ++c2) sys(r * dv + c2, j) = rho.action[j](r, c2);
    Subspace C = kernel(f, sys);
    if (!p_closed_check(S, C, ClosureMode::Ideal))
        throw consistency_error("module_f_central: centralizer not a [p]-ideal");
    RestrictedQuotient q = p_quotient(S, C);
    std::vector<Mat> act;
    for (u32 i = 0; i < q.R.dim(); ++i) {
        Vec lift(S.dim(), 0);
        for (u32 r = 0; r < S.dim(); ++r) lift[r] = q.sect(r, i);
        act.push_back(rho.act(f, lift));
    }
    Representation rq = rep_make(q.R.L, dv, std::move(act));
    RestrictedAlgebra X = restricted_split_extension(q.R, rq);
    return is_member(X, F, bud);
}

}  // namespace

bool is_hypercentral(const RestrictedAlgebra& R, const Representation& rho, const RClass& F,
                     const Budget& bud) {
    auto cs = composition_series(rho, bud.elements);
    for (const Representation& fac : cs.factors)
        if (!module_f_central(R, fac, F, bud)) return false;
    return true;
}

HypercentralDecomposition hypercentral_decomposition(const RestrictedAlgebra& R,
                                                     const Subspace& S,
                                                     const Representation& rho, const RClass& F,
                                                     const Budget& bud) {
    const Field& f = R.field();
    RestrictedView sv = restricted_view(R, S);
    Representation rhoS = rep_restrict(rho, sv.view);
    HypercentralDecomposition out{subspace_zero(rho.dim_v), subspace_zero(rho.dim_v)};
    for (const Subspace& W : submodules(rhoS, bud.elements)) {
        if (W.dim() == 0) continue;
        // composition factors of W as an S-module
        Representation wmod = rep_subquotient(rhoS, W, subspace_zero(rho.dim_v));
        auto cs = composition_series(wmod, bud.elements);
        bool all_central = true, all_eccentric = true;
        for (const Representation& fac : cs.factors) {
            if (module_f_central(sv.R, fac, F, bud))
                all_eccentric = false;
            else
                all_central = false;
        }
        if (all_central) out.central_part = subspace_sum(f, out.central_part, W);
        if (all_eccentric) out.eccentric_part = subspace_sum(f, out.eccentric_part, W);
    }
    // verification: both parts are L-submodules and the sum is direct
    if (!is_submodule(rho, out.central_part) || !is_submodule(rho, out.eccentric_part) ||
        subspace_intersect(f, out.central_part, out.eccentric_part).dim() != 0 ||
        subspace_sum(f, out.central_part, out.eccentric_part).dim() != rho.dim_v)
        throw consistency_error("hypercentral_decomposition: hypothesis violation");
    return out;
}

// ------------------------------------------------------------ eigenvalues

EigenvalueScan ad_eigenvalues_in_ext(const RestrictedAlgebra& R, const LambdaSpace& lam,
                                     const Budget& bud) {
    const Field& F = R.field();
    EigenvalueScan out;
    u64 total = vec_count(F, R.dim());
    if (total > bud.elements) {
        // sampled regime: the leading stretch of the element order; the
        // result is flagged and must never feed an exact verdict
        out.exhaustive = false;
        total = bud.elements;
    }
    for (u64 idx = 0; idx < total; ++idx) {
        Vec x = vec_from_index(F, R.dim(), idx);
        Poly chi = char_poly(F, R.L->ad(x));
        if (!poly_splits_in_ext(F, chi, lam.ext_degree)) out.all_split = false;
        for (Fel r : roots_in(*lam.E, chi, *lam.emb))
            if (std::find(out.roots_in_E.begin(), out.roots_in_E.end(), r) ==
                out.roots_in_E.end())
                out.roots_in_E.push_back(r);
    }
    std::sort(out.roots_in_E.begin(), out.roots_in_E.end());
    return out;
}

bool all_ad_eigenvalues_in(const RestrictedAlgebra& R, const LambdaSpace& lam, const Budget& bud) {
    const Field& F = R.field();
    u64 total = vec_count(F, R.dim());
    if (total > bud.elements) throw capacity_error("all_ad_eigenvalues_in: element scan over budget");
    for (u64 idx = 0; idx < total; ++idx) {
        Vec x = vec_from_index(F, R.dim(), idx);
        Poly chi = char_poly(F, R.L->ad(x));
        if (!poly_splits_in_ext(F, chi, lam.ext_degree)) return false;
        for (Fel r : roots_in(*lam.E, chi, *lam.emb))
            if (!lam.contains(r)) return false;
    }
    return true;
}

RestrictedAlgebra build_P_lambda(const LambdaSpace& lam, Fel lambda_in_E) {
    const Field& F = *lam.F;
    Poly m = min_poly_over_subfield(*lam.emb, lambda_in_E);
    u32 k = static_cast<u32>(m.deg());
    Mat a = companion_matrix(F, m);
    // p-closure of <a> in gl(k): span of iterated p-th powers (commuting)
    std::vector<Vec> flat;
    auto flatten = [&](const Mat& M) {
        Vec v(k * k);
        for (u32 i = 0; i < k * k; ++i) v[i] = M.a[i];
        return v;
    };
    std::vector<Mat> pool = {a};
    flat.push_back(flatten(a));
    Subspace span = subspace_span(F, k * k, flat);
    while (true) {
        std::vector<Mat> extra;
        for (const Mat& M : pool) {
            Mat Mp = mat_pow(F, M, F.p());
            if (!subspace_contains(F, span, flatten(Mp))) extra.push_back(Mp);
        }
        if (extra.empty()) break;
        for (Mat& M : extra) {
            flat.push_back(flatten(M));
            pool.push_back(std::move(M));
        }
        span = subspace_span(F, k * k, flat);
    }
    u32 na = span.dim();
    std::vector<Mat> basis;
    for (const Vec& row : span.rows) {
        Mat M(k, k);
        for (u32 i = 0; i < k * k; ++i) M.a[i] = row[i];
        basis.push_back(std::move(M));
    }
    // abelian algebra on the basis (all the matrices commute)
    std::vector<Vec> sc(na * (na - 1) / 2, Vec(na, 0));
    LiePtr A = lie_make(lam.F, na, sc);
    // p-operation: matrix p-th power in the span coordinates
    std::vector<Vec> images;
    for (const Mat& M : basis) {
        Mat Mp = mat_pow(F, M, F.p());
        auto c = subspace_coords(F, span, flatten(Mp));
        if (!c) throw consistency_error("build_P_lambda: p-th power escaped the closure");
        images.push_back(*c);
    }
    RestrictedAlgebra RA = jacobson_construct(A, images);
    Representation rho = rep_make(A, k, basis);
    if (!is_p_module(RA, rho)) throw consistency_error("build_P_lambda: module is not a p-module");
    return restricted_split_extension(RA, rho);
}

std::pair<u32, u64> find_qn(u64 p, u32 n_bound) {
    for (u32 n = 1; n <= n_bound; ++n) {
        unsigned __int128 pn = 1;
        for (u32 i = 0; i < n; ++i) {
            pn *= p;
            if (pn > (static_cast<unsigned __int128>(1) << 62))
                throw capacity_error("find_qn: search bound exceeded");
        }
        u64 val = static_cast<u64>(pn - 1);
        // prime divisors in ascending order
        for (u64 d = 2; d * d <= val; ++d) {
            if (val % d != 0) continue;
            if (d > p) return {n, d};
            while (val % d == 0) val /= d;
        }
        if (val > p && val > 1) return {n, val};
    }
    throw capacity_error("find_qn: no (n, q) within the bound");
}

// --------------------------------------------------------------- ordinary

std::optional<Subspace> ordinary_primitive(const LieAlgebra& L, u64 element_budget) {
    for (const Subspace& A : minimal_ideals(L, element_budget)) {
        if (centralizer(L, A) == A) return A;
    }
    return std::nullopt;
}

MembershipResult o_membership(const LieAlgebra& L, const OClass& C, const Budget& bud) {
    MembershipResult res;
    for (const Subspace& K : ideal_lattice(L, bud.elements)) {
        Quotient q = quotient(L, K);
        auto soc = ordinary_primitive(*q.algebra, bud.elements);
        if (!soc) continue;
        ++res.primitive_quotients_checked;
        if (!C.skeleton(*q.algebra, *soc, bud)) {
            res.member = false;
            res.failing_kernel = K;
            return res;
        }
    }
    res.member = true;
    return res;
}

OClassPtr oclass_all() {
    auto c = std::make_shared<OClass>();
    c->name = "S";
    c->formation = true;
    c->skeleton = [](const LieAlgebra&, const Subspace&, const Budget&) { return true; };
    return c;
}

OClassPtr oclass_nilpotent() {
    auto c = std::make_shared<OClass>();
    c->name = "N";
    c->formation = true;
    c->skeleton = [](const LieAlgebra& P, const Subspace& soc, const Budget&) {
        return soc.dim() == P.dim;
    };
    return c;
}

bool und_membership(const LieAlgebra& L, const RClass& K, const Budget& bud) {
    if (!is_restrictable(L)) return false;
    auto Lp = std::make_shared<LieAlgebra>(L);
    for (const RestrictedAlgebra& R : enumerate_p_operations(Lp, bud.p_operations))
        if (is_member(R, K, bud)) return true;
    return false;
}

OClassPtr ord_class(RClassPtr K) {
    auto c = std::make_shared<OClass>();
    c->name = "ord:" + K->name;
    RClassPtr k = K;
    c->skeleton = [k](const LieAlgebra& P, const Subspace&, const Budget& bud) {
        return und_membership(P, *k, bud);
    };
    return c;
}

RClassPtr res_class(OClassPtr H) {
    auto c = std::make_shared<RClass>();
    c->name = "res:" + H->name;
    c->formation = H->formation;
    c->saturated = false;
    OClassPtr h = H;
    auto pred = [h](const RestrictedAlgebra& R, const Budget& bud) {
        return o_membership(*R.L, *h, bud).member;
    };
    c->skeleton = [pred](const RestrictedAlgebra& P, const Subspace&, const Budget& bud) {
        return pred(P, bud);
    };
    if (c->formation) c->direct = pred;
    return c;
}

}  // namespace plie
