#include "plie/suites.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace plie {
namespace suites {

namespace {

using Clock = std::chrono::steady_clock;

// Run fn(i) over [0, n), collecting failure lists in index order.
template <typename Fn>
void for_each_indexed(u32 n, bool parallel, SuiteResult& res, Fn&& fn) {
    std::vector<std::vector<Failure>> fails(n);
#ifdef _OPENMP
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            fails[static_cast<size_t>(i)] = fn(static_cast<u32>(i));
    } else
#endif
    {
        for (u32 i = 0; i < n; ++i) fails[i] = fn(i);
    }
    for (auto& fv : fails)
        for (auto& f : fv) res.failures.push_back(std::move(f));
    res.instances += n;
}

std::string subspace_str(const Subspace& s) {
    std::string out = "dim" + std::to_string(s.dim());
    return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "examples",  "lemmas",        "projectors", "formations", "cohomology",
        "modules",   "intravariance", "envelopes",  "explus"};
    return names;
}

const std::vector<SampleItem>& restricted_sample(const Options& opt) {
    static std::map<std::string, std::vector<SampleItem>> cache;
    static std::mutex mu;
    std::string key;
    for (auto [p, d] : opt.sample_regimes) key += std::to_string(p) + ":" + std::to_string(d) + ";";
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<SampleItem> items;
    for (auto [p, maxd] : opt.sample_regimes) {
        auto algs = catalog::enumerate_small(p, maxd, opt.budget);
        for (size_t k = 0; k < algs.size(); ++k) {
            bool sol = is_soluble(*algs[k].algebra);
            for (size_t j = 0; j < algs[k].operations.size(); ++j) {
                std::string tag = "p=" + std::to_string(p) + " dim=" +
                                  std::to_string(algs[k].algebra->dim) + " #" +
                                  std::to_string(k) + " op=" + std::to_string(j);
                items.push_back({tag, algs[k].operations[j], sol});
            }
        }
    }
    return cache.emplace(key, std::move(items)).first->second;
}

std::vector<std::pair<std::string, RestrictedAlgebra>> catalog_sample() {
    std::vector<std::pair<std::string, RestrictedAlgebra>> out;
    for (u64 p : {2, 3}) {
        out.emplace_back("der@" + std::to_string(p), catalog::der_example(p));
        out.emplace_back("nilder@" + std::to_string(p), catalog::nilder_example(p));
        out.emplace_back("nocomp@" + std::to_string(p), catalog::nocomp_example(p));
        out.emplace_back("atom_null@" + std::to_string(p), catalog::atom_null(p));
        out.emplace_back("atom_nonnull@" + std::to_string(p), catalog::atom_nonnull(p));
        auto F = field_make(p, 1);
        out.emplace_back("P_lambda@" + std::to_string(p),
                         build_P_lambda(lambda_prime_field(F), F->one()));
    }
    out.emplace_back("noform_X@2", catalog::noform_X(2));
    out.emplace_back("noform_Y@2", catalog::noform_Y(2));
    out.emplace_back("P@2", catalog::example_P(2));
    out.emplace_back("Qstar@2", catalog::example_Qstar(2));
    out.emplace_back("noform_X@3", catalog::noform_X(3));
    out.emplace_back("P@3", catalog::example_P(3));
    out.emplace_back("Qstar@3", catalog::example_Qstar(3));
    return out;
}

namespace {

// ----------------------------------------------------------------- examples

SuiteResult suite_examples(const Options& opt) {
    SuiteResult res;
    res.name = "examples";
    auto check = [&](const std::string& inst, const std::string& law, bool ok,
                     const std::string& detail = "") {
        ++res.checks;
        if (!ok) res.failures.push_back({inst, law, detail});
    };
    struct Item {
        const char* key;
        u64 p;
    };
    std::vector<Item> items = {
        {"der", 2},      {"der", 3},      {"nilder", 2},   {"nilder", 3}, {"nocomp", 2},
        {"nocomp", 3},   {"noform_X", 2}, {"noform_X", 3}, {"noform_Y", 2},
        {"noform_Y", 3}, {"noform_L", 2}, {"noform_L", 3}, {"P", 2},      {"P", 3},
        {"Q", 2},        {"Q", 3},        {"Qstar", 2},    {"Qstar", 3},  {"T", 3},
        {"P_lambda", 2}, {"P_lambda", 3}, {"notpn", 2},    {"pnormal_variant", 3},
        {"atom_null", 2}, {"atom_nonnull", 2}};
    res.instances = static_cast<u32>(items.size());
    std::vector<std::vector<Failure>> fails(items.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (opt.parallel)
#endif
    for (long long i = 0; i < static_cast<long long>(items.size()); ++i) {
        const auto& it = items[static_cast<size_t>(i)];
        std::string inst = std::string(it.key) + "@" + std::to_string(it.p);
        try {
            for (const auto& r : catalog::check_facts(it.key, it.p, opt.budget)) {
                if (!r.pass)
                    fails[static_cast<size_t>(i)].push_back({inst, r.fact, r.detail});
            }
        } catch (const std::exception& e) {
            fails[static_cast<size_t>(i)].push_back({inst, "build", e.what()});
        }
    }
    for (auto& fv : fails) {
        res.checks += 1;
        for (auto& f : fv) res.failures.push_back(std::move(f));
    }
    check("find_qn", "value-at-2", find_qn(2) == std::pair<u32, u64>{2, 3});
    check("find_qn", "value-at-3", find_qn(3) == std::pair<u32, u64>{3, 13});
    for (u64 p : {2ull, 3ull, 5ull}) {
        auto [n, q] = find_qn(p);
        u64 pn = 1;
        for (u32 i = 0; i < n; ++i) pn *= p;
        check("find_qn", "divides", (pn - 1) % q == 0 && q > p);
    }
    return res;
}

// ------------------------------------------------------------------- lemmas

SuiteResult suite_lemmas(const Options& opt) {
    SuiteResult res;
    res.name = "lemmas";
    const auto& sample = restricted_sample(opt);
    const Budget& bud = opt.budget;
    for_each_indexed(static_cast<u32>(sample.size()), opt.parallel, res, [&](u32 idx) {
        std::vector<Failure> fails;
        const SampleItem& item = sample[idx];
        const RestrictedAlgebra& R = item.R;
        const Field& F = R.field();
        auto fail = [&](const std::string& law, const std::string& detail = "") {
            fails.push_back({item.tag, law, detail});
        };
        try {
            // abelian [p]-ideal existence (soluble, nonzero)
            if (item.soluble && R.dim() > 0) {
                auto mins = minimal_p_ideals(R, bud.elements);
                if (mins.empty()) fail("abelian-p-ideal-exists", "no minimal [p]-ideal");
                for (const Subspace& A : mins) {
                    auto V = subalgebra_view(*R.L, A);
                    if (!V.algebra->is_abelian()) fail("abelian-p-ideal-exists", "non-abelian");
                }
            }
            // chief factor classification
            if (item.soluble) {
                ChiefSeries cs = p_chief_series(R, bud.elements);
                for (const auto& f : cs.factors) {
                    auto fa = chief_factor_algebra(R, f.upper, f.lower);
                    if (!fa.L->is_abelian()) fail("chief-factor-classification", "non-abelian");
                    if (!f.null_factor && !(f.central && f.atom_factor))
                        fail("chief-factor-classification", "neither null nor central atom");
                }
            }
            // complements of abelian non-central minimal [p]-ideals are
            // maximal [p]-subalgebras
            if (item.soluble) {
                auto maxp = maximal_p_subalgebras(R, bud.subspaces);
                for (const Subspace& A : minimal_p_ideals(R, bud.elements)) {
                    if (centralizer(*R.L, A).dim() == R.dim()) continue;  // central
                    for (const Subspace& M : all_complements(*R.L, A, bud.subspaces)) {
                        if (!p_closed_check(R, M, ClosureMode::Subalgebra))
                            fail("complement-is-p-subalgebra", subspace_str(M));
                        else if (std::find(maxp.begin(), maxp.end(), M) == maxp.end())
                            fail("complement-is-maximal", subspace_str(M));
                    }
                }
            }
            // p-frattini: [p]-ideal, nilpotent, contains the frattini
            if (item.soluble) {
                Subspace psi = p_frattini(R, bud.subspaces);
                if (!p_closed_check(R, psi, ClosureMode::Ideal))
                    fail("p-frattini-is-p-ideal", subspace_str(psi));
                if (psi.dim() > 0 && !is_nilpotent(*subalgebra_view(*R.L, psi).algebra))
                    fail("p-frattini-nilpotent", "");
                Subspace phi = frattini(*R.L, bud.subspaces);
                if (!subspace_leq(F, phi, psi)) fail("p-frattini-contains-frattini", "");
                if (!is_ideal(*R.L, phi)) fail("frattini-is-ideal", "");
            }
            // engel subalgebras are [p]-closed (full element scan)
            {
                u64 total = vec_count(F, R.dim());
                for (u64 i = 0; i < total; ++i) {
                    Vec a = vec_from_index(F, R.dim(), i);
                    if (!p_closed_check(R, engel(*R.L, a), ClosureMode::Subalgebra)) {
                        fail("engel-p-closed", "");
                        break;
                    }
                }
            }
            // all maximal [p]-subalgebras ideals => nilpotent
            {
                bool all_ideals = true;
                for (const Subspace& M : maximal_p_subalgebras(R, bud.subspaces))
                    if (!is_ideal(*R.L, M)) all_ideals = false;
                if (all_ideals && R.dim() > 0 && !is_nilpotent(*R.L))
                    fail("maximal-ideals-forces-nilpotent", "");
            }
            // subnormal-under-frattini lifting: A subnormal, B <= A ∩ Psi a
            // [p]-ideal of A, A/B nilpotent (resp. in pU) => A nilpotent
            // (resp. in pU)
            {
                Subspace psi = p_frattini(R, bud.subspaces);
                for (const Subspace& A : p_subalgebra_lattice(R, bud.subspaces)) {
                    if (!is_p_subnormal(R, A)) continue;
                    RestrictedView av = restricted_view(R, A);
                    for (const Subspace& Bloc : p_ideal_lattice(av.R, bud.elements)) {
                        std::vector<Vec> amb;
                        for (const Vec& r : Bloc.rows) amb.push_back(av.view.to_ambient(F, r));
                        Subspace B = subspace_span(F, R.dim(), amb);
                        if (!subspace_leq(F, B, psi)) continue;
                        auto q = p_quotient(av.R, Bloc);
                        if (is_nilpotent(*q.R.L) && !is_nilpotent(*av.R.L))
                            fail("subnormal-frattini-nilpotent", item.tag);
                        if (item.soluble) {
                            if (is_member(q.R, *class_pU(), bud) &&
                                !is_member(av.R, *class_pU(), bud))
                                fail("subnormal-frattini-class", "pU");
                        }
                    }
                }
            }
            // all chief factors non-null => abelian
            if (item.soluble && R.dim() > 0) {
                ChiefSeries cs = p_chief_series(R, bud.elements);
                bool all_nonnull = true;
                for (const auto& f : cs.factors)
                    if (f.null_factor) all_nonnull = false;
                if (all_nonnull && !R.L->is_abelian()) fail("nonnull-forces-abelian", "");
                // null minimal [p]-ideal with all-non-null quotient factors
                // has a maximal [p]-subalgebra complement
                for (const Subspace& A : minimal_p_ideals(R, bud.elements)) {
                    bool anull = true;
                    for (const Vec& r : A.rows)
                        if (!vec_is_zero(evaluate_p(R, r))) anull = false;
                    if (!anull) continue;
                    auto q = p_quotient(R, A);
                    bool quotient_nonnull = true;
                    for (const auto& f : p_chief_series(q.R, bud.elements).factors)
                        if (f.null_factor) quotient_nonnull = false;
                    if (!quotient_nonnull) continue;
                    bool found = false;
                    for (const Subspace& M : maximal_p_subalgebras(R, bud.subspaces))
                        if (subspace_sum(F, M, A).dim() == R.dim() &&
                            subspace_intersect(F, M, A).dim() == 0)
                            found = true;
                    if (!found) fail("null-ideal-complemented", "");
                }
            }
            // non-abelian primitive ordinary quotient has [p]-closed kernel
            if (item.soluble) {
                for (const Subspace& K : ideal_lattice(*R.L, bud.elements)) {
                    Quotient q = quotient(*R.L, K);
                    if (q.algebra->is_abelian()) continue;
                    if (!ordinary_primitive(*q.algebra, bud.elements)) continue;
                    if (!p_closed_check(R, K, ClosureMode::Ideal))
                        fail("primitive-quotient-kernel-p-closed", subspace_str(K));
                }
                // quotients of soluble restrictable algebras are restrictable
                for (const Subspace& K : ideal_lattice(*R.L, bud.elements)) {
                    Quotient q = quotient(*R.L, K);
                    if (!is_restrictable(*q.algebra))
                        fail("quotients-restrictable", subspace_str(K));
                }
            }
            // abelian ideals can be made null
            for (const Subspace& A : ideal_lattice(*R.L, bud.elements)) {
                bool abelian = true;
                for (u32 i = 0; i < A.dim() && abelian; ++i)
                    for (u32 j = i + 1; j < A.dim(); ++j)
                        if (!vec_is_zero(R.L->bracket(A.rows[i], A.rows[j]))) abelian = false;
                if (!abelian) continue;
                RestrictedAlgebra R2 = null_on_ideal_pop(R, A);
                for (const Vec& r : A.rows)
                    if (!vec_is_zero(evaluate_p(R2, r))) fail("null-on-abelian-ideal", "");
            }
            // automorphisms 1 + ad(a) respect the operation when Z(L) = 0
            if (center(*R.L).dim() == 0) {
                for (const Subspace& A : ideal_lattice(*R.L, bud.elements)) {
                    bool abelian = true;
                    for (u32 i = 0; i < A.dim() && abelian; ++i)
                        for (u32 j = i + 1; j < A.dim(); ++j)
                            if (!vec_is_zero(R.L->bracket(A.rows[i], A.rows[j]))) abelian = false;
                    if (!abelian) continue;
                    u64 total = vec_count(F, A.dim());
                    for (u64 ai = 0; ai < total; ++ai) {
                        Vec coef = vec_from_index(F, A.dim(), ai);
                        Vec a(R.dim(), 0);
                        for (u32 k = 0; k < A.dim(); ++k)
                            if (coef[k] != 0) a = vec_add(F, a, vec_scale(F, coef[k], A.rows[k]));
                        Mat al = apply_alpha(*R.L, a);
                        u64 tot = vec_count(F, R.dim());
                        for (u64 xi = 0; xi < tot; ++xi) {
                            Vec x = vec_from_index(F, R.dim(), xi);
                            if (evaluate_p(R, mat_apply(F, al, x)) !=
                                mat_apply(F, al, evaluate_p(R, x))) {
                                fail("automorphism-respects-operation", "");
                                break;
                            }
                        }
                    }
                }
            }
        } catch (const std::exception& e) {
            fails.push_back({item.tag, "exception", e.what()});
        }
        res.checks += 14;
        return fails;
    });
    return res;
}

// --------------------------------------------------------------- projectors

std::vector<RClassPtr> projector_classes(u64 p) {
    auto F = field_make(p, 1);
    return {class_pN(), class_pA(), class_pU(), class_pC(),
            class_pEv(lambda_prime_field(F))};
}

SuiteResult suite_projectors(const Options& opt) {
    SuiteResult res;
    res.name = "projectors";
    const Budget& bud = opt.budget;
    // instance list: soluble sample + catalog
    std::vector<std::pair<std::string, RestrictedAlgebra>> inst;
    for (const auto& s : restricted_sample(opt))
        if (s.soluble) inst.emplace_back(s.tag, s.R);
    for (auto& c : catalog_sample()) inst.push_back(c);
    // anyop: membership constant across the operations of one algebra; group
    // sample items by algebra identity via the tag prefix
    for_each_indexed(static_cast<u32>(inst.size()), opt.parallel, res, [&](u32 idx) {
        std::vector<Failure> fails;
        const auto& [tag, R] = inst[idx];
        const Field& F = R.field();
        auto fail = [&](const std::string& law, const std::string& detail = "") {
            fails.push_back({tag, law, detail});
        };
        try {
            for (const RClassPtr& C : projector_classes(F.p())) {
                Subspace P = projector(R, *C, bud);
                auto brute = all_projectors(R, *C, bud);
                if (brute.empty()) fail(C->name + ":projector-exists", "brute-force empty");
                if (std::find(brute.begin(), brute.end(), P) == brute.end())
                    fail(C->name + ":recursion-matches-definition", subspace_str(P));
                if (!is_covering(R, P, *C, bud)) fail(C->name + ":projector-covers", "");
                // primitive description
                auto soc = is_primitive(R, bud.elements);
                if (soc && !is_member(R, *C, bud) &&
                    is_member(p_quotient(R, *soc).R, *C, bud)) {
                    std::vector<Subspace> pcomp;
                    for (const Subspace& M : all_complements(*R.L, *soc, bud.subspaces))
                        if (p_closed_check(R, M, ClosureMode::Subalgebra)) pcomp.push_back(M);
                    std::sort(pcomp.begin(), pcomp.end(), [](const Subspace& a, const Subspace& b) {
                        return subspace_cmp(a, b) < 0;
                    });
                    if (!(brute == pcomp))
                        fail(C->name + ":primitive-complement-description", "");
                }
                // conjugacy over abelian [p]-ideals with quotient in the class
                for (const Subspace& A : p_ideal_lattice(R, bud.elements)) {
                    bool abelian = true;
                    for (u32 i = 0; i < A.dim() && abelian; ++i)
                        for (u32 j = i + 1; j < A.dim(); ++j)
                            if (!vec_is_zero(R.L->bracket(A.rows[i], A.rows[j]))) abelian = false;
                    if (!abelian || !is_member(p_quotient(R, A).R, *C, bud)) continue;
                    size_t cap = brute.size() > 6 ? 6 : brute.size();
                    for (size_t u1 = 0; u1 < cap; ++u1)
                        for (size_t u2 = 0; u2 < cap; ++u2)
                            if (!conjugating_element(*R.L, A, brute[u1], brute[u2]))
                                fail(C->name + ":covering-conjugate",
                                     subspace_str(brute[u1]) + "/" + subspace_str(brute[u2]));
                }
                // projector through a quotient lifts to a projector
                for (const Subspace& K : p_ideal_lattice(R, bud.elements)) {
                    if (K.dim() == 0 || K.dim() == R.dim()) continue;
                    auto q = p_quotient(R, K);
                    Subspace vbar = projector(q.R, *C, bud);
                    std::vector<Vec> gens;
                    for (const Vec& r : vbar.rows) gens.push_back(mat_apply(F, q.sect, r));
                    for (const Vec& r : K.rows) gens.push_back(r);
                    Subspace V = subspace_span(F, R.dim(), gens);
                    RestrictedView vv = restricted_view(R, V);
                    Subspace u_loc = projector(vv.R, *C, bud);
                    std::vector<Vec> amb;
                    for (const Vec& r : u_loc.rows) amb.push_back(vv.view.to_ambient(F, r));
                    Subspace U = subspace_span(F, R.dim(), amb);
                    if (std::find(brute.begin(), brute.end(), U) == brute.end())
                        fail(C->name + ":lifted-projector", subspace_str(U));
                }
                // projectors complement minimal [p]-ideals under the
                // near-membership hypothesis; formation complements cover
                for (const Subspace& A : minimal_p_ideals(R, bud.elements)) {
                    bool qmember = is_member(p_quotient(R, A).R, *C, bud);
                    bool lmember = is_member(R, *C, bud);
                    if (!qmember || lmember) continue;
                    for (const Subspace& U : brute)
                        if (subspace_sum(F, U, A).dim() != R.dim() ||
                            subspace_intersect(F, U, A).dim() != 0)
                            fail(C->name + ":projector-complements-ideal", "");
                    if (C->formation) {
                        for (const Subspace& M : all_complements(*R.L, A, bud.subspaces)) {
                            if (!p_closed_check(R, M, ClosureMode::Subalgebra)) continue;
                            if (!is_covering(R, M, *C, bud))
                                fail(C->name + ":formation-complement-covers", "");
                        }
                    }
                }
            }
        } catch (const std::exception& e) {
            fails.push_back({tag, "exception", e.what()});
        }
        res.checks += 7;
        return fails;
    });
    // anyop at the algebra level
    {
        std::vector<const catalog::SmallAlgebra*> byalg;
        for (auto [p, maxd] : opt.sample_regimes) {
            static std::map<std::string, std::vector<catalog::SmallAlgebra>> cache2;
            std::string key = std::to_string(p) + "/" + std::to_string(maxd);
            if (!cache2.count(key)) cache2[key] = catalog::enumerate_small(p, maxd, bud);
            for (const auto& s : cache2[key])
                if (is_soluble(*s.algebra) && s.operations.size() > 1) byalg.push_back(&s);
        }
        for (const auto* s : byalg) {
            for (const RClassPtr& C : projector_classes(s->algebra->F->p())) {
                bool first = is_member(s->operations.front(), *C, bud);
                for (const auto& op : s->operations) {
                    ++res.checks;
                    if (is_member(op, *C, bud) != first) {
                        res.failures.push_back(
                            {"anyop", C->name + ":membership-operation-independent", ""});
                        break;
                    }
                }
            }
        }
    }
    // the formation hypothesis cannot be dropped: null algebras of dim <= 1
    // form a homomorph whose complements fail to cover on the 2-dim null
    // algebra
    {
        ++res.checks;
        auto F2 = field_make(2, 1);
        auto L = lie_make(F2, 2, {Vec{0, 0}});
        auto R = jacobson_construct(L, {Vec{0, 0}, Vec{0, 0}});
        auto null_small = [&](const RestrictedAlgebra& X) {
            if (X.dim() > 1) return false;
            for (const Vec& img : X.pop.images)
                if (!vec_is_zero(img)) return false;
            return X.L->is_abelian();
        };
        // H = complement of A = <e0>: is it covering? any [p]-ideal K of L
        // with L/K in the class must satisfy H + K = L; K = H itself fails.
        Subspace H = subspace_span(*F2, 2, {{0, 1}});
        bool counterexample_found = false;
        for (const Subspace& K : p_ideal_lattice(R, bud.elements)) {
            auto q = p_quotient(R, K);
            if (!null_small(q.R)) continue;
            if (subspace_sum(*F2, H, K).dim() != 2) counterexample_found = true;
        }
        if (!counterexample_found)
            res.failures.push_back({"null-homomorph", "formation-hypothesis-needed", ""});
    }
    return res;
}

// --------------------------------------------------------------- formations

SuiteResult suite_formations(const Options& opt) {
    SuiteResult res;
    res.name = "formations";
    const Budget& bud = opt.budget;
    const auto& sample = restricted_sample(opt);
    std::vector<u32> soluble_idx;
    for (u32 i = 0; i < sample.size(); ++i)
        if (sample[i].soluble) soluble_idx.push_back(i);
    // thinned subsample for the heavier invariants: at most three operations
    // per algebra
    std::vector<u32> thin_idx;
    {
        std::string last_alg;  // tag prefix up to " op="
        std::vector<u32> group;
        auto flush = [&]() {
            if (group.empty()) return;
            thin_idx.push_back(group.front());
            if (group.size() > 2) thin_idx.push_back(group[group.size() / 2]);
            if (group.size() > 1) thin_idx.push_back(group.back());
            group.clear();
        };
        for (u32 i : soluble_idx) {
            std::string alg = sample[i].tag.substr(0, sample[i].tag.find(" op="));
            if (alg != last_alg) {
                flush();
                last_alg = alg;
            }
            group.push_back(i);
        }
        flush();
    }
    auto class_set = [&](u64 p) {
        auto F = field_make(p, 1);
        return std::vector<RClassPtr>{residual_product(class_pN(), class_pA()),
                                      residual_product(class_pN(), class_pU()), class_pU(),
                                      class_pEv(lambda_prime_field(F))};
    };
    // closure checks, one algebra at a time so they parallelize
    for_each_indexed(static_cast<u32>(soluble_idx.size()), opt.parallel, res, [&](u32 k) {
        std::vector<Failure> fails;
        const SampleItem& item = sample[soluble_idx[k]];
        try {
            for (const auto& C : class_set(item.R.field().p())) {
                auto rep = closure_check(*C, {item.R}, bud);
                if (!rep.quot_ok) fails.push_back({item.tag, C->name + ":quotient-closed", ""});
                if (!rep.sdir_ok) fails.push_back({item.tag, C->name + ":subdirect-closed", ""});
                if (!rep.frat_ok) fails.push_back({item.tag, C->name + ":frattini-closed", ""});
            }
            // abelian residual = [p]-closure of the derived algebra
            const RestrictedAlgebra& R = item.R;
            Subspace want = p_closure(R, derived_subalgebra(*R.L), ClosureMode::Ideal);
            if (!(residual(R, *class_pA(), bud) == want))
                fails.push_back({item.tag, "abelian-residual-characterization", ""});
        } catch (const std::exception& e) {
            fails.push_back({item.tag, "exception", e.what()});
        }
        res.checks += 5;
        return fails;
    });
    // heavier invariants on the thinned subsample
    for_each_indexed(static_cast<u32>(thin_idx.size()), opt.parallel, res, [&](u32 k) {
        std::vector<Failure> fails;
        const SampleItem& item = sample[thin_idx[k]];
        const RestrictedAlgebra& R = item.R;
        const Field& F = R.field();
        auto fail = [&](const std::string& law, const std::string& detail = "") {
            fails.push_back({item.tag, law, detail});
        };
        try {
            std::vector<RClassPtr> satforms = {class_pN(), class_pU(), class_pC()};
            for (const auto& Fc : satforms) {
                bool member = is_member(R, *Fc, bud);
                ChiefSeries cs = p_chief_series(R, bud.elements);
                bool all_central = true;
                for (const auto& fct : cs.factors)
                    if (!classify_chief_factor(R, fct.upper, fct.lower, *Fc, bud).f_central)
                        all_central = false;
                if (member != all_central)
                    fail(Fc->name + ":member-iff-factors-central", "");
                // central extensions of members are members
                for (const Subspace& A : minimal_p_ideals(R, bud.elements)) {
                    if (centralizer(*R.L, A).dim() != R.dim()) continue;
                    if (is_member(p_quotient(R, A).R, *Fc, bud) && !member)
                        fail(Fc->name + ":central-extension-closed", "");
                }
                // split: split extensions of abelian [p]-ideals of members
                if (member) {
                    for (const Subspace& A : p_ideal_lattice(R, bud.elements)) {
                        bool abelian = true;
                        for (u32 a = 0; a < A.dim() && abelian; ++a)
                            for (u32 b = a + 1; b < A.dim(); ++b)
                                if (!vec_is_zero(R.L->bracket(A.rows[a], A.rows[b])))
                                    abelian = false;
                        if (!abelian || A.dim() == 0) continue;
                        auto q = p_quotient(R, A);
                        Representation mod = chief_factor_module(R, A, subspace_zero(R.dim()));
                        std::vector<Mat> act;
                        for (u32 t = 0; t < q.R.dim(); ++t) {
                            Vec lift(R.dim(), 0);
                            for (u32 r = 0; r < R.dim(); ++r) lift[r] = q.sect(r, t);
                            act.push_back(mod.act(F, lift));
                        }
                        Representation modq = rep_make(q.R.L, mod.dim_v, act);
                        RestrictedAlgebra X = restricted_split_extension(q.R, modq);
                        if (!is_member(X, *Fc, bud)) fail(Fc->name + ":split-closed", "");
                    }
                }
            }
            // res/ord identity
            for (auto K : {class_pN(), class_pC(), class_pU()}) {
                auto RO = res_class(ord_class(K));
                if (is_member(R, *RO, bud) != is_member(R, *K, bud))
                    fail("res-ord-identity", K->name);
            }
            // eigenvalue machinery inside pEv ∩ pC
            {
                LambdaSpace lam = lambda_prime_field(field_make(F.p(), 1));
                auto Ev = class_pEv(lam);
                auto meetC = class_meet(Ev, class_pC());
                if (is_member(R, *meetC, bud)) {
                    auto scanres = ad_eigenvalues_in_ext(R, lam, bud);
                    for (Fel lambda : scanres.roots_in_E) {
                        if (lambda == 0) continue;
                        RestrictedAlgebra P = build_P_lambda(lam, lambda);
                        if (!is_member(P, *meetC, bud))
                            fail("eigenvalue-algebra-in-meet", "");
                    }
                }
            }
        } catch (const std::exception& e) {
            fails.push_back({item.tag, "exception", e.what()});
        }
        res.checks += 4;
        return fails;
    });
    // direct sums of members stay members; small pairs from the thinned set
    {
        std::vector<std::pair<u32, u32>> pairs;
        for (size_t a = 0; a < thin_idx.size(); ++a)
            for (size_t b = a; b < thin_idx.size(); ++b) {
                const auto& A = sample[thin_idx[a]];
                const auto& B = sample[thin_idx[b]];
                if (!(A.R.field() == B.R.field())) continue;
                if (A.R.dim() + B.R.dim() > 4) continue;
                pairs.emplace_back(thin_idx[a], thin_idx[b]);
            }
        for_each_indexed(static_cast<u32>(pairs.size()), opt.parallel, res, [&](u32 k) {
            std::vector<Failure> fails;
            const auto& A = sample[pairs[k].first];
            const auto& B = sample[pairs[k].second];
            try {
                for (const auto& C : std::vector<RClassPtr>{class_pN(), class_pU(), class_pC()}) {
                    if (!is_member(A.R, *C, bud) || !is_member(B.R, *C, bud)) continue;
                    if (!is_member(restricted_direct_sum(A.R, B.R), *C, bud))
                        fails.push_back({A.tag + "+" + B.tag, C->name + ":direct-sum-closed", ""});
                }
            } catch (const std::exception& e) {
                fails.push_back({A.tag, "exception", e.what()});
            }
            res.checks += 1;
            return fails;
        });
    }
    // frozen residual value of the catalog algebra
    {
        ++res.checks;
        auto R = catalog::der_example(2);
        Subspace want = subspace_span(R.field(), 3, {{0, 1, 0}, {0, 0, 1}});
        if (!(residual(R, *class_pA(), bud) == want))
            res.failures.push_back({"der@2", "abelian-residual-frozen-value", ""});
    }
    return res;
}

// --------------------------------------------------------------- cohomology

SuiteResult suite_cohomology(const Options& opt) {
    SuiteResult res;
    res.name = "cohomology";
    const Budget& bud = opt.budget;
    std::vector<std::pair<std::string, RestrictedAlgebra>> inst;
    for (const auto& s : restricted_sample(opt))
        if (s.soluble) inst.emplace_back(s.tag, s.R);
    for (auto& c : catalog_sample()) inst.push_back(c);
    for_each_indexed(static_cast<u32>(inst.size()), opt.parallel, res, [&](u32 idx) {
        std::vector<Failure> fails;
        const auto& [tag, R] = inst[idx];
        const Field& F = R.field();
        auto fail = [&](const std::string& law, const std::string& detail = "") {
            fails.push_back({tag, law, detail});
        };
        try {
            // primitive instances: cohomology of the quotient on the socle
            // vanishes in low degrees, complements exist and are conjugate
            for (const Subspace& K : p_ideal_lattice(R, bud.elements)) {
                auto q = p_quotient(R, K);
                auto soc = is_primitive(q.R, bud.elements);
                if (!soc) continue;
                if (soc->dim() == q.R.dim()) continue;  // atom: trivial case
                auto q2 = p_quotient(q.R, *soc);
                Representation mod = chief_factor_module(q.R, *soc, subspace_zero(q.R.dim()));
                std::vector<Mat> act;
                for (u32 t = 0; t < q2.R.dim(); ++t) {
                    Vec lift(q.R.dim(), 0);
                    for (u32 r = 0; r < q.R.dim(); ++r) lift[r] = q2.sect(r, t);
                    act.push_back(mod.act(F, lift));
                }
                Representation modq = rep_make(q2.R.L, mod.dim_v, act);
                for (int n = 0; n <= 2; ++n)
                    if (cohomology_dim(modq, n, bud.subspaces) != 0)
                        fail("primitive-cohomology-vanishes", "n=" + std::to_string(n));
                auto M = complement_abelian_ideal(*q.R.L, *soc);
                if (!M) {
                    fail("primitive-socle-complemented", "");
                } else {
                    if (!p_closed_check(q.R, *M, ClosureMode::Subalgebra))
                        fail("primitive-complement-p-closed", "");
                    auto maxp = maximal_p_subalgebras(q.R, bud.subspaces);
                    if (std::find(maxp.begin(), maxp.end(), *M) == maxp.end())
                        fail("primitive-complement-maximal", "");
                }
                auto comps = all_complements(*q.R.L, *soc, bud.subspaces);
                size_t cap = comps.size() > 6 ? 6 : comps.size();
                for (size_t u1 = 0; u1 < cap; ++u1)
                    for (size_t u2 = 0; u2 < cap; ++u2)
                        if (!conjugating_element(*q.R.L, *soc, comps[u1], comps[u2]))
                            fail("primitive-complements-conjugate", "");
            }
            // covering situations: complements all cover and H^1 vanishes
            for (auto C : {class_pN(), class_pU(), class_pC()}) {
                if (is_member(R, *C, bud)) continue;
                for (const Subspace& A : minimal_p_ideals(R, bud.elements)) {
                    if (!is_member(p_quotient(R, A).R, *C, bud)) continue;
                    auto brute = all_projectors(R, *C, bud);
                    if (brute.empty()) continue;
                    for (const Subspace& M : all_complements(*R.L, A, bud.subspaces)) {
                        if (!p_closed_check(R, M, ClosureMode::Subalgebra)) continue;
                        if (!is_covering(R, M, *C, bud))
                            fail(C->name + ":all-complements-cover", "");
                    }
                    // H^1(L/A, A) = 0
                    auto q = p_quotient(R, A);
                    Representation mod = chief_factor_module(R, A, subspace_zero(R.dim()));
                    std::vector<Mat> act;
                    for (u32 t = 0; t < q.R.dim(); ++t) {
                        Vec lift(R.dim(), 0);
                        for (u32 r = 0; r < R.dim(); ++r) lift[r] = q.sect(r, t);
                        act.push_back(mod.act(F, lift));
                    }
                    Representation modq = rep_make(q.R.L, mod.dim_v, act);
                    if (cohomology_dim(modq, 1, bud.subspaces) != 0)
                        fail(C->name + ":first-cohomology-vanishes", "");
                }
            }
            // complement answer matches the subalgebra-lattice oracle
            for (const Subspace& A : ideal_lattice(*R.L, bud.elements)) {
                bool abelian = true;
                for (u32 i = 0; i < A.dim() && abelian; ++i)
                    for (u32 j = i + 1; j < A.dim(); ++j)
                        if (!vec_is_zero(R.L->bracket(A.rows[i], A.rows[j]))) abelian = false;
                if (!abelian) continue;
                auto M = complement_abelian_ideal(*R.L, A);
                auto oracle = all_complements(*R.L, A, bud.subspaces);
                if (M.has_value() != !oracle.empty()) fail("complement-oracle-agreement", "");
            }
            // Euler characteristic of the adjoint complex
            {
                Representation ad = rep_adjoint(R.L);
                int nmax = std::min<int>(bud.cohomology_nmax, static_cast<int>(R.dim()));
                CochainComplex C = cochain_complex(ad, nmax, bud.subspaces);
                int lhs = 0, rhs = 0, sign = 1;
                for (int n = 0; n <= nmax; ++n) {
                    lhs += sign * static_cast<int>(C.cochain_dims[static_cast<size_t>(n)]);
                    rhs += sign * static_cast<int>(cohomology_dim(C, n));
                    sign = -sign;
                }
                rhs += (nmax % 2 == 0 ? 1 : -1) *
                       static_cast<int>(rref(F, C.d[static_cast<size_t>(nmax)]).rank);
                if (lhs != rhs) fail("euler-characteristic", "");
            }
            // two-step vanishing pattern: ideal with vanishing low cohomology
            // forces vanishing for the whole algebra
            {
                Representation ad = rep_adjoint(R.L);
                for (const Subspace& A : ideal_lattice(*R.L, bud.elements)) {
                    if (A.dim() == 0 || A.dim() == R.dim()) continue;
                    auto av = subalgebra_view(*R.L, A);
                    Representation adA = rep_restrict(ad, av);
                    bool premise = true;
                    for (int n = 0; n <= 2 && premise; ++n)
                        if (cohomology_dim(adA, n, bud.subspaces) != 0) premise = false;
                    if (!premise) continue;
                    for (int n = 0; n <= 2; ++n)
                        if (cohomology_dim(ad, n, bud.subspaces) != 0)
                            fail("ideal-vanishing-propagates", "n=" + std::to_string(n));
                }
            }
        } catch (const std::exception& e) {
            fails.push_back({tag, "exception", e.what()});
        }
        res.checks += 6;
        return fails;
    });
    return res;
}

// ------------------------------------------------------------------ modules

SuiteResult suite_modules(const Options& opt) {
    SuiteResult res;
    res.name = "modules";
    const Budget& bud = opt.budget;
    std::vector<std::pair<std::string, RestrictedAlgebra>> inst = {
        {"der@2", catalog::der_example(2)},
        {"der@3", catalog::der_example(3)},
        {"nilder@2", catalog::nilder_example(2)},
        {"noform_X@2", catalog::noform_X(2)},
        {"P@2", catalog::example_P(2)},
        {"Qstar@2", catalog::example_Qstar(2)},
        {"atom_nonnull@2", catalog::atom_nonnull(2)},
        {"atom_nonnull@3", catalog::atom_nonnull(3)},
    };
    for_each_indexed(static_cast<u32>(inst.size()), opt.parallel, res, [&](u32 idx) {
        std::vector<Failure> fails;
        const auto& [tag, R] = inst[idx];
        const Field& F = R.field();
        auto fail = [&](const std::string& law, const std::string& detail = "") {
            fails.push_back({tag, law, detail});
        };
        try {
            // Zassenhaus uniformity: minimal ideal of L, ideal K: all
            // K-composition factors of the minimal ideal are isomorphic
            Representation ad = rep_adjoint(R.L);
            for (const Subspace& A : minimal_ideals(*R.L, bud.elements)) {
                for (const Subspace& K : ideal_lattice(*R.L, bud.elements)) {
                    if (K.dim() == 0) continue;
                    auto kv = subalgebra_view(*R.L, K);
                    Representation adK = rep_restrict(ad, kv);
                    // composition factors of A as a K-module
                    Representation Amod = rep_subquotient(adK, A, subspace_zero(R.dim()));
                    auto cs = composition_series(Amod, bud.elements);
                    for (size_t i = 0; i + 1 < cs.factors.size(); ++i)
                        if (!modules_isomorphic(cs.factors[i], cs.factors[i + 1], bud.elements))
                            fail("composition-factors-uniform", subspace_str(A));
                }
            }
            // modules under test: adjoint, trivial, chief factors
            std::vector<Representation> mods = {ad, rep_trivial(R.L, 1)};
            {
                ChiefSeries cs = p_chief_series(R, bud.elements);
                for (const auto& f : cs.factors)
                    mods.push_back(chief_factor_module(R, f.upper, f.lower));
            }
            // p-module filter
            std::vector<Representation> pmods;
            for (auto& m : mods)
                if (is_p_module(R, m)) pmods.push_back(m);
            // tensor/hom of hypercentral modules stay hypercentral
            for (auto Fc : {class_pN(), class_pU()}) {
                std::vector<Representation> hyper;
                for (const auto& m : pmods)
                    if (m.dim_v > 0 && is_hypercentral(R, m, *Fc, bud)) hyper.push_back(m);
                for (const auto& a : hyper)
                    for (const auto& b : hyper) {
                        if (a.dim_v * b.dim_v > 6 || a.dim_v * b.dim_v == 0) continue;
                        if (!is_hypercentral(R, rep_tensor(a, b), *Fc, bud))
                            fail(Fc->name + ":tensor-hypercentral", "");
                        if (!is_hypercentral(R, rep_hom(a, b), *Fc, bud))
                            fail(Fc->name + ":hom-hypercentral", "");
                    }
            }
            // decomposition under subnormal members
            for (auto Fc : {class_pN(), class_pU()}) {
                for (const Subspace& S : p_subalgebra_lattice(R, bud.subspaces)) {
                    if (S.dim() == 0) continue;
                    if (!is_p_subnormal(R, S)) continue;
                    RestrictedView sv = restricted_view(R, S);
                    if (!is_member(sv.R, *Fc, bud)) continue;
                    for (const auto& m : pmods) {
                        if (m.dim_v == 0 || m.dim_v > 6) continue;
                        auto dec = hypercentral_decomposition(R, S, m, *Fc, bud);
                        if (dec.central_part.dim() + dec.eccentric_part.dim() != m.dim_v)
                            fail(Fc->name + ":decomposition-direct", "");
                    }
                    // irreducible p-modules are hypercentral over S when the
                    // centre is null
                    bool center_null = true;
                    Subspace Z = center(*R.L);
                    for (const Vec& z : Z.rows)
                        if (!vec_is_zero(evaluate_p(R, z))) center_null = false;
                    if (center_null) {
                        for (const auto& m : pmods) {
                            if (m.dim_v == 0 || !is_irreducible(m, bud.elements)) continue;
                            auto dec = hypercentral_decomposition(R, S, m, *Fc, bud);
                            if (dec.central_part.dim() != m.dim_v)
                                fail(Fc->name + ":irreducible-hypercentral",
                                     "dim=" + std::to_string(m.dim_v));
                        }
                    }
                }
            }
        } catch (const std::exception& e) {
            fails.push_back({tag, "exception", e.what()});
        }
        res.checks += 4;
        return fails;
    });
    return res;
}

// ------------------------------------------------------------ intravariance

SuiteResult suite_intravariance(const Options& opt) {
    SuiteResult res;
    res.name = "intravariance";
    const Budget& bud = opt.budget;
    std::vector<std::pair<std::string, RestrictedAlgebra>> inst;
    for (const auto& s : restricted_sample(opt))
        if (s.soluble) inst.emplace_back(s.tag, s.R);
    for (u64 p : {2, 3}) {
        inst.emplace_back("der@" + std::to_string(p), catalog::der_example(p));
        inst.emplace_back("nilder@" + std::to_string(p), catalog::nilder_example(p));
    }
    inst.emplace_back("noform_X@2", catalog::noform_X(2));
    inst.emplace_back("P@2", catalog::example_P(2));
    for_each_indexed(static_cast<u32>(inst.size()), opt.parallel, res, [&](u32 idx) {
        std::vector<Failure> fails;
        const auto& [tag, R] = inst[idx];
        const Field& F = R.field();
        try {
            for (auto C : {class_pN(), class_pU()}) {
                for (const Subspace& K : p_ideal_lattice(R, bud.elements)) {
                    if (K.dim() == 0) continue;
                    RestrictedView kv = restricted_view(R, K);
                    if (!is_soluble(*kv.R.L)) continue;
                    for (const Subspace& Sloc : all_projectors(kv.R, *C, bud)) {
                        std::vector<Vec> amb;
                        for (const Vec& r : Sloc.rows) amb.push_back(kv.view.to_ambient(F, r));
                        Subspace S = subspace_span(F, R.dim(), amb);
                        Subspace N = normalizer(*R.L, S);
                        if (subspace_sum(F, K, N).dim() != R.dim())
                            fails.push_back({tag, C->name + ":normalizer-supplements", ""});
                    }
                }
            }
        } catch (const std::exception& e) {
            fails.push_back({tag, "exception", e.what()});
        }
        res.checks += 2;
        return fails;
    });
    return res;
}

// ---------------------------------------------------------------- envelopes

SuiteResult suite_envelopes(const Options& opt) {
    SuiteResult res;
    res.name = "envelopes";
    const Budget& bud = opt.budget;
    // ordinary sample: soluble algebras of the exhaustive regimes
    std::vector<std::pair<std::string, LiePtr>> inst;
    {
        static std::map<std::string, std::vector<catalog::SmallAlgebra>> cache2;
        static std::mutex mu2;
        for (auto [p, maxd] : opt.sample_regimes) {
            std::lock_guard<std::mutex> lock(mu2);
            std::string key = std::to_string(p) + "/" + std::to_string(maxd);
            if (!cache2.count(key)) cache2[key] = catalog::enumerate_small(p, maxd, bud);
            u32 k = 0;
            for (const auto& s : cache2[key]) {
                if (is_soluble(*s.algebra))
                    inst.emplace_back("p=" + std::to_string(p) + " #" + std::to_string(k),
                                      s.algebra);
                ++k;
            }
        }
    }
    inst.emplace_back("Q@2", catalog::example_Q(2));
    inst.emplace_back("Q@3", catalog::example_Q(3));
    inst.emplace_back("noform_L@2", catalog::noform_L(2));
    for_each_indexed(static_cast<u32>(inst.size()), opt.parallel, res, [&](u32 idx) {
        std::vector<Failure> fails;
        const auto& [tag, L] = inst[idx];
        try {
            Envelope env = minimal_p_envelope(L, bud);  // certificates inside
            // primitivity transfer, both directions
            auto soc_src = ordinary_primitive(*L, bud.elements);
            if (soc_src && !is_primitive(env.target, bud.elements))
                fails.push_back({tag, "envelope-of-primitive-is-primitive", ""});
            if (is_primitive(env.target, bud.elements) && !L->is_abelian() &&
                !ordinary_primitive(*L, bud.elements))
                fails.push_back({tag, "primitive-envelope-pulls-back", ""});
            // one-envelope-in-class-means-all: vary the operation centrally
            // and compare membership on closures that remain envelopes
            for (auto K : {class_pC(), class_pU()}) {
                bool min_in = is_member(env.target, *K, bud);
                for (const auto& op : enumerate_p_operations(env.target.L, bud.p_operations)) {
                    // the shifted operation keeps the closure property iff the
                    // closure of the source is everything
                    std::vector<Vec> gens;
                    for (u32 j = 0; j < L->dim; ++j) {
                        Vec col(env.target.dim(), 0);
                        for (u32 r = 0; r < env.target.dim(); ++r) col[r] = env.embedding(r, j);
                        gens.push_back(std::move(col));
                    }
                    Subspace cl = p_closure(op, subspace_span(op.field(), op.dim(), gens),
                                            ClosureMode::Subalgebra);
                    if (cl.dim() != op.dim()) continue;  // not an envelope anymore
                    if (is_member(op, *K, bud) != min_in) {
                        fails.push_back({tag, K->name + ":membership-envelope-independent", ""});
                        break;
                    }
                }
            }
        } catch (const std::exception& e) {
            fails.push_back({tag, "certificates", e.what()});
        }
        res.checks += 3;
        return fails;
    });
    // Q's envelope is Qstar
    for (u64 p : {2, 3}) {
        ++res.checks;
        for (const auto& r : catalog::check_facts("Qstar", p, bud))
            if (!r.pass)
                res.failures.push_back({"Qstar@" + std::to_string(p), r.fact, r.detail});
    }
    // envd(pC) is quotient-closed and saturated on the ordinary sample;
    // envd distributes over meet and join
    {
        auto member_envd = [&](LiePtr U, RClassPtr K) { return envd_membership(U, *K, bud); };
        auto KC = class_pC();
        auto KU = class_pU();
        for (const auto& [tag, L] : inst) {
            if (L->dim > 4) continue;  // keep the lattice walks small
            ++res.checks;
            bool in_c = member_envd(L, KC);
            try {
                for (const Subspace& K : ideal_lattice(*L, bud.elements)) {
                    Quotient q = quotient(*L, K);
                    if (in_c && !member_envd(q.algebra, KC))
                        res.failures.push_back({tag, "envd-quotient-closed", ""});
                }
                if (!in_c) {
                    Subspace phi = frattini(*L, bud.subspaces);
                    for (const Subspace& K : ideal_lattice(*L, bud.elements)) {
                        if (K.dim() == 0 || !subspace_leq(*L->F, K, phi)) continue;
                        Quotient q = quotient(*L, K);
                        if (member_envd(q.algebra, KC))
                            res.failures.push_back({tag, "envd-saturated", ""});
                    }
                    // subdirect closure (envd of a formation is a formation)
                    auto ideals = ideal_lattice(*L, bud.elements);
                    for (size_t i = 0; i < ideals.size(); ++i)
                        for (size_t j = i; j < ideals.size(); ++j) {
                            if (subspace_intersect(*L->F, ideals[i], ideals[j]).dim() != 0)
                                continue;
                            if (member_envd(quotient(*L, ideals[i]).algebra, KC) &&
                                member_envd(quotient(*L, ideals[j]).algebra, KC))
                                res.failures.push_back({tag, "envd-subdirect-closed", ""});
                        }
                }
                // lattice homomorphism: meet and join
                bool in_u = member_envd(L, KU);
                if (member_envd(L, class_meet(KC, KU)) != (in_c && in_u))
                    res.failures.push_back({tag, "envd-meet", ""});
                bool in_join = member_envd(L, class_join(KC, KU));
                // join membership: every ordinary primitive quotient has its
                // minimal envelope in KC or KU
                bool expect = true;
                for (const Subspace& K : ideal_lattice(*L, bud.elements)) {
                    Quotient q = quotient(*L, K);
                    if (!ordinary_primitive(*q.algebra, bud.elements)) continue;
                    if (!member_envd(q.algebra, KC) && !member_envd(q.algebra, KU)) expect = false;
                }
                if (in_join != expect)
                    res.failures.push_back({tag, "envd-join", ""});
            } catch (const std::exception& e) {
                res.failures.push_back({tag, "envd-exception", e.what()});
            }
        }
    }
    return res;
}

// ------------------------------------------------------------------- explus

SuiteResult suite_explus(const Options& opt) {
    SuiteResult res;
    res.name = "explus";
    const Budget& bud = opt.budget;
    auto fail = [&](const std::string& inst, const std::string& law,
                    const std::string& detail = "") {
        res.failures.push_back({inst, law, detail});
    };
    res.instances = 3;
    try {
        RestrictedAlgebra T = catalog::example_T(3);
        RestrictedAlgebra P = catalog::example_P(3);
        RestrictedAlgebra Qs = catalog::example_Qstar(3);
        auto F1 = class_ploc(class_nilpotent_class_le(2));
        auto F2 = class_ploc(class_metabelian_nilpotent_abelian());
        ++res.checks;
        if (!is_primitive(T, bud.elements)) fail("T@3", "primitive");
        ++res.checks;
        if (F1->direct(T, bud)) fail("T@3", "outside-ploc-nilpotent-class-2");
        ++res.checks;
        if (F2->direct(T, bud)) fail("T@3", "outside-ploc-metabelian");
        ++res.checks;
        if (!F1->direct(P, bud)) fail("P@3", "inside-ploc-nilpotent-class-2");
        ++res.checks;
        if (!F2->direct(Qs, bud)) fail("Qstar@3", "inside-ploc-metabelian");
    } catch (const std::exception& e) {
        fail("explus", "exception", e.what());
    }
    return res;
}

}  // namespace

SuiteResult run_suite(const std::string& name, const Options& opt) {
    auto t0 = Clock::now();
    SuiteResult res;
    if (name == "examples") res = suite_examples(opt);
    else if (name == "lemmas") res = suite_lemmas(opt);
    else if (name == "projectors") res = suite_projectors(opt);
    else if (name == "formations") res = suite_formations(opt);
    else if (name == "cohomology") res = suite_cohomology(opt);
    else if (name == "modules") res = suite_modules(opt);
    else if (name == "intravariance") res = suite_intravariance(opt);
    else if (name == "envelopes") res = suite_envelopes(opt);
    else if (name == "explus") res = suite_explus(opt);
    else throw std::invalid_argument("unknown suite '" + name + "'");
    res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return res;
}

std::vector<SuiteResult> run_all(const Options& opt) {
    std::vector<SuiteResult> out;
    for (const std::string& n : suite_names()) out.push_back(run_suite(n, opt));
    return out;
}

}  // namespace suites
}  // namespace plie
