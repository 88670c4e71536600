#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "plie/cohomology.hpp"

using namespace plie;

namespace {

const u64 BUD = 1 << 22;

LiePtr der_algebra(FieldPtr F) {
    std::vector<Vec> sc(3, Vec(3, 0));
    sc[LieAlgebra::pair_index(0, 1, 3)] = {0, F->one(), 0};
    return lie_make(F, 3, sc, {"a", "b", "c"});
}

LiePtr heisenberg(FieldPtr F) {
    std::vector<Vec> sc(3, Vec(3, 0));
    sc[LieAlgebra::pair_index(0, 1, 3)] = {0, 0, F->one()};
    return lie_make(F, 3, sc);
}

}  // namespace

TEST_CASE("cochain complex and dimensions") {
    auto F2 = field_make(2, 1);
    SUBCASE("trivial module: H^0 = dim V") {
        auto L = der_algebra(F2);
        Representation triv = rep_trivial(L, 2);
        CHECK(cohomology_dim(triv, 0, BUD) == 2);
    }
    SUBCASE("1-dim algebra acting as zero on F: H^1 = 1") {
        auto A = lie_make(F2, 1, {});
        Representation triv = rep_trivial(A, 1);
        CHECK(cohomology_dim(triv, 1, BUD) == 1);
    }
    SUBCASE("d compose d vanishes (certified at construction)") {
        auto L = heisenberg(field_make(3, 1));
        Representation ad = rep_adjoint(L);
        CHECK_NOTHROW(cochain_complex(ad, 3, BUD));
    }
    SUBCASE("Euler characteristic bookkeeping is exact") {
        auto F3 = field_make(3, 1);
        auto L = der_algebra(F3);
        Representation ad = rep_adjoint(L);
        CochainComplex C = cochain_complex(ad, 3, BUD);
        const Field& f = *F3;
        int lhs = 0, rhs = 0, sign = 1;
        for (int n = 0; n <= 3; ++n) {
            lhs += sign * static_cast<int>(C.cochain_dims[static_cast<size_t>(n)]);
            rhs += sign * static_cast<int>(cohomology_dim(C, n));
            sign = -sign;
        }
        // truncation correction: (-1)^N rank d^N
        rhs += sign * -1 * static_cast<int>(rref(f, C.d[3]).rank) * -1;  // sign = (-1)^4 here
        // recompute cleanly: sum_{n<=3} (-1)^n dim C^n = sum (-1)^n dim H^n + (-1)^3 rank d^3
        int lhs2 = 0, rhs2 = 0;
        sign = 1;
        for (int n = 0; n <= 3; ++n) {
            lhs2 += sign * static_cast<int>(C.cochain_dims[static_cast<size_t>(n)]);
            rhs2 += sign * static_cast<int>(cohomology_dim(C, n));
            sign = -sign;
        }
        rhs2 += (-1) * static_cast<int>(rref(f, C.d[3]).rank);
        CHECK(lhs2 == rhs2);
    }
}

TEST_CASE("complements of abelian ideals") {
    auto F2 = field_make(2, 1);
    const Field& f = *F2;
    SUBCASE("split extension recovers a complement") {
        // der = split extension of <b> by <a,c>: A = <b>
        auto L = der_algebra(F2);
        Subspace A = subspace_span(f, 3, {{0, 1, 0}});
        auto M = complement_abelian_ideal(*L, A);
        REQUIRE(M.has_value());
        CHECK(M->dim() == 2);
        CHECK(subspace_intersect(f, *M, A).dim() == 0);
        CHECK(is_subalgebra(*L, *M));
    }
    SUBCASE("Heisenberg center has no complement (nonsplit class)") {
        auto H = heisenberg(F2);
        Subspace A = subspace_span(f, 3, {{0, 0, 1}});
        CHECK(!complement_abelian_ideal(*H, A).has_value());
        // cross-check: no subalgebra complements A
        CHECK(all_complements(*H, A, BUD).empty());
    }
    SUBCASE("matches the lattice oracle on the der example") {
        auto L = der_algebra(F2);
        Subspace A = subspace_span(f, 3, {{0, 1, 0}});
        auto M = complement_abelian_ideal(*L, A);
        auto all = all_complements(*L, A, BUD);
        REQUIRE(M.has_value());
        CHECK(std::find(all.begin(), all.end(), *M) != all.end());
    }
    SUBCASE("abelian L with A = L: complement 0; A = 0: complement L") {
        auto L = lie_make(F2, 2, {Vec{0, 0}});
        CHECK(complement_abelian_ideal(*L, subspace_full(f, 2))->dim() == 0);
        CHECK(complement_abelian_ideal(*L, subspace_zero(2))->dim() == 2);
    }
    SUBCASE("non-abelian ideal rejected") {
        auto L = der_algebra(F2);
        CHECK_THROWS_AS(complement_abelian_ideal(*L, subspace_full(f, 3)),
                        std::invalid_argument);
    }
}

TEST_CASE("vector complement exists but no [p]-complement (nocomp example)") {
    // <a,b | ab=0>, a^[p]=0, b^[p]=a, A=<a>
    auto F2 = field_make(2, 1);
    const Field& f = *F2;
    auto L = lie_make(F2, 2, {Vec{0, 0}}, {"a", "b"});
    auto R = jacobson_construct(L, {{0, 0}, {1, 0}});
    Subspace A = subspace_span(f, 2, {{1, 0}});
    CHECK(p_closed_check(R, A, ClosureMode::Ideal));
    auto M = complement_abelian_ideal(*L, A);
    CHECK(M.has_value());
    // but no complement is [p]-closed
    for (const Subspace& C : all_complements(*L, A, BUD))
        CHECK(!p_closed_check(R, C, ClosureMode::Subalgebra));
}

TEST_CASE("H^n(L/soc, soc) = 0 on a primitive instance") {
    auto F2 = field_make(2, 1);
    const Field& f = *F2;
    // der / <c> is primitive with socle <b>
    auto L = der_algebra(F2);
    auto R = jacobson_construct(L, {{1, 0, 0}, {0, 0, 1}, {0, 0, 0}});
    auto q = p_quotient(R, subspace_span(f, 3, {{0, 0, 1}}));
    auto soc = is_primitive(q.R, BUD);
    REQUIRE(soc.has_value());
    // quotient by the socle and the socle as its module
    auto q2 = p_quotient(q.R, *soc);
    Representation mod = chief_factor_module(q.R, *soc, subspace_zero(q.R.dim()));
    std::vector<Mat> act;
    for (u32 i = 0; i < q2.R.dim(); ++i) {
        Vec lift(q.R.dim(), 0);
        for (u32 r = 0; r < q.R.dim(); ++r) lift[r] = q2.sect(r, i);
        act.push_back(mod.act(f, lift));
    }
    Representation modq = rep_make(q2.R.L, mod.dim_v, act);
    for (int n = 0; n <= 2; ++n) CHECK(cohomology_dim(modq, n, BUD) == 0);
}

TEST_CASE("conjugating elements") {
    auto F2 = field_make(2, 1);
    const Field& f = *F2;
    SUBCASE("U1 = U2 gives a = 0") {
        auto L = der_algebra(F2);
        Subspace A = subspace_span(f, 3, {{0, 1, 0}});
        Subspace U = subspace_span(f, 3, {{1, 0, 0}, {0, 0, 1}});
        auto a = conjugating_element(*L, A, U, U);
        REQUIRE(a.has_value());
        CHECK(vec_is_zero(*a));
    }
    SUBCASE("two complements of the socle are conjugate") {
        auto L = der_algebra(F2);
        Subspace A = subspace_span(f, 3, {{0, 1, 0}});
        auto comps = all_complements(*L, A, BUD);
        REQUIRE(comps.size() >= 2);
        for (const auto& U1 : comps)
            for (const auto& U2 : comps) {
                auto a = conjugating_element(*L, A, U1, U2);
                REQUIRE(a.has_value());
                CHECK(subspace_contains(f, A, *a));
            }
    }
    SUBCASE("alpha is an automorphism and commutes with the p-operation when Z = 0") {
        // <x,y | xy=y> has trivial centre
        auto F3 = field_make(3, 1);
        auto S = lie_make(F3, 2, {Vec{0, 1}});
        auto R = jacobson_construct(S, {{1, 0}, {0, 0}});
        CHECK(center(*S).dim() == 0);
        for (u64 i = 0; i < 9; ++i) {
            Vec a = vec_from_index(*F3, 2, i);
            Mat al = apply_alpha(*S, a);  // throws if not an automorphism
            for (u64 j = 0; j < 9; ++j) {
                Vec x = vec_from_index(*F3, 2, j);
                Vec lhs = evaluate_p(R, mat_apply(*F3, al, x));
                Vec rhs = mat_apply(*F3, al, evaluate_p(R, x));
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("complement absence matches a nonzero obstruction class") {
    // Heisenberg: A = centre; L/A abelian 2-dim null action; the extension
    // class is nonzero although H^2(L/A, A) itself is nonzero-dimensional;
    // the computed complement answer must agree with the lattice oracle on
    // every abelian ideal of the catalog-sized algebras here.
    auto F2 = field_make(2, 1);
    const Field& f = *F2;
    for (auto mk : {der_algebra, heisenberg}) {
        auto L = mk(F2);
        for (const Subspace& A : ideal_lattice(*L, BUD)) {
            bool abelian = true;
            for (u32 i = 0; i < A.dim() && abelian; ++i)
                for (u32 j = i + 1; j < A.dim(); ++j)
                    if (!vec_is_zero(L->bracket(A.rows[i], A.rows[j]))) abelian = false;
            if (!abelian) continue;
            auto M = complement_abelian_ideal(*L, A);
            auto oracle = all_complements(*L, A, BUD);
            CHECK(M.has_value() == !oracle.empty());
            if (M) CHECK(std::find(oracle.begin(), oracle.end(), *M) != oracle.end());
        }
    }
    (void)f;
}
