#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "plie/restricted.hpp"

using namespace plie;

namespace {

const u64 BUD = 1 << 22;

LiePtr der_algebra(FieldPtr F) {
    std::vector<Vec> sc(3, Vec(3, 0));
    sc[LieAlgebra::pair_index(0, 1, 3)] = {0, F->one(), 0};
    return lie_make(F, 3, sc, {"a", "b", "c"});
}

// a^[p]=a, b^[p]=c, c^[p]=0
RestrictedAlgebra der_restricted(FieldPtr F) {
    auto L = der_algebra(F);
    return jacobson_construct(L, {{F->one(), 0, 0}, {0, 0, F->one()}, {0, 0, 0}});
}

LiePtr nilder_algebra(FieldPtr F) {
    std::vector<Vec> sc(6, Vec(4, 0));
    sc[LieAlgebra::pair_index(0, 1, 4)] = {0, 0, F->one(), 0};
    return lie_make(F, 4, sc, {"a", "b", "c", "d"});
}

// a^[p]=b^[p]=d^[p]=0, c^[p]=d
RestrictedAlgebra nilder_restricted(FieldPtr F) {
    auto N = nilder_algebra(F);
    return jacobson_construct(N, {Vec(4, 0), Vec(4, 0), {0, 0, 0, F->one()}, Vec(4, 0)});
}

}  // namespace

TEST_CASE("jacobson_construct") {
    SUBCASE("der example accepted at p=2,3,5") {
        for (u64 p : {2, 3, 5}) {
            auto R = der_restricted(field_make(p, 1));
            CHECK(R.dim() == 3);
        }
    }
    SUBCASE("nilder accepted") {
        for (u64 p : {2, 3}) {
            auto R = nilder_restricted(field_make(p, 1));
            CHECK(R.dim() == 4);
        }
    }
    SUBCASE("abelian <a,b> with images (0,a) accepted") {
        auto F = field_make(2, 1);
        auto L = lie_make(F, 2, {Vec{0, 0}}, {"a", "b"});
        auto R = jacobson_construct(L, {{0, 0}, {1, 0}});
        CHECK(R.pop.images[1] == Vec{1, 0});
    }
    SUBCASE("wrong image rejected with index") {
        auto F = field_make(2, 1);
        auto L = der_algebra(F);
        // a^[2] = b is wrong: ad(a)^2 = ad(a) != ad(b)
        CHECK_THROWS_WITH_AS(jacobson_construct(L, {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}),
                             doctest::Contains("e_0"), std::invalid_argument);
    }
}

TEST_CASE("evaluate_p") {
    SUBCASE("null algebra: everything to 0") {
        auto F = field_make(3, 1);
        auto L = lie_make(F, 2, {Vec{0, 0}});
        auto R = jacobson_construct(L, {Vec{0, 0}, Vec{0, 0}});
        for (u64 i = 0; i < 9; ++i)
            CHECK(vec_is_zero(evaluate_p(R, vec_from_index(*F, 2, i))));
    }
    SUBCASE("nilder: c -> d") {
        auto R = nilder_restricted(field_make(2, 1));
        CHECK(evaluate_p(R, {0, 0, 1, 0}) == Vec{0, 0, 0, 1});
    }
    SUBCASE("der: (a+b)^[p] = a+b+c, frozen by the correction-term oracle") {
        // hand Jacobson computation: ad(ta+b)^(p-1)(a) gives s-terms summing
        // to b at p=2 and p=3; so (a+b)^[p] = a + c + b
        for (u64 p : {2, 3}) {
            auto F = field_make(p, 1);
            auto R = der_restricted(F);
            Vec v = evaluate_p(R, {1, 1, 0});
            CHECK(v == Vec{1, 1, 1});
            // binding oracle: ad(v) = ad(a+b)^p
            Mat lhs = R.L->ad(v);
            Mat rhs = mat_pow(*F, R.L->ad({1, 1, 0}), p);
            CHECK(lhs == rhs);
        }
    }
    SUBCASE("semilinearity: (λx)^[p] = λ^p x^[p], exhaustive over GF(4)") {
        auto F = field_make(2, 2);
        auto L = der_algebra(F);
        auto R = jacobson_construct(L, {{F->one(), 0, 0}, {0, 0, F->one()}, {0, 0, 0}});
        for (u64 lam = 0; lam < 4; ++lam)
            for (u64 i = 0; i < 64; ++i) {
                Vec x = vec_from_index(*F, 3, i);
                Vec lx = vec_scale(*F, static_cast<Fel>(lam), x);
                CHECK(evaluate_p(R, lx) ==
                      vec_scale(*F, F->pow(static_cast<Fel>(lam), 2), evaluate_p(R, x)));
            }
    }
    SUBCASE("additive law with the correction term, exhaustive at p=3") {
        auto F = field_make(3, 1);
        auto R = der_restricted(F);
        for (u64 i = 0; i < 27; ++i)
            for (u64 j = 0; j < 27; ++j) {
                Vec x = vec_from_index(*F, 3, i), y = vec_from_index(*F, 3, j);
                Vec lhs = evaluate_p(R, vec_add(*F, x, y));
                Vec rhs = vec_add(*F, vec_add(*F, evaluate_p(R, x), evaluate_p(R, y)),
                                  jacobson_correction(*R.L, x, y));
                CHECK(lhs == rhs);
            }
    }
    SUBCASE("uniqueness: any operation agreeing on the basis is identical") {
        auto F = field_make(2, 1);
        auto R1 = der_restricted(F);
        auto R2 = jacobson_construct(der_algebra(F), R1.pop.images);
        for (u64 i = 0; i < 8; ++i) {
            Vec x = vec_from_index(*F, 3, i);
            CHECK(evaluate_p(R1, x) == evaluate_p(R2, x));
        }
    }
}

TEST_CASE("restrictability") {
    SUBCASE("der and nilder restrictable; basis test matches element scan") {
        for (u64 p : {2, 3}) {
            auto F = field_make(p, 1);
            CHECK(is_restrictable(*der_algebra(F)));
            CHECK(is_restrictable_by_scan(*der_algebra(F), BUD));
            CHECK(is_restrictable(*nilder_algebra(F)));
            CHECK(is_restrictable_by_scan(*nilder_algebra(F), BUD));
        }
    }
    SUBCASE("abelian GF(2)^2 has 16 p-operations") {
        auto F = field_make(2, 1);
        auto L = lie_make(F, 2, {Vec{0, 0}});
        auto ops = enumerate_p_operations(L, BUD);
        CHECK(ops.size() == 16);
        // all distinct as basis-image tuples
        for (size_t i = 0; i < ops.size(); ++i)
            for (size_t j = i + 1; j < ops.size(); ++j)
                CHECK(ops[i].pop.images != ops[j].pop.images);
    }
    SUBCASE("xy=y algebra has exactly one p-operation (trivial centre)") {
        auto F = field_make(3, 1);
        auto L = lie_make(F, 2, {Vec{0, 1}}, {"x", "y"});
        auto ops = enumerate_p_operations(L, BUD);
        CHECK(ops.size() == 1);
        CHECK(ops[0].pop.images[0] == Vec{1, 0});  // x^[p] = x
        CHECK(ops[0].pop.images[1] == Vec{0, 0});  // y^[p] = 0
    }
}

TEST_CASE("p-closures") {
    auto F = field_make(2, 1);
    auto R = der_restricted(F);
    const Field& f = *F;
    SUBCASE("span(b) is not p-closed; its ideal p-closure is <b,c>") {
        Subspace B = subspace_span(f, 3, {{0, 1, 0}});
        CHECK(!p_closed_check(R, B, ClosureMode::Ideal));
        CHECK(p_closure(R, B, ClosureMode::Ideal) ==
              subspace_span(f, 3, {{0, 1, 0}, {0, 0, 1}}));
    }
    SUBCASE("nilder: derived span(c) not p-closed") {
        auto N = nilder_restricted(F);
        Subspace C = derived_subalgebra(*N.L);
        CHECK(!p_closed_check(N, C, ClosureMode::Ideal));
    }
    SUBCASE("zero closure") {
        CHECK(p_closure(R, subspace_zero(3), ClosureMode::Subalgebra).dim() == 0);
    }
}

TEST_CASE("p-ideal machinery") {
    auto F = field_make(2, 1);
    auto R = der_restricted(F);
    const Field& f = *F;
    SUBCASE("p-ideal lattice of der: 0, <c>, <b,c>, L") {
        auto lat = p_ideal_lattice(R, BUD);
        CHECK(lat.size() == 4);
        CHECK(lat[0].dim() == 0);
        CHECK(lat[1] == subspace_span(f, 3, {{0, 0, 1}}));
        CHECK(lat[2] == subspace_span(f, 3, {{0, 1, 0}, {0, 0, 1}}));
        CHECK(lat[3].dim() == 3);
    }
    SUBCASE("minimal p-ideals agree with the lattice route") {
        auto mins = minimal_p_ideals(R, BUD);
        REQUIRE(mins.size() == 1);
        CHECK(mins[0] == subspace_span(f, 3, {{0, 0, 1}}));
    }
    SUBCASE("chief series of der: 0 < <c> < <b,c> < L with stated classification") {
        ChiefSeries cs = p_chief_series(R, BUD);
        REQUIRE(cs.terms.size() == 4);
        CHECK(cs.terms[0].dim() == 3);
        CHECK(cs.terms[1] == subspace_span(f, 3, {{0, 1, 0}, {0, 0, 1}}));
        CHECK(cs.terms[2] == subspace_span(f, 3, {{0, 0, 1}}));
        CHECK(cs.terms[3].dim() == 0);
        // top factor L/<b,c>: a^[p]=a, non-null atom
        CHECK(!cs.factors[0].null_factor);
        CHECK(cs.factors[0].atom_factor);
        // middle factor <b,c>/<c>: b^[p]=c: null
        CHECK(cs.factors[1].null_factor);
        // bottom <c>: null and central
        CHECK(cs.factors[2].null_factor);
        CHECK(cs.factors[2].central);
    }
    SUBCASE("abelian null algebra: every chief factor null") {
        auto L = lie_make(F, 2, {Vec{0, 0}});
        auto N = jacobson_construct(L, {Vec{0, 0}, Vec{0, 0}});
        for (const auto& fct : p_chief_series(N, BUD).factors) CHECK(fct.null_factor);
    }
    SUBCASE("1-dim with a^[p]=a: one non-null atom factor") {
        auto L = lie_make(F, 1, {});
        auto A = jacobson_construct(L, {Vec{1}});
        auto cs = p_chief_series(A, BUD);
        REQUIRE(cs.factors.size() == 1);
        CHECK(!cs.factors[0].null_factor);
        CHECK(cs.factors[0].atom_factor);
    }
}

TEST_CASE("p-frattini") {
    auto F = field_make(2, 1);
    const Field& f = *F;
    SUBCASE("1-dim null: psi = 0") {
        auto L = lie_make(F, 1, {});
        auto R = jacobson_construct(L, {Vec{0}});
        CHECK(p_frattini(R, BUD).dim() == 0);
    }
    SUBCASE("der: psi = <c> strictly contains phi = 0") {
        auto R = der_restricted(F);
        Subspace psi = p_frattini(R, BUD);
        Subspace phi = frattini(*R.L, BUD);
        CHECK(psi == subspace_span(f, 3, {{0, 0, 1}}));
        CHECK(phi.dim() == 0);
        CHECK(subspace_leq(f, phi, psi));
        CHECK(psi.dim() > phi.dim());
    }
    SUBCASE("nilder: psi strictly contains phi") {
        auto N = nilder_restricted(F);
        Subspace psi = p_frattini(N, BUD);
        Subspace phi = frattini(*N.L, BUD);
        CHECK(subspace_leq(f, phi, psi));
        CHECK(psi.dim() > phi.dim());
    }
}

TEST_CASE("primitivity") {
    auto F = field_make(2, 1);
    SUBCASE("non-null atom is primitive with socle = L") {
        auto L = lie_make(F, 1, {});
        auto A = jacobson_construct(L, {Vec{1}});
        auto soc = is_primitive(A, BUD);
        REQUIRE(soc.has_value());
        CHECK(soc->dim() == 1);
    }
    SUBCASE("nilder is not primitive") {
        auto N = nilder_restricted(F);
        CHECK(!is_primitive(N, BUD).has_value());
    }
    SUBCASE("der/<c> is primitive (socle <b>)") {
        auto R = der_restricted(F);
        auto q = p_quotient(R, subspace_span(*F, 3, {{0, 0, 1}}));
        auto soc = is_primitive(q.R, BUD);
        REQUIRE(soc.has_value());
        CHECK(soc->dim() == 1);
    }
}

TEST_CASE("null_on_ideal_pop") {
    auto F = field_make(2, 1);
    const Field& f = *F;
    SUBCASE("der with A=<b,c>: b,c images become 0") {
        auto R = der_restricted(F);
        Subspace A = subspace_span(f, 3, {{0, 1, 0}, {0, 0, 1}});
        auto R2 = null_on_ideal_pop(R, A);
        CHECK(vec_is_zero(evaluate_p(R2, {0, 1, 0})));
        CHECK(vec_is_zero(evaluate_p(R2, {0, 0, 1})));
        CHECK(evaluate_p(R2, {1, 0, 0}) == Vec{1, 0, 0});  // a keeps its image
    }
    SUBCASE("A = 0: unchanged") {
        auto R = der_restricted(F);
        auto R2 = null_on_ideal_pop(R, subspace_zero(3));
        CHECK(R2.pop.images == R.pop.images);
    }
    SUBCASE("A = L abelian: null operation") {
        auto L = lie_make(F, 2, {Vec{0, 0}});
        auto R = jacobson_construct(L, {{0, 1}, {0, 0}});
        auto R2 = null_on_ideal_pop(R, subspace_full(f, 2));
        CHECK(vec_is_zero(R2.pop.images[0]));
        CHECK(vec_is_zero(R2.pop.images[1]));
    }
    SUBCASE("non-abelian ideal rejected") {
        auto R = der_restricted(F);
        CHECK_THROWS_AS(null_on_ideal_pop(R, subspace_full(f, 3)), std::invalid_argument);
    }
}

TEST_CASE("p-subnormality") {
    auto F = field_make(2, 1);
    auto R = der_restricted(F);
    const Field& f = *F;
    SUBCASE("S = L: chain [L]") {
        auto chain = is_p_subnormal(R, subspace_full(f, 3));
        REQUIRE(chain.has_value());
        CHECK(chain->size() == 1);
    }
    SUBCASE("any p-ideal: chain [L, S]") {
        Subspace S = subspace_span(f, 3, {{0, 1, 0}, {0, 0, 1}});
        auto chain = is_p_subnormal(R, S);
        REQUIRE(chain.has_value());
        CHECK(chain->size() == 2);
    }
    SUBCASE("Cartan <a,c> is not subnormal") {
        Subspace S = subspace_span(f, 3, {{1, 0, 0}, {0, 0, 1}});
        CHECK(!is_p_subnormal(R, S).has_value());
    }
}

TEST_CASE("p-quotients and split extensions") {
    auto F = field_make(2, 1);
    const Field& f = *F;
    SUBCASE("der mod <b,c>: 1-dim with a^[p]=a") {
        auto R = der_restricted(F);
        auto q = p_quotient(R, subspace_span(f, 3, {{0, 1, 0}, {0, 0, 1}}));
        CHECK(q.R.dim() == 1);
        CHECK(q.R.pop.images[0] == Vec{1});
    }
    SUBCASE("restricted split extension with null module images") {
        // <x,y | xy=y> acting on V = <v0,v1>: x v1 = v1, y v0 = v1
        auto S = lie_make(F, 2, {Vec{0, 1}}, {"x", "y"});
        auto RS = jacobson_construct(S, {{1, 0}, {0, 0}});
        Mat X(2, 2), Y(2, 2);
        X(1, 1) = 1;
        Y(1, 0) = 1;
        Representation rho = rep_make(S, 2, {X, Y});
        CHECK(is_p_module(RS, rho));
        auto E = restricted_split_extension(RS, rho);
        CHECK(E.dim() == 4);
        // module part is an abelian ideal with null images
        Subspace V = subspace_span(f, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}});
        CHECK(is_ideal(*E.L, V));
        CHECK(vec_is_zero(evaluate_p(E, {1, 0, 0, 0})));
        CHECK(vec_is_zero(evaluate_p(E, {0, 1, 0, 0})));
        // algebra part keeps its operation
        CHECK(evaluate_p(E, {0, 0, 1, 0}) == Vec{0, 0, 1, 0});
    }
    SUBCASE("trivial module of the null algebra is a p-module") {
        auto L = lie_make(F, 1, {});
        auto R = jacobson_construct(L, {Vec{0}});
        CHECK(is_p_module(R, rep_trivial(L, 2)));
    }
    SUBCASE("module images must be invariant") {
        auto S = lie_make(F, 2, {Vec{0, 1}}, {"x", "y"});
        auto RS = jacobson_construct(S, {{1, 0}, {0, 0}});
        Mat X(2, 2), Y(2, 2);
        X(1, 1) = 1;
        Y(1, 0) = 1;
        Representation rho = rep_make(S, 2, {X, Y});
        // v0^[p] = v1 is invariant (x v1 = v1 != 0): must throw
        std::vector<Vec> imgs = {{0, 1}, {0, 0}};
        CHECK_THROWS_AS(restricted_split_extension(RS, rho, &imgs), std::invalid_argument);
    }
}

TEST_CASE("atoms") {
    auto F2 = field_make(2, 1);
    auto F4 = field_make(2, 2);
    SUBCASE("1-dim null and non-null are atoms") {
        auto L = lie_make(F2, 1, {});
        CHECK(is_atom(jacobson_construct(L, {Vec{0}}), BUD));
        CHECK(is_atom(jacobson_construct(L, {Vec{1}}), BUD));
    }
    SUBCASE("2-dim null over GF(2) is not an atom") {
        auto L = lie_make(F2, 2, {Vec{0, 0}});
        CHECK(!is_atom(jacobson_construct(L, {Vec{0, 0}, Vec{0, 0}}), BUD));
    }
    SUBCASE("GF(4)-line as GF(2)-algebra: b^[2]-orbit spans, an atom of dim 2") {
        // 2-dim over GF(2) with a^[2] = b, b^[2] = a+b: the p-power orbit of
        // any nonzero element spans both dimensions (Frobenius orbit of a
        // GF(4)-generator)
        auto L = lie_make(F2, 2, {Vec{0, 0}});
        auto R = jacobson_construct(L, {{0, 1}, {1, 1}});
        CHECK(is_atom(R, BUD));
        (void)F4;
    }
}

TEST_CASE("restricted views and direct sums") {
    auto F = field_make(2, 1);
    auto R = der_restricted(F);
    const Field& f = *F;
    SUBCASE("view of <b,c> is the abelian b^[p]=c algebra") {
        Subspace U = subspace_span(f, 3, {{0, 1, 0}, {0, 0, 1}});
        RestrictedView v = restricted_view(R, U);
        CHECK(v.R.dim() == 2);
        CHECK(v.R.L->is_abelian());
        CHECK(v.R.pop.images[0] == Vec{0, 1});
        CHECK(v.R.pop.images[1] == Vec{0, 0});
    }
    SUBCASE("direct sum keeps both operations") {
        auto L1 = lie_make(F, 1, {});
        auto A1 = jacobson_construct(L1, {Vec{1}});
        auto D = restricted_direct_sum(A1, R);
        CHECK(D.dim() == 4);
        CHECK(evaluate_p(D, {1, 0, 0, 0}) == Vec{1, 0, 0, 0});
        CHECK(evaluate_p(D, {0, 0, 1, 0}) == Vec{0, 0, 0, 1});  // b^[p]=c shifted
    }
    SUBCASE("chief factor algebra of <b,c>/<c> is the 1-dim null atom") {
        Subspace up = subspace_span(f, 3, {{0, 1, 0}, {0, 0, 1}});
        Subspace lo = subspace_span(f, 3, {{0, 0, 1}});
        auto fa = chief_factor_algebra(R, up, lo);
        CHECK(fa.dim() == 1);
        CHECK(vec_is_zero(fa.pop.images[0]));
    }
    SUBCASE("chief factor module carries the adjoint action") {
        Subspace up = subspace_span(f, 3, {{0, 1, 0}, {0, 0, 1}});
        Subspace lo = subspace_span(f, 3, {{0, 0, 1}});
        Representation m = chief_factor_module(R, up, lo);
        CHECK(m.dim_v == 1);
        // a acts as identity on b mod c ([a,b] = b)
        CHECK(m.action[0](0, 0) == f.one());
    }
}
