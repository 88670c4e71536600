#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "plie/poly.hpp"
#include "plie/scan.hpp"

using namespace plie;

TEST_CASE("field construction and arithmetic") {
    auto F2 = field_make(2, 1);
    CHECK(F2->size() == 2);
    CHECK(F2->modulus() == std::vector<u32>{0, 1});  // degree-1 convention: t

    auto F4 = field_make(2, 2);
    CHECK(F4->size() == 4);
    // the unique irreducible quadratic over GF(2): 1 + t + t^2
    CHECK(F4->modulus() == std::vector<u32>{1, 1, 1});

    auto F3 = field_make(3, 1);
    // inverse(2) = 2 since 2*2 = 4 = 1
    CHECK(F3->inv(2) == 2);

    CHECK_THROWS_AS(field_make(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(field_make(2, 0), std::invalid_argument);
}

TEST_CASE("field axioms, exhaustive for q <= 64") {
    for (auto [p, m] : std::vector<std::pair<u64, u32>>{{2, 1}, {2, 2}, {2, 3}, {2, 6},
                                                        {3, 1}, {3, 2}, {5, 1}, {7, 1}}) {
        auto Fp = field_make(p, m);
        const Field& F = *Fp;
        u64 q = F.size();
        REQUIRE(q <= 64);
        for (u64 a = 0; a < q; ++a) {
            Fel ae = static_cast<Fel>(a);
            CHECK(F.add(ae, F.neg(ae)) == 0);
            if (a != 0) CHECK(F.mul(ae, F.inv(ae)) == F.one());
            // coefficient round-trip
            CHECK(F.from_coeffs(F.coeffs(ae)) == ae);
            for (u64 b = 0; b < q; ++b) {
                Fel be = static_cast<Fel>(b);
                CHECK(F.add(ae, be) == F.add(be, ae));
                CHECK(F.mul(ae, be) == F.mul(be, ae));
                // Frobenius is a field automorphism
                CHECK(F.frobenius(F.add(ae, be)) == F.add(F.frobenius(ae), F.frobenius(be)));
                CHECK(F.frobenius(F.mul(ae, be)) == F.mul(F.frobenius(ae), F.frobenius(be)));
                for (u64 c = 0; c < q; ++c) {
                    Fel ce = static_cast<Fel>(c);
                    CHECK(F.mul(ae, F.add(be, ce)) == F.add(F.mul(ae, be), F.mul(ae, ce)));
                }
            }
        }
    }
}

TEST_CASE("element order is lexicographic on coefficient vectors") {
    auto F4 = field_make(2, 2);
    // indices 0..3 must decode to (0,0) (0,1) (1,0) (1,1)
    CHECK(F4->coeffs(0) == std::vector<u32>{0, 0});
    CHECK(F4->coeffs(1) == std::vector<u32>{0, 1});
    CHECK(F4->coeffs(2) == std::vector<u32>{1, 0});
    CHECK(F4->coeffs(3) == std::vector<u32>{1, 1});
}

TEST_CASE("rref basics") {
    auto F2 = field_make(2, 1);
    const Field& F = *F2;

    SUBCASE("zero matrix") {
        Mat Z(3, 3);
        auto R = rref(F, Z);
        CHECK(R.rank == 0);
        CHECK(R.space.dim() == 0);
    }
    SUBCASE("identity") {
        auto R = rref(F, mat_identity(F, 4));
        CHECK(R.rank == 4);
    }
    SUBCASE("dependent rows over GF(2)") {
        // {110, 011, 101}: third = sum of first two, rank 2
        Mat M = mat_from_rows({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}, 3);
        auto R = rref(F, M);
        CHECK(R.rank == 2);
        // hand row-reduction: basis {101, 011}
        CHECK(R.space.rows[0] == Vec{1, 0, 1});
        CHECK(R.space.rows[1] == Vec{0, 1, 1});
        // transform record: each original row recombines from the basis
        for (u32 i = 0; i < 3; ++i) {
            Vec back(3, 0);
            for (u32 k = 0; k < R.rank; ++k)
                back = vec_add(F, back, vec_scale(F, R.row_coords(i, k), R.space.rows[k]));
            Vec orig = {M(i, 0), M(i, 1), M(i, 2)};
            CHECK(back == orig);
        }
    }
    SUBCASE("rref is idempotent") {
        Mat M = mat_from_rows({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}, 3);
        auto R1 = rref(F, M);
        auto R2 = rref(F, mat_from_rows(R1.space.rows, 3));
        CHECK(R1.space == R2.space);
    }
}

TEST_CASE("solve, kernel, image") {
    auto F3 = field_make(3, 1);
    const Field& F = *F3;

    SUBCASE("A = 0, b = 0") {
        Mat A(2, 2);
        auto x = solve(F, A, {0, 0});
        REQUIRE(x.has_value());
        CHECK(*x == Vec{0, 0});
    }
    SUBCASE("A = I") {
        auto x = solve(F, mat_identity(F, 3), {2, 0, 1});
        REQUIRE(x.has_value());
        CHECK(*x == Vec{2, 0, 1});
    }
    SUBCASE("inconsistent") {
        Mat A(2, 2);  // zero matrix
        CHECK(!solve(F, A, {1, 0}).has_value());
    }
    SUBCASE("nilpotent Jordan block, size 2 over GF(3)") {
        Mat J(2, 2);
        J(0, 1) = 1;
        Subspace K = kernel(F, J);
        Subspace I = image(F, J);
        // direct enumeration oracle over the 9 vectors
        u32 kd = 0;
        for (u64 i = 0; i < 9; ++i) {
            Vec v = vec_from_index(F, 2, i);
            if (vec_is_zero(mat_apply(F, J, v))) ++kd;
        }
        CHECK(kd == 3);  // 3 vectors -> dim 1
        CHECK(K.dim() == 1);
        CHECK(I.dim() == 1);
        CHECK(K.dim() + I.dim() == 2);
    }
    SUBCASE("underdetermined system returns the least solution") {
        // x0 + x1 = 1 over GF(3): solutions (1,0),(0,1),(2,2); least is (0,1)
        Mat A(1, 2);
        A(0, 0) = 1;
        A(0, 1) = 1;
        auto x = solve(F, A, {1});
        REQUIRE(x.has_value());
        CHECK(*x == Vec{0, 1});
    }
    SUBCASE("rank-nullity on generated matrices") {
        for (u64 seed = 0; seed < 200; ++seed) {
            u64 s = seed * 2654435761u + 12345;
            Mat A(3, 4);
            for (auto& e : A.a) {
                s = s * 6364136223846793005ULL + 1442695040888963407ULL;
                e = static_cast<Fel>((s >> 33) % 3);
            }
            CHECK(kernel(F, A).dim() + rref(F, A).rank == 4);
        }
    }
}

TEST_CASE("subspace combine") {
    auto F2 = field_make(2, 1);
    const Field& F = *F2;
    SUBCASE("idempotence") {
        Subspace U = subspace_span(F, 3, {{1, 1, 0}, {0, 0, 1}});
        CHECK(subspace_sum(F, U, U) == U);
        CHECK(subspace_intersect(F, U, U) == U);
    }
    SUBCASE("complementary lines in GF(2)^2") {
        Subspace U = subspace_span(F, 2, {{1, 0}});
        Subspace V = subspace_span(F, 2, {{0, 1}});
        CHECK(subspace_sum(F, U, V).dim() == 2);
        CHECK(subspace_intersect(F, U, V).dim() == 0);
    }
    SUBCASE("two planes in GF(2)^3 meet in dimension >= 1") {
        auto all = scan::subspaces(F, 3, [](const Subspace& s) { return s.dim() == 2; },
                                   1 << 20, scan::Mode::Serial);
        CHECK(all.size() == 7);
        for (const auto& U : all)
            for (const auto& V : all) {
                Subspace W = subspace_intersect(F, U, V);
                u32 count = 0;  // oracle: count common vectors
                for (u64 i = 0; i < 8; ++i) {
                    Vec v = vec_from_index(F, 3, i);
                    if (subspace_contains(F, U, v) && subspace_contains(F, V, v)) ++count;
                }
                CHECK((u64(1) << W.dim()) == count);
                CHECK(W.dim() >= 1);
                CHECK(U.dim() + V.dim() == subspace_sum(F, U, V).dim() + W.dim());
            }
    }
    SUBCASE("modular law on all subspaces of GF(2)^4") {
        auto all = scan::subspaces(F, 4, [](const Subspace&) { return true; }, 1 << 20,
                                   scan::Mode::Serial);
        CHECK(all.size() == 67);
        for (const auto& A : all)
            for (const auto& B : all)
                for (const auto& C : all) {
                    if (!subspace_leq(F, A, C)) continue;
                    // A + (B ∩ C) = (A + B) ∩ C
                    Subspace lhs = subspace_sum(F, A, subspace_intersect(F, B, C));
                    Subspace rhs = subspace_intersect(F, subspace_sum(F, A, B), C);
                    CHECK(lhs == rhs);
                }
    }
}

TEST_CASE("char_poly and roots") {
    auto F3 = field_make(3, 1);
    const Field& F = *F3;
    SUBCASE("zero matrix -> t^n") {
        Poly f = char_poly(F, Mat(3, 3));
        CHECK(f.c == std::vector<Fel>{0, 0, 0, 1});
        auto r = roots_in(F, f);
        CHECK(r == std::vector<Fel>{0, 0, 0});
    }
    SUBCASE("diag(1,2) over GF(3)") {
        Mat D(2, 2);
        D(0, 0) = 1;
        D(1, 1) = 2;
        Poly f = char_poly(F, D);
        // (t-1)(t-2) = t^2 - 3t + 2 = t^2 + 2
        CHECK(f.c == std::vector<Fel>{2, 0, 1});
        auto r = roots_in(F, f);
        CHECK(r == std::vector<Fel>{1, 2});
    }
    SUBCASE("char_poly matches cofactor-expansion oracle") {
        auto F4 = field_make(2, 2);
        const Field& E = *F4;
        u64 s = 99;
        for (int trial = 0; trial < 50; ++trial) {
            Mat M(3, 3);
            for (auto& e : M.a) {
                s = s * 6364136223846793005ULL + 1442695040888963407ULL;
                e = static_cast<Fel>((s >> 30) % 4);
            }
            std::vector<std::vector<Poly>> P(3, std::vector<Poly>(3));
            for (u32 i = 0; i < 3; ++i)
                for (u32 j = 0; j < 3; ++j) {
                    P[i][j] = poly_from({E.neg(M(i, j))});
                    if (i == j) P[i][j] = poly_add(E, P[i][j], poly_t(E));
                }
            int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
            int sgn[6] = {1, -1, -1, 1, 1, -1};
            Poly det;
            for (int k = 0; k < 6; ++k) {
                Poly term = poly_const(E, E.one());
                for (u32 i = 0; i < 3; ++i) term = poly_mul(E, term, P[i][perms[k][i]]);
                if (sgn[k] < 0) term = poly_scale(E, E.neg(E.one()), term);
                det = poly_add(E, det, term);
            }
            CHECK(char_poly(E, M).c == det.c);
        }
    }
    SUBCASE("companion matrix of t^3 - c over GF(4), roots in GF(64)") {
        auto F4 = field_make(2, 2);
        const Field& E4 = *F4;
        // c must have no cube root in GF(4): cubes of GF(4)* are {1}; pick c = t (index 1)
        Fel c = 1;
        bool has_cuberoot = false;
        for (u64 x = 1; x < 4; ++x)
            if (E4.pow(static_cast<Fel>(x), 3) == c) has_cuberoot = true;
        REQUIRE(!has_cuberoot);
        Poly f = poly_from({E4.neg(c), 0, 0, E4.one()});  // t^3 - c
        Mat C = companion_matrix(E4, f);
        CHECK(char_poly(E4, C).c == f.c);
        CHECK(roots_in(E4, f).empty());
        auto F64 = field_make(2, 6);
        Embedding emb(F4, F64);
        auto rr = roots_in(*F64, f, emb);
        CHECK(rr.size() == 3);
        for (Fel r : rr) CHECK(F64->pow(r, 3) == emb(c));
    }
}

TEST_CASE("embedding is a field homomorphism") {
    auto F4 = field_make(2, 2);
    auto F64 = field_make(2, 6);
    Embedding emb(F4, F64);
    for (u64 a = 0; a < 4; ++a)
        for (u64 b = 0; b < 4; ++b) {
            Fel ae = static_cast<Fel>(a), be = static_cast<Fel>(b);
            CHECK(emb(F4->add(ae, be)) == F64->add(emb(ae), emb(be)));
            CHECK(emb(F4->mul(ae, be)) == F64->mul(emb(ae), emb(be)));
        }
    CHECK(emb(F4->one()) == F64->one());
}

TEST_CASE("parallel scan kernels match the serial reference") {
    auto F2 = field_make(2, 1);
    auto F3 = field_make(3, 1);
    auto pred = [&](const Subspace& s) { return s.dim() % 2 == 0; };
    for (u32 n : {3u, 4u, 5u, 6u}) {
        auto ser = scan::subspaces(*F2, n, pred, 10'000'000, scan::Mode::Serial);
        auto par = scan::subspaces(*F2, n, pred, 10'000'000, scan::Mode::Parallel);
        CHECK(ser == par);
    }
    auto vpred = [&](const Vec& v) { return v.front() != 0; };
    auto vs = scan::vectors(*F3, 5, vpred, 1 << 20, scan::Mode::Serial);
    auto vp = scan::vectors(*F3, 5, vpred, 1 << 20, scan::Mode::Parallel);
    CHECK(vs == vp);
    CHECK(vs.size() == 2 * 81);  // (q-1) * q^4 vectors with nonzero first coordinate
}

TEST_CASE("subspace scan is complete and canonically ordered") {
    auto F3 = field_make(3, 1);
    auto all = scan::subspaces(*F3, 3, [](const Subspace&) { return true; }, 1 << 20);
    // Gaussian binomials: 1 + 13 + 13 + 1 = 28
    CHECK(all.size() == 28);
    CHECK(scan::count_subspaces(*F3, 3) == 28);
    for (size_t i = 0; i + 1 < all.size(); ++i) CHECK(all[i].dim() <= all[i + 1].dim());
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = i + 1; j < all.size(); ++j) CHECK(!(all[i] == all[j]));
}

TEST_CASE("polynomial splitting detection without factorization") {
    auto F2 = field_make(2, 1);
    const Field& F = *F2;
    // t^2 + t + 1 splits in GF(4) (degree 2) but not in GF(2) or GF(8)
    Poly f = poly_from({1, 1, 1});
    CHECK(!poly_splits_in_ext(F, f, 1));
    CHECK(poly_splits_in_ext(F, f, 2));
    CHECK(!poly_splits_in_ext(F, f, 3));
    CHECK(poly_splits_in_ext(F, f, 4));
    Poly f2 = poly_mul(F, f, f);
    CHECK(!poly_splits_in_ext(F, f2, 1));
    CHECK(poly_splits_in_ext(F, f2, 2));
    Poly g = poly_mul(F, poly_t(F), f);
    CHECK(!poly_splits_in_ext(F, g, 1));
    CHECK(poly_splits_in_ext(F, g, 2));
}

TEST_CASE("min poly over subfield") {
    auto F4 = field_make(2, 2);
    auto F64 = field_make(2, 6);
    Embedding emb(F4, F64);
    for (u64 x = 0; x < 64; ++x) {
        Fel xe = static_cast<Fel>(x);
        Poly m = min_poly_over_subfield(emb, xe);
        CHECK((m.deg() == 1 || m.deg() == 3));
        // m(x) = 0 in GF(64)
        Fel acc = 0, xp = F64->one();
        for (int i = 0; i <= m.deg(); ++i) {
            acc = F64->add(acc, F64->mul(emb(m.c[static_cast<size_t>(i)]), xp));
            xp = F64->mul(xp, xe);
        }
        CHECK(acc == 0);
    }
}
