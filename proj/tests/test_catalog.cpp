#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "plie/catalog.hpp"

using namespace plie;

namespace {
Budget bud() { return Budget{}; }
}

TEST_CASE("every catalog fact passes at its default prime") {
    for (const auto& e : catalog::entries()) {
        auto results = catalog::check_facts(e.key, e.default_p, bud());
        for (const auto& r : results) {
            INFO(r.key, " p=", r.p, " ", r.fact, " ", r.detail);
            CHECK(r.pass);
        }
    }
}

TEST_CASE("der and nilder facts also hold at other primes") {
    for (u64 p : {3, 5}) {
        for (const char* key : {"der", "nilder"}) {
            auto results = catalog::check_facts(key, p, bud());
            for (const auto& r : results) {
                INFO(r.key, " p=", r.p, " ", r.fact, " ", r.detail);
                CHECK(r.pass);
            }
        }
    }
}

TEST_CASE("noform family at p = 2 and 3") {
    for (u64 p : {2, 3}) {
        CHECK(is_restrictable(*catalog::noform_X(p).L));
        CHECK(is_restrictable(*catalog::noform_Y(p).L));
        CHECK(!is_restrictable(*catalog::noform_L(p)));
    }
}

TEST_CASE("T facts at p = 2") {
    // keep p = 3 for the acceptance suite; p = 2 is the cheap smoke case
    for (const auto& r : catalog::check_facts("T", 2, bud())) {
        INFO(r.key, " p=", r.p, " ", r.fact, " ", r.detail);
        CHECK(r.pass);
    }
}

TEST_CASE("small enumeration, exhaustive regimes") {
    SUBCASE("dimension 1 over GF(2): exactly the two atoms") {
        auto all = catalog::enumerate_small(2, 1, bud());
        REQUIRE(all.size() == 1);  // one algebra class: the abelian line
        CHECK(all[0].restrictable);
        CHECK(all[0].operations.size() == 2);  // null and a^[p]=a
    }
    SUBCASE("dimension <= 2 over GF(2): abelian and xy=y, with operation counts") {
        auto all = catalog::enumerate_small(2, 2, bud());
        REQUIRE(all.size() == 3);  // line, plane, xy=y
        CHECK(all[1].algebra->is_abelian());
        CHECK(all[1].operations.size() == 16);  // |Z|^dim = 4^2
        CHECK(!all[2].algebra->is_abelian());
        CHECK(all[2].operations.size() == 1);
    }
    SUBCASE("dim <= 3 over GF(2): the scan finds one perfect exception") {
        auto all = catalog::enumerate_small(2, 3, bud());
        CHECK(all.size() >= 5);
        u32 insoluble = 0;
        for (const auto& s : all) {
            if (!is_soluble(*s.algebra)) {
                ++insoluble;
                // the perfect 3-dim algebra [a,b]=c, [a,c]=a, [b,c]=b: its
                // derived algebra is itself and it carries no p-operation
                CHECK(derived_subalgebra(*s.algebra).dim() == s.algebra->dim);
                CHECK(!s.restrictable);
            }
            if (s.restrictable) CHECK(!s.operations.empty());
        }
        CHECK(insoluble == 1);
    }
    SUBCASE("deterministic across runs") {
        auto a = catalog::enumerate_small(3, 2, bud());
        auto b = catalog::enumerate_small(3, 2, bud());
        REQUIRE(a.size() == b.size());
        for (size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].algebra->sc == b[i].algebra->sc);
            CHECK(a[i].operations.size() == b[i].operations.size());
        }
    }
    SUBCASE("sampled regime is reproducible") {
        auto a = catalog::enumerate_sampled(2, 4, 25, 0x5EED, bud());
        auto b = catalog::enumerate_sampled(2, 4, 25, 0x5EED, bud());
        REQUIRE(a.size() == b.size());
        for (size_t i = 0; i < a.size(); ++i) CHECK(a[i].algebra->sc == b[i].algebra->sc);
    }
}

TEST_CASE("unknown key rejected") {
    CHECK_THROWS_AS(catalog::build("nope", 2), std::invalid_argument);
}
