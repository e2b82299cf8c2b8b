#include "exalg/catalog.hpp"
#include "exalg/hopf_twist.hpp"
#include "exalg/module_algebra.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace exalg;

namespace {

BijCocycle first_cocycle(const GroupPtr& g, FinAb a) {
    auto res = search_bijective_cocycles(g, a);
    REQUIRE_FALSE(res.found.empty());
    return res.found[0];
}

BijCocycle z2_identity_cocycle() {
    auto z2 = cyclic_group(2);
    for (const auto& c : search_bijective_cocycles(z2, FinAb({2})).found) return c;
    throw std::runtime_error("no Z2 cocycle");
}

}  // namespace

TEST_CASE("delta idempotents: idempotent, orthogonal, complete", "[hopf_twist]") {
    // A in {Z2, Z3, Z4, Z2xZ2, Z6-ish via S3 catalog} with |A| <= 16
    struct CaseDef {
        GroupPtr g;
        FinAb a;
    };
    std::vector<CaseDef> cases;
    cases.push_back({cyclic_group(2), FinAb({2})});
    cases.push_back({cyclic_group(4), FinAb({2, 2})});
    cases.push_back({symmetric_group(3), FinAb({6})});
    for (auto& cd : cases) {
        auto found = search_bijective_cocycles(cd.g, cd.a).found;
        if (found.empty()) continue;
        auto gg = build_gamma(found[0]);
        auto idem = delta_idempotents(gg);
        auto one = TensorElement::unit(gg.group(), 1, gg.cyclo_order);
        CHECK(idem.total == one);
        for (size_t a = 0; a < idem.ones.size(); ++a) {
            CHECK(idem.ones[a] * idem.ones[a] == idem.ones[a]);
            for (size_t b = a + 1; b < idem.ones.size(); ++b)
                CHECK((idem.ones[a] * idem.ones[b]).is_zero());
        }
    }
}

TEST_CASE("delta idempotents Z3 expansion via sum of roots", "[hopf_twist]") {
    // A = Z3: 1_0 = (1 + chi + chi^2)/3 etc., directly over Q(zeta_3)
    auto s3 = symmetric_group(3);
    auto c = first_cocycle(s3, FinAb({6}));
    auto gg = build_gamma(c);
    // e = 6 here; idempotents for a = 0: coefficients all 1/|A|
    auto t0 = delta_idempotent_in_gamma(gg, 0);
    for (const auto& [k, coeff] : t0.terms()) {
        CHECK(coeff == Cyclotomic(6, Rational(1, 6)));
    }
    CHECK(t0.term_count() == 6);
}

TEST_CASE("twist element shapes", "[hopf_twist]") {
    // trivial group: J = 1 x 1
    auto z1 = cyclic_group(1);
    auto r1 = search_bijective_cocycles(z1, FinAb({1}));
    auto gg1 = build_gamma(r1.found[0]);
    auto j1 = twist_element(gg1);
    CHECK(j1 == TensorElement::unit(gg1.group(), 2, gg1.cyclo_order));

    // G = A = Z2: 4 nonzero terms over Q
    auto gg2 = build_gamma(z2_identity_cocycle());
    auto j2 = twist_element(gg2);
    CHECK(j2.term_count() == 4);

    // S3/Z6: |G| * |A^vee| = 36 sparse terms
    auto s3 = symmetric_group(3);
    auto gg6 = build_gamma(first_cocycle(s3, FinAb({6})));
    CHECK(gg6.group()->order() == 36);
    auto j6 = twist_element(gg6);
    CHECK(j6.term_count() == 36);
}

TEST_CASE("verify_twist passes for catalog twists", "[hopf_twist]") {
    auto z1 = cyclic_group(1);
    auto gg1 = build_gamma(search_bijective_cocycles(z1, FinAb({1})).found[0]);
    auto rep1 = verify_twist(twist_element(gg1));
    CHECK(rep1.ok());

    auto gg2 = build_gamma(z2_identity_cocycle());
    auto rep2 = verify_twist(twist_element(gg2));
    CHECK(rep2.ok());

    auto z4 = cyclic_group(4);
    auto gg4 = build_gamma(first_cocycle(z4, FinAb({2, 2})));
    auto rep4 = verify_twist(twist_element(gg4));
    CHECK(rep4.ok());

    auto s3 = symmetric_group(3);
    auto gg6 = build_gamma(first_cocycle(s3, FinAb({6})));
    auto rep6 = verify_twist(twist_element(gg6));
    CHECK(rep6.ok());
}

TEST_CASE("leg-swapped twist remains a twist (group algebras are cocommutative)",
          "[hopf_twist]") {
    // flipping the legs of a twist on a group algebra gives another twist,
    // so the swap is not a usable negative control
    auto s3 = symmetric_group(3);
    auto gg = build_gamma(first_cocycle(s3, FinAb({6})));
    auto rep = verify_twist(twist_element(gg).swap_legs());
    CHECK(rep.invertible);
    CHECK(rep.cocycle_ok);
}

TEST_CASE("twist from a corrupted non-cocycle bijection fails axiom (ii)", "[hopf_twist]") {
    auto s3 = symmetric_group(3);
    auto c = first_cocycle(s3, FinAb({6}));
    auto gg = build_gamma(c);
    // swap two non-identity values of pi so it is no longer a 1-cocycle, then
    // rebuild J from the corrupted table; invertibility and counit survive,
    // the twist 2-cocycle equation must not
    bool negative_found = false;
    const auto& g = *c.mod.grp;
    for (size_t a = 0; a < g.order() && !negative_found; ++a) {
        if (static_cast<int>(a) == g.id()) continue;
        for (size_t b = a + 1; b < g.order() && !negative_found; ++b) {
            if (static_cast<int>(b) == g.id()) continue;
            BijCocycle bad = c;
            std::swap(bad.pi[a], bad.pi[b]);
            bool still_cocycle = true;
            try {
                bad.validate();
            } catch (const std::domain_error&) {
                still_cocycle = false;
            }
            if (still_cocycle) continue;
            GammaGroup gbad = gg;
            gbad.coc = bad;
            auto j = twist_element(gbad);
            auto rep = verify_twist(j);
            CHECK(rep.invertible);
            CHECK(rep.counit_ok);
            if (!rep.cocycle_ok) {
                CHECK(rep.cocycle_witness.has_value());
                negative_found = true;
            }
        }
    }
    CHECK(negative_found);
}

TEST_CASE("twisted coproduct: coassociative, noncocommutative for S3", "[hopf_twist]") {
    auto s3 = symmetric_group(3);
    auto gg = build_gamma(first_cocycle(s3, FinAb({6})));
    auto j = twist_element(gg);
    auto tc = twisted_coproduct(j);
    auto rep = check_coassociativity(tc);
    CHECK(rep.coassociative);
    CHECK_FALSE(rep.cocommutative);
    CHECK(rep.cocomm_witness.has_value());

    // trivial twist: Delta^J = Delta stays group-like
    auto z1 = cyclic_group(1);
    auto gg1 = build_gamma(search_bijective_cocycles(z1, FinAb({1})).found[0]);
    auto tc1 = twisted_coproduct(twist_element(gg1));
    auto rep1 = check_coassociativity(tc1);
    CHECK(rep1.coassociative);
    CHECK(rep1.cocommutative);

    // Z2 example coassociative
    auto gg2 = build_gamma(z2_identity_cocycle());
    auto tc2 = twisted_coproduct(twist_element(gg2));
    CHECK(check_coassociativity(tc2).coassociative);
}

TEST_CASE("relations match the twisted kernel J.Lambda^2", "[hopf_twist]") {
    // Z2 example, S = A
    auto gg2 = build_gamma(z2_identity_cocycle());
    auto x2 = build_symmetric_set(gg2.coc, {0, 1});
    REQUIRE(x2.ybe_certified);
    CHECK(relations_match_twisted_kernel(gg2, x2, twist_element(gg2)));

    // Z4 / Z2xZ2, S = A: |X| = 16
    auto z4 = cyclic_group(4);
    auto gg4 = build_gamma(first_cocycle(z4, FinAb({2, 2})));
    auto x4 = build_symmetric_set(gg4.coc, {0, 1, 2, 3});
    REQUIRE(x4.ybe_certified);
    CHECK(relations_match_twisted_kernel(gg4, x4, twist_element(gg4)));
}

TEST_CASE("module algebra check passes for Z4/Z2xZ2 to degree 3", "[hopf_twist]") {
    auto z4 = cyclic_group(4);
    auto gg = build_gamma(first_cocycle(z4, FinAb({2, 2})));
    auto x = build_symmetric_set(gg.coc, {0, 1, 2, 3});
    REQUIRE(x.ybe_certified);
    auto tc = twisted_coproduct(twist_element(gg));
    auto rep = module_algebra_check(gg, x, tc, 3);
    CHECK(rep.relations_stable);
    CHECK(rep.axiom_ok);
}

TEST_CASE("module algebra negative control: flip relations with twisted coproduct",
          "[hopf_twist]") {
    auto s3 = symmetric_group(3);
    auto gg = build_gamma(first_cocycle(s3, FinAb({6})));
    long gen = 1;
    auto x = build_symmetric_set(gg.coc, {gen});
    REQUIRE(x.ybe_certified);
    auto tc = twisted_coproduct(twist_element(gg));
    auto rep = module_algebra_check(gg, x, tc, 3, /*flip_relations=*/true);
    CHECK_FALSE(rep.ok());
    CHECK(rep.witness.has_value());
}

TEST_CASE("trivial twist on a permutation polynomial ring passes", "[hopf_twist]") {
    // classical: G permutes variables, trivial A, commutative relations
    auto z1 = cyclic_group(1);
    auto gg = build_gamma(search_bijective_cocycles(z1, FinAb({1})).found[0]);
    auto x = build_symmetric_set(gg.coc, {0, 0, 0});
    auto tc = twisted_coproduct(twist_element(gg));
    auto rep = module_algebra_check(gg, x, tc, 3);
    CHECK(rep.ok());
}
