#include "exalg/grading.hpp"
#include "exalg/nonsplit.hpp"
#include "exalg/quantum_torus.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace exalg;

TEST_CASE("quaternion example is associative and unital", "[grading]") {
    auto ga = build_quaternion_example();
    CHECK(ga.alg.check_unit());
    CHECK_FALSE(ga.alg.associativity_witness().has_value());
}

TEST_CASE("quaternion example identities z^2 = c-2 and yz = -zy", "[grading]") {
    auto ga = build_quaternion_example();
    CHECK(quaternion_example_identities(ga));
    CHECK(quaternion_rewrites_homogeneous(ga));
}

TEST_CASE("verify_grading passes on the published table", "[grading]") {
    auto ga = build_quaternion_example();
    auto cert = verify_grading(ga, 4);
    CHECK(cert.ok);
    CHECK(cert.pairs.size() == 64);
    for (const auto& p : cert.pairs) CHECK(p[2] == 1);
    CHECK(cert.containment_certified);

    // stability under smaller bound
    auto cert2 = verify_grading(ga, 2);
    CHECK(cert2.ok);
}

TEST_CASE("exchanging the roles of i and j still grades (an automorphism)", "[grading]") {
    // deg(x)=j, deg(y)=i differs from the published table by the Q8
    // automorphism swapping i and j, so it remains a valid grading.
    auto ga = build_quaternion_example();
    const auto& q8 = ga.grp;
    int gi = q8.index_of_label("i"), gj = q8.index_of_label("j");
    auto gmul = [&](int a, int b) {
        return q8.from_perm[q8.group->mul(q8.to_perm[a], q8.to_perm[b])];
    };
    auto bidx = [](int k, int l) { return k + 4 * l; };
    for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 2; ++l) {
            int d = q8.index_of_label("1");
            for (int t = 0; t < k; ++t) d = gmul(d, gj);
            for (int t = 0; t < l; ++t) d = gmul(d, gi);
            ga.deg[bidx(k, l)] = d;
        }
    CHECK(verify_grading(ga, 4).ok);
}

TEST_CASE("inconsistent assignment is exposed by a violated pair", "[grading]") {
    // swapping only the degrees of xy and x3y (k <-> -k) keeps the degree map
    // surjective but breaks products such as x * y
    auto ga = build_quaternion_example();
    std::swap(ga.deg[5], ga.deg[7]);
    auto cert = verify_grading(ga, 4);
    CHECK_FALSE(cert.ok);
    bool some_pair_failed = false;
    for (const auto& p : cert.pairs)
        if (p[2] == 0) some_pair_failed = true;
    CHECK(some_pair_failed);
}

TEST_CASE("grading entirely by identity reports MissingDegree", "[grading]") {
    auto ga = build_quaternion_example();
    int one = ga.grp.index_of_label("1");
    for (auto& d : ga.deg) d = one;
    ga.scalar_degree = [one](const std::vector<int>&) { return one; };
    auto cert = verify_grading(ga, 4);
    CHECK_FALSE(cert.ok);
    CHECK(cert.failure == "MissingDegree");
    CHECK_FALSE(cert.degrees_missing.empty());
}

TEST_CASE("nonsplit search: paper equation has no bounded solutions", "[grading]") {
    auto res = nonsplit_search(6);
    CHECK(res.no_solution);
    CHECK_FALSE(res.witness.has_value());
}

TEST_CASE("nonsplit search: control equations find witnesses", "[grading]") {
    using P = MPoly<Rational>;
    P a = P::variable(2, 0, Rational(1));
    P b = P::variable(2, 1, Rational(1));
    // control 1: u = a^2 (z^2 = a^2 case): witness (1, 0, a)
    auto c1 = nonsplit_search(6, a * a, b);
    REQUIRE(c1.witness);
    CHECK((*c1.witness)[0] == P::constant(2, Rational(1)));
    CHECK((*c1.witness)[1].is_zero());
    CHECK((*c1.witness)[2] == a);
    // control 2: w = b^2: witness (0, 1, b)
    auto c2 = nonsplit_search(6, a * a - P::constant(2, Rational(4)), b * b);
    REQUIRE(c2.witness);
    CHECK((*c2.witness)[0].is_zero());
    CHECK((*c2.witness)[2] == b);
    // every witness actually solves u P^2 + w Q^2 = R^2
    for (auto* r : {&c1, &c2}) {
        auto [p, q, rr] = *r->witness;
        P u = (r == &c1) ? a * a : a * a - P::constant(2, Rational(4));
        P w = (r == &c1) ? b : b * b;
        CHECK(u * p * p + w * q * q == rr * rr);
    }
}

TEST_CASE("nonsplit search matches tiny brute-force enumeration", "[grading]") {
    // independent oracle at degree <= 1 with coefficients in {-1,0,1}: no
    // nonzero solution of (a^2-4)P^2 + bQ^2 = R^2 exists
    using P = MPoly<Rational>;
    P a = P::variable(2, 0, Rational(1));
    P b = P::variable(2, 1, Rational(1));
    P u = a * a - P::constant(2, Rational(4));
    auto make = [&](int c0, int c1, int c2) {
        return P::constant(2, Rational(c0)) + a * Rational(c1) + b * Rational(c2);
    };
    bool found = false;
    for (int p0 = -1; p0 <= 1 && !found; ++p0)
        for (int p1 = -1; p1 <= 1 && !found; ++p1)
            for (int p2 = -1; p2 <= 1 && !found; ++p2)
                for (int q0 = -1; q0 <= 1 && !found; ++q0)
                    for (int q1 = -1; q1 <= 1 && !found; ++q1)
                        for (int q2 = -1; q2 <= 1 && !found; ++q2)
                            for (int r0 = -1; r0 <= 1 && !found; ++r0)
                                for (int r1 = -1; r1 <= 1 && !found; ++r1)
                                    for (int r2 = -1; r2 <= 1 && !found; ++r2) {
                                        P pp = make(p0, p1, p2), qq = make(q0, q1, q2),
                                          rr = make(r0, r1, r2);
                                        if (pp.is_zero() && qq.is_zero() && rr.is_zero()) continue;
                                        if (u * pp * pp + b * qq * qq == rr * rr) found = true;
                                    }
    CHECK_FALSE(found);
    CHECK(nonsplit_search(1).no_solution);
}

TEST_CASE("quantum torus models", "[grading]") {
    auto t1 = quantum_torus(1);
    CHECK(t1.alg.dim() == 1);
    CHECK(t1.alg.check_unit());

    auto t2 = quantum_torus(2);
    CHECK(t2.alg.dim() == 4);
    CHECK(t2.alg.check_unit());
    CHECK_FALSE(t2.alg.associativity_witness().has_value());
    // yx = -xy
    auto x = t2.alg.basis_vec(t2.bidx(1, 0));
    auto y = t2.alg.basis_vec(t2.bidx(0, 1));
    auto yx = t2.alg.mul(y, x);
    auto xy = t2.alg.mul(x, y);
    for (auto& v : xy) v = -v;
    CHECK(yx == xy);
    CHECK(torus_center_basis(t2).size() == 1);
    CHECK(torus_central_monomials_expected(t2));

    auto t3 = quantum_torus(3);
    CHECK(t3.alg.dim() == 9);
    CHECK_FALSE(t3.alg.associativity_witness().has_value());
    CHECK(torus_center_basis(t3).size() == 1);
    CHECK(torus_central_monomials_expected(t3));
}
