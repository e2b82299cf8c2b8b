#include "exalg/algebra_action.hpp"
#include "exalg/dstar.hpp"
#include "exalg/pi_bound.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace exalg;

TEST_CASE("fixed subalgebra examples", "[galois_pi]") {
    // Z_n x Z_n scaling on the torus: fixed = scalars
    for (int n : {2, 3}) {
        auto qt = quantum_torus(n);
        auto act = torus_scaling_action(qt);
        auto fixed = fixed_subalgebra(act);
        REQUIRE(fixed.size() == 1);
    }
    // binary tetrahedral conjugation on rational quaternions: fixed = Q.1
    auto act2t = tetrahedral_conjugation_action();
    auto fixed = fixed_subalgebra(act2t);
    REQUIRE(fixed.size() == 1);

    // x -> -x only on torus(2): fixed = span{1, y}
    auto qt2 = quantum_torus(2);
    auto actx = torus_x_sign_action(qt2);
    CHECK(fixed_subalgebra(actx).size() == 2);
}

TEST_CASE("canonical map: torus actions are Galois", "[galois_pi]") {
    std::mt19937_64 rng(0);
    for (int n : {2, 3}) {
        auto qt = quantum_torus(n);
        auto act = torus_scaling_action(qt);
        auto rep = canonical_map_check(act, rng);
        CHECK(rep.dim_over_fixed == static_cast<size_t>(n) * n);
        CHECK(rep.group_order == static_cast<size_t>(n) * n);
        CHECK(rep.square);
        CHECK(rep.bijective);
        CHECK(rep.method == "specialization");
    }
}

TEST_CASE("canonical map: trivial group", "[galois_pi]") {
    auto qt = quantum_torus(1);
    auto act = torus_scaling_action(qt);
    std::mt19937_64 rng(0);
    auto rep = canonical_map_check(act, rng);
    CHECK(rep.bijective);
    CHECK(rep.dim_over_fixed == 1);
    CHECK(rep.group_order == 1);
}

TEST_CASE("canonical map: binary tetrahedral action is not Galois", "[galois_pi]") {
    auto act = tetrahedral_conjugation_action();
    std::mt19937_64 rng(0);
    auto rep = canonical_map_check(act, rng);
    CHECK(rep.dim_over_fixed == 4);
    CHECK(rep.group_order == 24);
    CHECK_FALSE(rep.square);
    CHECK_FALSE(rep.bijective);
}

TEST_CASE("isotypic multiplicities", "[galois_pi]") {
    // torus scaling: regular representation, all multiplicities 1
    for (int n : {2, 3}) {
        auto qt = quantum_torus(n);
        auto act = torus_scaling_action(qt);
        auto rep = isotypic_multiplicities(act, qt.zeta);
        CHECK(rep.characters.size() == static_cast<size_t>(n) * n);
        for (size_t m : rep.mult_over_fixed) CHECK(m == 1);
        CHECK(rep.regular_representation);
    }
    // trivial group: single multiplicity 1 (dim D over D^G = 1)
    {
        auto qt = quantum_torus(2);
        AlgebraAction<QuantumTorus::K> act{qt.alg, cyclic_group(1), {}};
        act.mats.assign(1, Matrix<QuantumTorus::K>::identity(4, qt.alg.zero.one_like()));
        act.validate();
        auto rep = isotypic_multiplicities(act, qt.zeta);
        REQUIRE(rep.mult_over_fixed.size() == 1);
        CHECK(rep.mult_over_fixed[0] == 1);
    }
    // Z2 by x -> -x on torus(2): eigenspace dims 2 + 2 over the base field,
    // multiplicities over D^G both 1, dim_{D^G} D = 2 = |Z2|
    {
        auto qt = quantum_torus(2);
        auto act = torus_x_sign_action(qt);
        auto rep = isotypic_multiplicities(act, qt.zeta);
        REQUIRE(rep.dims_over_base.size() == 2);
        CHECK(rep.dims_over_base[0] == 2);
        CHECK(rep.dims_over_base[1] == 2);
        CHECK(rep.fixed_dim == 2);
        for (size_t m : rep.mult_over_fixed) CHECK(m == 1);
    }
}

TEST_CASE("d_star examples", "[galois_pi]") {
    // Mat_3(Q) -> 3
    auto m3 = matrix_algebra_with_unit(3, Rational(1));
    auto r3 = d_star_algebra(m3);
    REQUIRE(r3.exact);
    CHECK(r3.value == 3);

    // Q[t]/(t^2) -> 1
    {
        using K = Rational;
        FinDimAlgebra<K> alg(Rational(1));
        alg.basis = {"1", "t"};
        alg.unit = 0;
        K z;
        alg.sc.assign(2, std::vector<std::vector<K>>(2, std::vector<K>(2, z)));
        alg.sc[0][0] = {Rational(1), Rational(0)};
        alg.sc[0][1] = {Rational(0), Rational(1)};
        alg.sc[1][0] = {Rational(0), Rational(1)};
        alg.sc[1][1] = {Rational(0), Rational(0)};  // t^2 = 0
        auto r = d_star_algebra(alg);
        REQUIRE(r.exact);
        CHECK(r.value == 1);
    }

    // group algebra Q(zeta_3)[S3] -> 2, cross-validated against character degrees
    {
        auto s3 = symmetric_group(3);
        auto alg = FinDimAlgebra<Cyclotomic>::group_algebra(s3, Cyclotomic(3, Rational(1)));
        auto r = d_star_algebra(alg);
        REQUIRE(r.exact);
        CHECK(r.value == 2);
        CHECK(r.value == character_degrees(s3).back());
    }

    // direct sums take the max
    auto sum = direct_sum(matrix_algebra_with_unit(2, Rational(1)),
                          matrix_algebra_with_unit(4, Rational(1)));
    auto rs = d_star_algebra(sum);
    REQUIRE(rs.exact);
    CHECK(rs.value == 4);

    // Mat_n for n <= 4
    for (int n = 1; n <= 4; ++n) {
        auto r = d_star_algebra(matrix_algebra_with_unit(n, Rational(1)));
        REQUIRE(r.exact);
        CHECK(r.value == n);
    }
}

TEST_CASE("d_star named subalgebra examples", "[galois_pi]") {
    // diagonal matrices in Mat_3: d_* = 1
    auto m3 = matrix_algebra_with_unit(3, Rational(1));
    std::vector<std::vector<Rational>> diag;
    for (int i = 0; i < 3; ++i) {
        std::vector<Rational> v(9);
        v[i * 3 + i] = Rational(1);
        diag.push_back(v);
    }
    auto b = subalgebra_structure(m3.alg, diag, m3.unit_vector);
    auto r = d_star_algebra(b);
    REQUIRE(r.exact);
    CHECK(r.value == 1);

    // upper triangular in Mat_2: radical kills the strictly upper part, d_* = 1
    auto m2 = matrix_algebra_with_unit(2, Rational(1));
    std::vector<std::vector<Rational>> ut;
    for (auto [i, j] : std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {1, 1}}) {
        std::vector<Rational> v(4);
        v[i * 2 + j] = Rational(1);
        ut.push_back(v);
    }
    auto bu = subalgebra_structure(m2.alg, ut, m2.unit_vector);
    auto ru = d_star_algebra(bu);
    REQUIRE(ru.exact);
    CHECK(ru.value == 1);

    // B = A: equality
    auto ra = d_star_algebra(m2);
    std::vector<std::vector<Rational>> whole;
    for (size_t i = 0; i < 4; ++i) whole.push_back(m2.alg.basis_vec(i));
    auto rb = d_star_algebra(subalgebra_structure(m2.alg, whole, m2.unit_vector));
    CHECK(ra.value == rb.value);
}

TEST_CASE("monotonicity harness", "[galois_pi]") {
    auto rep = subalgebra_monotonicity_harness(60, 0);
    CHECK(rep.trials == 60);
    CHECK(rep.violations == 0);
}

TEST_CASE("pi bound for constructed Gamma groups", "[galois_pi]") {
    // Z4 / Z2xZ2
    auto z4 = cyclic_group(4);
    auto f4 = search_bijective_cocycles(z4, FinAb({2, 2})).found;
    REQUIRE_FALSE(f4.empty());
    auto gg4 = build_gamma(f4[0]);
    auto rep4 = pi_bound_check(gg4);
    CHECK(rep4.gamma_order == 16);
    CHECK(rep4.within_bound);
    CHECK(rep4.degrees_consistent);
    CHECK(rep4.bound == 16);
    CHECK(rep4.max_degree <= 4);

    // S3 / Z6
    auto s3 = symmetric_group(3);
    auto f6 = search_bijective_cocycles(s3, FinAb({6})).found;
    REQUIRE_FALSE(f6.empty());
    auto gg6 = build_gamma(f6[0]);
    auto rep6 = pi_bound_check(gg6);
    CHECK(rep6.gamma_order == 36);
    CHECK(rep6.bound == 36);
    CHECK(rep6.within_bound);
    CHECK(rep6.degrees_consistent);

    // trivial
    auto z1 = cyclic_group(1);
    auto f1 = search_bijective_cocycles(z1, FinAb({1})).found;
    auto rep1 = pi_bound_check(build_gamma(f1[0]));
    CHECK(rep1.max_degree == 1);
    CHECK(rep1.bound == 1);
    CHECK(rep1.within_bound);
}
