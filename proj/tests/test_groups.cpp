#include "exalg/catalog.hpp"
#include "exalg/char_degrees.hpp"
#include "exalg/perm_group.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace exalg;

namespace {

// Independent oracle: enumerate ALL subgroups by growing generating sets one
// element at a time, then filter normal+abelian. Feasible for |G| <= 24.
std::vector<std::vector<int>> all_subgroups_oracle(const GroupPtr& g) {
    std::set<std::vector<int>> found;
    std::vector<int> trivial = {g->id()};
    found.insert(trivial);
    std::vector<std::vector<int>> frontier = {trivial};
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& h : frontier) {
            for (size_t x = 0; x < g->order(); ++x) {
                if (std::binary_search(h.begin(), h.end(), static_cast<int>(x))) continue;
                std::vector<int> seed = h;
                seed.push_back(static_cast<int>(x));
                auto closed = g->subgroup_closure(seed);
                if (found.insert(closed).second) next.push_back(closed);
            }
        }
        frontier = std::move(next);
    }
    return {found.begin(), found.end()};
}

std::vector<std::vector<int>> normal_abelian_oracle(const GroupPtr& g) {
    std::vector<std::vector<int>> result;
    for (const auto& h : all_subgroups_oracle(g)) {
        bool normal = true, abelian = true;
        for (size_t x = 0; x < g->order() && normal; ++x)
            for (int a : h)
                if (!std::binary_search(h.begin(), h.end(), g->conj(static_cast<int>(x), a))) {
                    normal = false;
                    break;
                }
        for (int a : h)
            for (int b : h)
                if (g->mul(a, b) != g->mul(b, a)) abelian = false;
        if (normal && abelian) result.push_back(h);
    }
    std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return result;
}

}  // namespace

TEST_CASE("close_generators examples", "[groups]") {
    auto s3 = PermGroup::close(3, {parse_cycles("(0 1)", 3), parse_cycles("(0 1 2)", 3)});
    CHECK(s3->order() == 6);
    auto t = PermGroup::close(1, {});
    CHECK(t->order() == 1);
    auto q8 = quaternion_group();
    CHECK(q8->order() == 8);
    CHECK(q8->degree() == 8);
    CHECK_THROWS_AS(PermGroup::close(8, quaternion_group()->generators(), "", 4),
                    OrderBoundExceeded);
}

TEST_CASE("labeled quaternion group relations", "[groups]") {
    const auto& q8 = quaternion_group_labeled();
    int i = q8.index_of_label("i"), j = q8.index_of_label("j"), k = q8.index_of_label("k");
    int m1 = q8.index_of_label("-1");
    auto mul = [&](int a, int b) {
        return q8.from_perm[q8.group->mul(q8.to_perm[a], q8.to_perm[b])];
    };
    CHECK(mul(i, i) == m1);
    CHECK(mul(j, j) == m1);
    CHECK(mul(i, j) == k);
    CHECK(mul(j, i) == q8.index_of_label("-k"));
}

TEST_CASE("normal abelian subgroups against brute-force oracle", "[groups]") {
    std::vector<GroupPtr> catalog;
    for (int n = 2; n <= 12; ++n) catalog.push_back(cyclic_group(n));
    catalog.push_back(builtin_group("Z2xZ2"));
    catalog.push_back(dihedral_group(4));
    catalog.push_back(quaternion_group());
    catalog.push_back(alternating_group_4());
    catalog.push_back(symmetric_group(4));
    catalog.push_back(builtin_group("S3xZ2"));
    for (const auto& g : catalog) {
        CAPTURE(g->name());
        auto got = normal_abelian_subgroups(g);
        auto expect = normal_abelian_oracle(g);
        REQUIRE(got.size() == expect.size());
        for (size_t i = 0; i < got.size(); ++i) CHECK(got[i].members == expect[i]);
    }
}

TEST_CASE("normal abelian subgroups named examples", "[groups]") {
    auto s4 = symmetric_group(4);
    auto subs = normal_abelian_subgroups(s4);
    REQUIRE(subs.size() == 2);
    CHECK(subs[0].order() == 1);
    CHECK(subs[1].order() == 4);  // V4

    auto q8 = quaternion_group();
    auto qs = normal_abelian_subgroups(q8);
    std::multiset<size_t> orders;
    for (const auto& s : qs) orders.insert(s.order());
    CHECK(orders == std::multiset<size_t>{1, 2, 4, 4, 4});

    auto z6 = cyclic_group(6);
    CHECK(normal_abelian_subgroups(z6).size() == 4);  // all subgroups of Z6
}

TEST_CASE("min_abelian_index and can_grade", "[groups]") {
    CHECK(min_abelian_index(cyclic_group(6)) == 1);
    CHECK(min_abelian_index(quaternion_group()) == 2);
    CHECK(min_abelian_index(symmetric_group(4)) == 6);
    CHECK(min_abelian_index(alternating_group_4()) == 3);

    CHECK(can_grade(cyclic_group(5), 1));
    CHECK(can_grade(quaternion_group(), 2));
    CHECK_FALSE(can_grade(symmetric_group(4), 3));

    // abelian iff min index 1
    for (const auto& g : {builtin_group("Z2xZ2"), cyclic_group(7), builtin_group("S3")}) {
        CHECK((min_abelian_index(g) == 1) == g->is_abelian());
    }
    // monotonicity: can_grade(G,d) and d | d' implies can_grade(G,d')
    for (const auto& g : {quaternion_group(), symmetric_group(4), alternating_group_4()}) {
        for (size_t d = 1; d <= 12; ++d) {
            if (!can_grade(g, d)) continue;
            for (size_t dp = d; dp <= 24; dp += d) CHECK(can_grade(g, dp));
        }
    }
}

TEST_CASE("quotient examples", "[groups]") {
    auto s4 = symmetric_group(4);
    auto subs = normal_abelian_subgroups(s4);
    const Subgroup& v4 = subs[1];
    auto q = quotient(s4, v4);
    CHECK(q.group->order() == 6);
    CHECK_FALSE(q.group->is_abelian());  // S3 fingerprint: nonabelian of order 6

    // projection is a homomorphism
    for (size_t a = 0; a < s4->order(); ++a)
        for (size_t b = 0; b < s4->order(); ++b)
            CHECK(q.proj[s4->mul(a, b)] == q.group->mul(q.proj[a], q.proj[b]));

    // G/G trivial
    auto whole = make_subgroup(s4, [&] {
        std::vector<int> all(s4->order());
        std::iota(all.begin(), all.end(), 0);
        return all;
    }());
    CHECK(quotient(s4, whole).group->order() == 1);

    // Q8 / <i> = Z2
    auto q8 = quaternion_group();
    for (const auto& s : normal_abelian_subgroups(q8)) {
        if (s.order() != 4) continue;
        auto qq = quotient(q8, s);
        CHECK(qq.group->order() == 2);
    }

    // non-normal subgroup rejected: <(0 1)> in S3
    auto s3 = symmetric_group(3);
    auto h = make_subgroup(s3, {s3->id(), s3->index_of(parse_cycles("(0 1)", 3))});
    CHECK_FALSE(h.is_normal);
    CHECK_THROWS_AS(quotient(s3, h), NotNormal);
}

TEST_CASE("character degrees", "[groups]") {
    for (int n : {2, 3, 4, 6, 8}) {
        auto degs = character_degrees(cyclic_group(n));
        CHECK(degs == std::vector<int>(n, 1));
    }
    CHECK(character_degrees(symmetric_group(3)) == std::vector<int>{1, 1, 2});
    CHECK(character_degrees(quaternion_group()) == std::vector<int>{1, 1, 1, 1, 2});
    CHECK(character_degrees(symmetric_group(4)) == std::vector<int>{1, 1, 2, 3, 3});
    CHECK(character_degrees(alternating_group_4()) == std::vector<int>{1, 1, 1, 3});
    CHECK(character_degrees(dihedral_group(4)) == std::vector<int>{1, 1, 1, 1, 2});

    // count = number of classes; sum of squares = order (the function asserts
    // the latter internally, re-check here)
    for (const auto& g : {symmetric_group(5), builtin_group("S3xZ2")}) {
        auto degs = character_degrees(g);
        CHECK(degs.size() == g->conjugacy_classes().size());
        long s = 0;
        for (int d : degs) s += static_cast<long>(d) * d;
        CHECK(s == static_cast<long>(g->order()));
    }
}

TEST_CASE("catalog parsing and builtins", "[groups]") {
    auto entries = parse_catalog("name K4; degree 4; gens (0 1)(2 3), (0 2)(1 3)\n"
                                 "# comment line\n"
                                 "name C5; degree 5; gens (0 1 2 3 4)\n");
    REQUIRE(entries.size() == 2);
    auto k4 = group_from_entry(entries[0]);
    CHECK(k4->order() == 4);
    CHECK(k4->is_abelian());
    CHECK(group_from_entry(entries[1])->order() == 5);

    CHECK(builtin_group("Z12")->order() == 12);
    CHECK(builtin_group("Z2xZ2")->order() == 4);
    CHECK(builtin_group("D4")->order() == 8);
    CHECK(builtin_group("S5")->order() == 120);
    CHECK(builtin_group("A4")->order() == 12);
    CHECK(builtin_group("S3xZ2")->order() == 12);

    // cycle round trip
    auto p = parse_cycles("(0 1)(2 4 3)", 5);
    CHECK(parse_cycles(p.cycles(), 5) == p);
}

TEST_CASE("binary tetrahedral group", "[groups]") {
    const auto& bt = binary_tetrahedral_group();
    CHECK(bt.lg.group->order() == 24);
    // -1 is the unique element of order 2
    int count_order2 = 0;
    for (size_t i = 0; i < 24; ++i)
        if (bt.lg.group->elem_order(static_cast<int>(i)) == 2) ++count_order2;
    CHECK(count_order2 == 1);
}
