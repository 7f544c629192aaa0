#include <doctest.h>

#include "regset/cayley_sum.hpp"
#include "regset/group.hpp"

using namespace regset;

namespace {

ElementSet reflections(const Group& g) {
    ElementSet s(g.order());
    for (int i = 0; i < g.dihedral_n(); ++i) s.add(g.reflection(i));
    return s;
}

}  // namespace

TEST_CASE("connection set validation") {
    Group g = Group::dihedral(4);
    CHECK_THROWS_AS(make_connection_set(g, ElementSet::of(8, {0})), InputError);        // e in S
    CHECK_THROWS_AS(make_connection_set(g, ElementSet::of(8, {2})), InputError);        // a^2 is a square
    CHECK_THROWS_AS(make_connection_set(g, ElementSet::of(8, {g.reflection(0)})),       // {b} not normal
                    InputError);
    CHECK_NOTHROW(make_connection_set(g, reflections(g)));
    CHECK_NOTHROW(make_connection_set(g, ElementSet(8)));  // empty is allowed
}

TEST_CASE("graph is |S|-regular, loopless and symmetric") {
    Group g = Group::dihedral(4);
    ElementSet s = reflections(g) | ElementSet::of(8, {1, 3});
    CaySGraph graph = build_graph(make_connection_set(g, s));
    for (int x = 0; x < 8; ++x) {
        CHECK(graph.degree(x) == s.size());
        CHECK_FALSE(graph.adjacency[x].test(x));
        graph.adjacency[x].for_each([&](int y) { CHECK(graph.adjacency[y].test(x)); });
    }
}

TEST_CASE("adjacency follows x*y in S") {
    Group g = Group::abelian({4});
    CaySGraph graph = build_graph(make_connection_set(g, ElementSet::of(4, {1, 3})));
    // 0*1 = 1 in S, 1*2 = 3 in S, 1*1 = 2 not in S
    CHECK(graph.adjacency[0].test(1));
    CHECK(graph.adjacency[1].test(2));
    CHECK_FALSE(graph.adjacency[1].test(1));
}

TEST_CASE("D_8 fixture: reflections make <a^2 b> a (1,1)-regular set") {
    Group g = Group::dihedral(4);
    Subgroup h = generate_subgroup(g, {g.reflection(2)});
    CaySGraph graph = build_graph(make_connection_set(g, reflections(g)));
    RegularityResult r = check_regular_subgroup(graph, h);
    CHECK(r.regular);
    CHECK(r.alpha == 1);
    CHECK(r.beta == 1);
    CHECK(r.quotient == std::array<std::array<int, 2>, 2>{{{1, 3}, {1, 3}}});
    CHECK(r.coset_counts == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("D_8 fixture: reflections make <a^2, b> a (2,2)-regular set") {
    Group g = Group::dihedral(4);
    Subgroup h = generate_subgroup(g, {g.rotation(2), g.reflection(0)});
    CaySGraph graph = build_graph(make_connection_set(g, reflections(g)));
    RegularityResult r = check_regular_subgroup(graph, h);
    CHECK(r.regular);
    CHECK(r.alpha == 2);
    CHECK(r.beta == 2);
    CHECK(r.quotient == std::array<std::array<int, 2>, 2>{{{2, 2}, {2, 2}}});
}

TEST_CASE("non-regular candidate reports a failing vertex") {
    Group g = Group::dihedral(4);
    CaySGraph graph = build_graph(make_connection_set(g, ElementSet::of(8, {1, 3})));
    // {e, a} is not a subgroup and not equitable for S = {a, a^3}
    RegularityResult r = check_regular_set(graph, ElementSet::of(8, {0, 1}));
    CHECK_FALSE(r.regular);
    CHECK(r.failing_vertex >= 0);
    CHECK_THROWS_AS(check_regular_set(graph, ElementSet(8)), InputError);
    CHECK_THROWS_AS(check_regular_set(graph, ElementSet::full(8)), InputError);
}

TEST_CASE("quotient matrix matches the regularity check") {
    Group g = Group::dihedral(4);
    Subgroup h = generate_subgroup(g, {g.reflection(2)});
    CaySGraph graph = build_graph(make_connection_set(g, reflections(g)));
    auto q = quotient_matrix(graph, h.elements);
    CHECK(q.equitable);
    CHECK(q.matrix == std::array<std::array<int, 2>, 2>{{{1, 3}, {1, 3}}});
    auto bad = quotient_matrix(graph, ElementSet::of(8, {0, 1}));
    CHECK_FALSE(bad.equitable);
    CHECK(bad.witness_vertex >= 0);
}

TEST_CASE("perfect code conditions agree: C_4 with H = {0,2}, S = {g}") {
    Group g = Group::abelian({4});
    Subgroup h = generate_subgroup(g, {2});
    auto pc = check_perfect_code_conditions(g, h, make_connection_set(g, ElementSet::of(4, {1})));
    CHECK(pc.is_perfect_code);
    CHECK(pc.is_transversal);
    CHECK(pc.index_condition);
    CHECK(pc.agree);
}

TEST_CASE("perfect code conditions agree on the degenerate H = G, S empty") {
    Group g = Group::abelian({4});
    Subgroup h = generate_subgroup(g, {1});
    auto pc = check_perfect_code_conditions(g, h, make_connection_set(g, ElementSet(4)));
    CHECK(pc.is_perfect_code);
    CHECK(pc.is_transversal);
    CHECK(pc.index_condition);
    CHECK(pc.agree);
}

TEST_CASE("perfect code conditions agree when all three fail") {
    Group g = Group::abelian({4});
    Subgroup h = generate_subgroup(g, {2});
    auto pc = check_perfect_code_conditions(g, h, make_connection_set(g, ElementSet::of(4, {1, 3})));
    CHECK_FALSE(pc.is_perfect_code);
    CHECK_FALSE(pc.is_transversal);
    CHECK_FALSE(pc.index_condition);
    CHECK(pc.agree);
}

TEST_CASE("transversal decomposition of the reflections over <a^2 b>") {
    Group g = Group::dihedral(4);
    Subgroup h = generate_subgroup(g, {g.reflection(2)});
    auto dec = decompose_connection_set(g, h, make_connection_set(g, reflections(g)));
    CHECK(dec.inside == ElementSet::of(8, {g.reflection(2)}));
    REQUIRE(dec.parts.size() == 1);
    CHECK(dec.parts[0].size() == 3);
    // the part plus e meets every coset exactly once
    auto cosets = right_cosets(g, h);
    ElementSet part = dec.parts[0];
    part.add(0);
    for (const auto& coset : cosets.cosets) CHECK(part.intersection_size(coset) == 1);
}

TEST_CASE("decomposition recombines to the original set") {
    Group g = Group::dihedral(6);
    Subgroup h = generate_subgroup(g, {g.rotation(3), g.reflection(0)});
    ElementSet s = reflections(g);
    auto dec = decompose_connection_set(g, h, make_connection_set(g, s));
    ElementSet rebuilt = dec.inside;
    for (const auto& p : dec.parts) rebuilt = rebuilt | p;
    CHECK(rebuilt == s);
}

TEST_CASE("decomposition rejects non-constant outside counts") {
    Group g = Group::dihedral(4);
    Subgroup h = generate_subgroup(g, {g.reflection(2)});
    // S = {a, a^3}: counts 1,0,1 over the non-H cosets
    CHECK_THROWS_AS(
        decompose_connection_set(g, h, make_connection_set(g, ElementSet::of(8, {1, 3}))),
        InputError);
}

TEST_CASE("split by a normal subgroup separates reflection classes") {
    Group g = Group::dihedral(4);
    Subgroup h = generate_subgroup(g, {g.rotation(2), g.reflection(0)});  // <a^2, b>, normal
    auto [inside, outside] = split_by_subgroup(g, h, make_connection_set(g, reflections(g)));
    CHECK(inside.s == ElementSet::of(8, {g.reflection(0), g.reflection(2)}));   // b^G
    CHECK(outside.s == ElementSet::of(8, {g.reflection(1), g.reflection(3)})); // (ab)^G
    Subgroup notnormal = generate_subgroup(g, {g.reflection(0)});
    CHECK_THROWS_AS(split_by_subgroup(g, notnormal, make_connection_set(g, reflections(g))),
                    InputError);
}

TEST_CASE("dot export marks the highlighted part") {
    Group g = Group::abelian({4});
    CaySGraph graph = build_graph(make_connection_set(g, ElementSet::of(4, {1, 3})));
    std::string dot = to_dot(graph, ElementSet::of(4, {0, 2}));
    CHECK(dot.find("graph") != std::string::npos);
    CHECK(dot.find("--") != std::string::npos);
    CHECK(dot.find("bold") != std::string::npos);
}

TEST_CASE("regularity report json contains the verdict") {
    Group g = Group::abelian({4});
    CaySGraph graph = build_graph(make_connection_set(g, ElementSet::of(4, {1, 3})));
    std::string json = regularity_report_json(graph, ElementSet::of(4, {0, 2}));
    CHECK(json.find("\"verdict\"") != std::string::npos);
    CHECK(json.find("regular") != std::string::npos);
    CHECK(json.find("abelian:4") != std::string::npos);
}
