#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "homgt/errors.hpp"
#include "homgt/graph.hpp"

#include "oracles.hpp"

using namespace homgt;

// ----- bitsets ---------------------------------------------------------------

TEST_CASE("bits basics") {
    Bits b;
    CHECK(b.count() == 0);
    b.set(3);
    b.set(70);
    b.set(255);
    CHECK(b.count() == 3);
    CHECK(b.test(70));
    CHECK(!b.test(71));
    CHECK(b.lowest() == 3);
    b.reset(3);
    CHECK(b.lowest() == 70);
    CHECK(b.to_vector() == std::vector<int>{70, 255});

    Bits c = Bits::first_n(4);
    CHECK(c.to_vector() == std::vector<int>{0, 1, 2, 3});
    CHECK(c.subset_of(Bits::first_n(5)));
    CHECK(!Bits::first_n(5).subset_of(c));

    Bits d = b | c;
    CHECK(d.count() == 6);
    CHECK((d & c) == c);
    Bits e = d;
    CHECK(e.pop_lowest() == 0);
    CHECK(e.count() == 5);
}

// ----- constructions ---------------------------------------------------------

TEST_CASE("standard graphs") {
    CHECK(complete_graph(4).edges().size() == 6);
    CHECK(complete_graph(1).edges().empty());
    SimpleGraph c5 = cycle_graph(5);
    for (int v = 0; v < 5; v++) CHECK(c5.degree(v) == 2);
    SimpleGraph p4 = path_graph(4);
    CHECK(p4.edges().size() == 3);
    CHECK(p4.degree(0) == 1);
    CHECK(p4.degree(1) == 2);
    SimpleGraph k23 = complete_bipartite(2, 3);
    CHECK(k23.n == 5);
    CHECK(k23.edges().size() == 6);
    CHECK(check_bipartite(k23).bipartite);
}

TEST_CASE("target graphs and loops") {
    TargetGraph h1 = independence_target();
    CHECK(h1.n == 2);
    CHECK(h1.has_loop(0));
    CHECK(!h1.has_loop(1));
    CHECK(h1.has_edge(0, 1));
    CHECK(h1.has_edge(1, 0));
    CHECK(!h1.has_edge(1, 1));
    CHECK(h1.loops() == std::vector<int>{0});
    // a loop counts once toward the degree
    CHECK(h1.degree(0) == 2);
    CHECK(h1.degree(1) == 1);
}

TEST_CASE("doublings") {
    // both doublings of C_3: two triangles vs the 6-cycle
    SimpleGraph tri2 = disjoint_double(complete_graph(3));
    CHECK(tri2.n == 6);
    CHECK(tri2.edges().size() == 6);
    CHECK(isomorphic(tri2, disjoint_union(complete_graph(3), complete_graph(3))));
    SimpleGraph c3x = bipartite_double(complete_graph(3));
    CHECK(isomorphic(c3x, cycle_graph(6)));
    CHECK(isomorphic(bipartite_double(cycle_graph(5)), cycle_graph(10)));

    // the doubled vertex (v, i) sits at index 2v + i
    SimpleGraph k2x = bipartite_double(complete_graph(2));
    CHECK(k2x.has_edge(0, 3));  // (0,0)-(1,1)
    CHECK(k2x.has_edge(1, 2));  // (0,1)-(1,0)
    CHECK(!k2x.has_edge(0, 2));

    // bipartite G: the two doublings coincide up to isomorphism
    for (const SimpleGraph& g : {cycle_graph(4), path_graph(3), complete_bipartite(2, 3)})
        CHECK(isomorphic(disjoint_double(g), bipartite_double(g)));
}

// ----- bipartiteness ----------------------------------------------------------

TEST_CASE("bipartite check") {
    BipartiteCheck even = check_bipartite(cycle_graph(6));
    CHECK(even.bipartite);
    for (auto [u, v] : cycle_graph(6).edges()) CHECK(even.side[u] != even.side[v]);

    BipartiteCheck odd = check_bipartite(cycle_graph(7));
    CHECK(!odd.bipartite);
    CHECK(odd.odd_cycle.size() % 2 == 1);
    // the witness is a closed walk along edges with distinct vertices
    const auto& cyc = odd.odd_cycle;
    std::set<int> seen(cyc.begin(), cyc.end());
    CHECK(seen.size() == cyc.size());
    for (size_t i = 0; i < cyc.size(); i++)
        CHECK(cycle_graph(7).has_edge(cyc[i], cyc[(i + 1) % cyc.size()]));

    TargetGraph looped(3);
    looped.add_edge(0, 1);
    looped.add_edge(2, 2);
    BipartiteCheck lc = check_bipartite(looped);
    CHECK(!lc.bipartite);
    CHECK(lc.odd_cycle == std::vector<int>{2});
}

TEST_CASE("odd girth") {
    CHECK(odd_girth(complete_graph(3)) == 3);
    CHECK(odd_girth(complete_graph(4)) == 3);
    CHECK(odd_girth(cycle_graph(5)) == 5);
    CHECK(odd_girth(cycle_graph(7)) == 7);
    CHECK(!odd_girth(cycle_graph(8)).has_value());
    CHECK(!odd_girth(complete_bipartite(3, 3)).has_value());
    // triangle plus pendant path keeps odd girth 3
    SimpleGraph g(5);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 4);
    CHECK(odd_girth(g) == 3);
}

// ----- isomorphism -----------------------------------------------------------

TEST_CASE("canonical codes and isomorphism") {
    // same degree sequence, different graphs
    CHECK(!isomorphic(cycle_graph(6), disjoint_union(complete_graph(3), complete_graph(3))));
    SimpleGraph prism = bipartite_double(complete_graph(3));
    CHECK(!isomorphic(prism, complete_bipartite(3, 3)));
    CHECK(isomorphic(prism, prism));

    // relabeling preserves the code
    SimpleGraph g(5);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 4);
    g.add_edge(0, 4);
    g.add_edge(0, 2);
    int perm[5] = {3, 0, 4, 1, 2};
    SimpleGraph gp(5);
    for (auto [u, v] : g.edges()) gp.add_edge(std::min(perm[u], perm[v]), std::max(perm[u], perm[v]));
    CHECK(canonical_code(g) == canonical_code(gp));
    CHECK(isomorphic(g, gp));

    // loop placement distinguishes targets
    TargetGraph end_loop(3), mid_loop(3);
    for (TargetGraph* t : {&end_loop, &mid_loop}) {
        t->add_edge(0, 1);
        t->add_edge(1, 2);
    }
    end_loop.add_edge(0, 0);
    mid_loop.add_edge(1, 1);
    CHECK(!isomorphic(end_loop, mid_loop));
    TargetGraph other_end(3);
    other_end.add_edge(0, 1);
    other_end.add_edge(1, 2);
    other_end.add_edge(2, 2);
    CHECK(isomorphic(end_loop, other_end));
}

// ----- enumerations -----------------------------------------------------------

TEST_CASE("regular graph classes") {
    CHECK(enumerate_regular(3, 1).empty());  // odd n*d has no 1-factor
    CHECK(enumerate_regular(5, 3).empty());
    CHECK(enumerate_regular(4, 1).size() == 1);
    CHECK(enumerate_regular(4, 3).size() == 1);
    CHECK(isomorphic(enumerate_regular(4, 3)[0], complete_graph(4)));
    CHECK(enumerate_regular(6, 3).size() == 2);
    CHECK(enumerate_regular(6, 2).size() == 2);   // C_6 and 2 C_3
    CHECK(enumerate_regular(7, 2).size() == 2);   // C_7 and C_3 + C_4
    CHECK(enumerate_regular(8, 2).size() == 3);
    CHECK(enumerate_regular(8, 3).size() == 6);   // 5 connected cubic + K_4 ⊔ K_4

    for (int n = 2; n <= 6; n++)
        for (int d = 1; d < n; d++) {
            auto classes = enumerate_regular(n, d);
            std::set<std::uint64_t> codes;
            std::uint64_t labeled = 0;
            for (const SimpleGraph& g : classes) {
                for (int v = 0; v < n; v++) REQUIRE(g.degree(v) == d);
                codes.insert(canonical_code(g));
                // orbit-counting: labeled graphs in this class = n! / |Aut|
                std::uint64_t aut = oracle::aut_count(g);
                std::uint64_t fact = 1;
                for (int k = 2; k <= n; k++) fact *= k;
                REQUIRE(fact % aut == 0);
                labeled += fact / aut;
            }
            CHECK(codes.size() == classes.size());
            CHECK(labeled == oracle::labeled_regular_count(n, d));
        }
}

TEST_CASE("simple and target class counts") {
    CHECK(enumerate_simple_classes(1).size() == 1);
    CHECK(enumerate_simple_classes(2).size() == 2);
    CHECK(enumerate_simple_classes(3).size() == 4);
    CHECK(enumerate_simple_classes(4).size() == 11);
    CHECK(enumerate_simple_classes(5).size() == 34);
    CHECK(enumerate_target_classes(1).size() == 2);
    CHECK(enumerate_target_classes(2).size() == 6);
    CHECK(enumerate_target_classes(3).size() == 20);
    CHECK(enumerate_target_classes(4).size() == 90);

    std::set<std::uint64_t> codes;
    for (const TargetGraph& h : enumerate_target_classes(3)) codes.insert(canonical_code(h));
    CHECK(codes.size() == 20);
}

TEST_CASE("construction guards") {
    CHECK_THROWS_AS(cycle_graph(2), InvalidParameter);
    CHECK_THROWS_AS(complete_graph(-1), InvalidParameter);
    CHECK_THROWS_AS(enumerate_regular(11, 2), ResourceLimit);
    CHECK_THROWS_AS(enumerate_simple_classes(7), ResourceLimit);
    CHECK_THROWS_AS(enumerate_target_classes(6), ResourceLimit);
    SimpleGraph g(3);
    CHECK_THROWS_AS(g.add_edge(0, 0), InvalidParameter);
    CHECK_THROWS_AS(g.add_edge(0, 3), InvalidParameter);
}
