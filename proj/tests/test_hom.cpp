#include <doctest.h>

#include <vector>

#include "homgt/errors.hpp"
#include "homgt/graph.hpp"
#include "homgt/hom.hpp"
#include "homgt/numbers.hpp"
#include "homgt/target.hpp"

#include "oracles.hpp"

using namespace homgt;

// ----- plain counts ----------------------------------------------------------

TEST_CASE("pinned homomorphism counts") {
    TargetGraph h1 = independence_target();
    CHECK(count_hom(complete_graph(2), h1) == 3);
    CHECK(count_hom(cycle_graph(5), as_target(complete_graph(3))) == 30);
    CHECK(count_hom(cycle_graph(4), h1) == 7);           // i(C_4)
    SimpleGraph prism(6);  // two triangles joined by a perfect matching
    for (auto [u, v] : {std::pair{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {1, 4},
                        {2, 5}})
        prism.add_edge(u, v);
    CHECK(count_hom(prism, h1) == 13);  // i(prism)
    CHECK(count_hom(bipartite_double(complete_graph(3)), h1) == 18);  // double cover is C_6
    CHECK(count_hom(complete_graph(3), h1) == 4);        // i(K_3)
    CHECK(count_hom(cycle_graph(6), h1) == 18);          // i(C_6)
    // empty source has exactly one (empty) homomorphism
    CHECK(count_hom(SimpleGraph(0), h1) == 1);
    // edgeless source: all |V(H)|^n maps
    CHECK(count_hom(SimpleGraph(3), h1) == 8);
}

TEST_CASE("count_hom against the odometer oracle") {
    std::vector<SimpleGraph> sources;
    for (int n = 1; n <= 4; n++)
        for (const SimpleGraph& g : enumerate_simple_classes(n)) sources.push_back(g);
    std::vector<TargetGraph> targets;
    for (int n = 1; n <= 3; n++)
        for (const TargetGraph& h : enumerate_target_classes(n)) targets.push_back(h);
    for (const SimpleGraph& g : sources)
        for (const TargetGraph& h : targets) REQUIRE(count_hom(g, h) == oracle::hom_count(g, h));
}

TEST_CASE("adding an edge never increases the count") {
    TargetGraph h = lattice_target(2);
    SimpleGraph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    Int before = count_hom(g, h);
    g.add_edge(2, 3);
    Int after = count_hom(g, h);
    CHECK(after <= before);
}

// ----- weighted counts -------------------------------------------------------

TEST_CASE("weighted counts") {
    TargetGraph h1 = independence_target();
    for (const Rat& lam : {Rat(1, 2), Rat(1), Rat(2)}) {
        std::vector<Rat> w{Rat(1), lam};
        CHECK(count_hom_weighted(complete_graph(2), h1, w) == 1 + 2 * lam);
    }
    // unit weights reduce to the plain count
    std::vector<Rat> unit{Rat(1), Rat(1)};
    CHECK(count_hom_weighted(cycle_graph(5), h1, unit) == Rat(count_hom(cycle_graph(5), h1)));

    std::vector<Rat> negative{Rat(1), Rat(-1)};
    CHECK_THROWS_AS(count_hom_weighted(complete_graph(2), h1, negative), InvalidParameter);
    std::vector<Rat> short_vec{Rat(1)};
    CHECK_THROWS_AS(count_hom_weighted(complete_graph(2), h1, short_vec), InvalidParameter);
}

TEST_CASE("weighted counts against the oracle") {
    std::vector<Rat> w3{Rat(1, 2), Rat(2), Rat(1, 3)};
    for (const SimpleGraph& g : enumerate_simple_classes(3))
        for (const TargetGraph& h : enumerate_target_classes(3))
            REQUIRE(count_hom_weighted(g, h, w3) == oracle::hom_weighted(g, h, w3));
}

// ----- complete bipartite fast path -------------------------------------------

TEST_CASE("complete bipartite counts") {
    TargetGraph h1 = independence_target();
    CHECK(count_hom_complete_bipartite(2, 2, h1) == 7);
    CHECK(count_hom_complete_bipartite(3, 3, h1) == 15);
    // 2^{d+1} - 1 for K_{d,d} into the independence target
    for (int d = 1; d <= 6; d++)
        CHECK(count_hom_complete_bipartite(d, d, h1) == (Int(1) << (d + 1)) - 1);
    for (int a = 1; a <= 3; a++)
        for (int b = 1; b <= 3; b++)
            for (const TargetGraph& h : enumerate_target_classes(2))
                REQUIRE(count_hom_complete_bipartite(a, b, h) ==
                        count_hom(complete_bipartite(a, b), h));

    std::vector<Rat> w{Rat(1), Rat(1, 2)};
    for (int a = 1; a <= 3; a++)
        CHECK(count_hom_complete_bipartite(a, 2, h1, w) ==
              count_hom_weighted(complete_bipartite(a, 2), h1, w));
}

// ----- enumeration -----------------------------------------------------------

TEST_CASE("enumerate_hom is lexicographic and complete") {
    TargetGraph h1 = independence_target();
    std::vector<std::vector<int>> seen;
    enumerate_hom(path_graph(2), h1, [&](const std::vector<int>& img) {
        seen.push_back(img);
        return true;
    });
    CHECK(seen == std::vector<std::vector<int>>{{0, 0}, {0, 1}, {1, 0}});

    // early stop after the first hit
    int visits = 0;
    enumerate_hom(path_graph(2), h1, [&](const std::vector<int>&) {
        visits++;
        return false;
    });
    CHECK(visits == 1);

    std::uint64_t total = 0;
    enumerate_hom(cycle_graph(5), as_target(complete_graph(3)), [&](const std::vector<int>&) {
        total++;
        return true;
    });
    CHECK(total == 30);
}

// ----- colorings and surjective counts -----------------------------------------

TEST_CASE("proper colorings") {
    CHECK(count_colorings(cycle_graph(5), 3) == 30);
    CHECK(count_colorings(complete_graph(3), 3) == 6);
    CHECK(count_colorings(complete_graph(3), 2) == 0);
    CHECK(count_colorings(SimpleGraph(3), 2) == 8);
    for (unsigned long q = 0; q <= 6; q++)
        CHECK(count_colorings(cycle_graph(4), q) == count_hom(cycle_graph(4), as_target(complete_graph((int)q))));
}

TEST_CASE("surjective counts against the partition oracle") {
    SimpleGraph paw(4);
    paw.add_edge(0, 1);
    paw.add_edge(0, 2);
    paw.add_edge(1, 2);
    paw.add_edge(2, 3);
    for (const SimpleGraph& g : {complete_graph(3), cycle_graph(5), paw, path_graph(4)})
        for (int i = 0; i <= g.n; i++)
            REQUIRE(count_hom_surjective(g, i) == oracle::surjective_colorings(g, i));
}

TEST_CASE("binomial expansion identity") {
    // sum_i surj(g, i) * binom(q, i) = colorings(g, q)
    for (const SimpleGraph& g : {cycle_graph(5), complete_graph(4), path_graph(3)}) {
        std::vector<Int> surj = surjective_counts(g, g.n);
        for (unsigned long q = 0; q <= (unsigned long)g.n + 2; q++) {
            Int sum = 0;
            for (int i = 0; i <= g.n; i++) sum += surj[i] * binomial(q, i);
            REQUIRE(sum == count_colorings(g, q));
        }
    }
}

// ----- state sums ------------------------------------------------------------

TEST_CASE("threshold state sums") {
    // levels (0, 1) with hard constraint x_u + x_v <= 1 and unit weights
    // recover independent-set counts
    StateSystem sys;
    sys.activities = {Rat(0), Rat(1)};
    sys.weights = {Rat(1), Rat(1)};
    sys.threshold = Rat(1);
    CHECK(count_states(cycle_graph(4), sys) == 7);
    CHECK(count_states(complete_graph(3), sys) == 4);

    // three levels with threshold 2: lattice count at level 2
    StateSystem lat;
    lat.activities = {Rat(0), Rat(1), Rat(2)};
    lat.weights = {Rat(1), Rat(1), Rat(1)};
    lat.threshold = Rat(2);
    CHECK(count_states(complete_graph(2), lat) == 6);
    CHECK(count_states(complete_graph(3), lat) == 11);
}

// ----- budgets ---------------------------------------------------------------

TEST_CASE("node budget trips") {
    CHECK_THROWS_AS(count_hom(cycle_graph(8), lattice_target(3), 10), ResourceLimit);
    CHECK_THROWS_AS(count_hom_weighted(cycle_graph(8), lattice_target(3),
                                       std::vector<Rat>(4, Rat(1)), 10),
                    ResourceLimit);
}
