#include <doctest.h>

#include <vector>

#include "homgt/errors.hpp"
#include "homgt/graph.hpp"
#include "homgt/gt.hpp"
#include "homgt/hom.hpp"
#include "homgt/target.hpp"
#include "oracles.hpp"

using namespace homgt;

namespace {

TargetGraph two_loops() {
    TargetGraph h(2);
    h.add_edge(0, 0);
    h.add_edge(1, 1);
    return h;
}

SimpleGraph prism() {
    SimpleGraph g(6);
    for (auto [u, v] : {std::pair{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {1, 4},
                        {2, 5}})
        g.add_edge(u, v);
    return g;
}

}  // namespace

// ----- regularity ---------------------------------------------------------------

TEST_CASE("regular degree") {
    CHECK(regular_degree(complete_graph(3)) == 2);
    CHECK(regular_degree(cycle_graph(4)) == 2);
    CHECK(regular_degree(complete_bipartite(3, 3)) == 3);
    CHECK(regular_degree(SimpleGraph(4)) == 0);  // edgeless
    CHECK(regular_degree(SimpleGraph(0)) == -1);
    SimpleGraph path(3);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    CHECK(regular_degree(path) == -1);
}

// ----- the plain inequality --------------------------------------------------------

TEST_CASE("counterexample: two isolated loops") {
    GtReport r = check_gt(complete_graph(3), two_loops());
    CHECK(r.n == 3);
    CHECK(r.d == 2);
    CHECK(r.lhs == 2);
    CHECK(r.rhs_base == 2);
    CHECK(r.lhs_power == 16);  // 2^4
    CHECK(r.rhs_power == 8);   // 2^3
    CHECK(r.verdict == Verdict::Fails);
    CHECK(isomorphic(r.graph, complete_graph(3)));
}

TEST_CASE("independent sets of the prism against the cube") {
    GtReport r = check_gt(prism(), independence_target());
    CHECK(r.d == 3);
    CHECK(r.lhs == 13);
    CHECK(r.rhs_base == 15);
    CHECK(r.lhs_power == 4826809);    // 13^6
    CHECK(r.rhs_power == 11390625);   // 15^6
    CHECK(r.verdict == Verdict::Holds);
}

TEST_CASE("the complete bipartite source itself is tight") {
    GtReport r = check_gt(complete_bipartite(2, 2), independence_target());
    CHECK(r.lhs == 7);
    CHECK(r.rhs_base == 7);
    CHECK(r.lhs_power == r.rhs_power);
    CHECK(r.verdict == Verdict::Holds);
}

TEST_CASE("zero-count edge cases hold as equalities") {
    // edgeless target kills both sides
    GtReport r = check_gt(complete_graph(3), as_target(SimpleGraph(2)));
    CHECK(r.lhs == 0);
    CHECK(r.rhs_base == 0);
    CHECK(r.verdict == Verdict::Holds);
}

TEST_CASE("gt parameter validation") {
    SimpleGraph path(3);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    CHECK_THROWS_AS(check_gt(path, independence_target()), InvalidParameter);
    CHECK_THROWS_AS(check_gt(SimpleGraph(4), independence_target()), InvalidParameter);
    CHECK_THROWS_AS(check_gt(SimpleGraph(0), independence_target()), InvalidParameter);
    // node budget propagates out of the count
    CHECK_THROWS_AS(check_gt(cycle_graph(5), lattice_target(2), 10), ResourceLimit);
}

// ----- the weighted inequality -------------------------------------------------------

TEST_CASE("unit weights reduce to the plain check") {
    std::vector<Rat> unit{1, 1};
    for (const SimpleGraph& g : {complete_graph(3), cycle_graph(4), complete_graph(4)}) {
        GtReport plain = check_gt(g, independence_target());
        GtReport weighted = check_wgt(g, independence_target(), unit);
        CHECK(weighted.lhs == plain.lhs);
        CHECK(weighted.rhs_base == plain.rhs_base);
        CHECK(weighted.lhs_power == plain.lhs_power);
        CHECK(weighted.rhs_power == plain.rhs_power);
        CHECK(weighted.verdict == plain.verdict);
    }
}

TEST_CASE("independence polynomial at activity two") {
    // activity on the in-set vertex of the independence target
    GtReport r = check_wgt(complete_graph(3), independence_target(), {1, 2});
    CHECK(r.lhs == 7);          // 1 + 3*2
    CHECK(r.rhs_base == 17);    // 2*(1+2)^2 - 1
    CHECK(r.lhs_power == 2401);  // 7^4
    CHECK(r.rhs_power == 4913);  // 17^3
    CHECK(r.verdict == Verdict::Holds);
}

TEST_CASE("fractional and degenerate activities") {
    GtReport half = check_wgt(complete_graph(3), independence_target(), {1, Rat(1, 2)});
    CHECK(half.lhs == Rat(5, 2));
    CHECK(half.rhs_base == Rat(7, 2));
    CHECK(half.verdict == Verdict::Holds);

    GtReport zero = check_wgt(complete_graph(3), independence_target(), {0, 0});
    CHECK(zero.lhs == 0);
    CHECK(zero.rhs_base == 0);
    CHECK(zero.verdict == Verdict::Holds);

    CHECK_THROWS_AS(check_wgt(complete_graph(3), independence_target(), {1}),
                    InvalidParameter);
    CHECK_THROWS_AS(check_wgt(complete_graph(3), independence_target(), {1, -1}),
                    InvalidParameter);
}

// ----- the doubling inequality --------------------------------------------------------

TEST_CASE("doubling inequality pins") {
    StronglyGtReport ok = check_strongly_gt(complete_graph(3), independence_target());
    CHECK(ok.lhs == 16);
    CHECK(ok.rhs == 18);
    CHECK(ok.verdict == Verdict::Holds);

    StronglyGtReport bad = check_strongly_gt(complete_graph(3), two_loops());
    CHECK(bad.lhs == 4);
    CHECK(bad.rhs == 2);
    CHECK(bad.verdict == Verdict::Fails);
}

TEST_CASE("bipartite sources double with equality") {
    for (const SimpleGraph& g : {cycle_graph(4), complete_bipartite(1, 3), cycle_graph(6)}) {
        StronglyGtReport r = check_strongly_gt(g, as_target(cycle_graph(5)));
        CHECK(r.lhs == r.rhs);
        CHECK(r.verdict == Verdict::Holds);
    }
}

TEST_CASE("weighted doubling against the oracle") {
    SimpleGraph g = complete_graph(3);
    TargetGraph h1 = independence_target();
    std::vector<Rat> w{1, Rat(1, 2)};
    StronglyGtReport r = check_strongly_gt(g, h1, w);
    CHECK(r.lhs == Rat(25, 4));  // (1 + 3/2)^2
    CHECK(r.rhs == Rat(13, 2));
    CHECK(r.lhs == oracle::hom_weighted(disjoint_double(g), h1, w));
    CHECK(r.rhs == oracle::hom_weighted(bipartite_double(g), h1, w));
    CHECK(r.verdict == Verdict::Holds);

    // empty source: both sides are the empty product
    StronglyGtReport e = check_strongly_gt(SimpleGraph(0), h1);
    CHECK(e.lhs == 1);
    CHECK(e.rhs == 1);
}

// ----- corpus scans ----------------------------------------------------------------------

TEST_CASE("scan corpus order and contents") {
    std::vector<GtReport> reports = scan_corpus(independence_target(), 4, 3);
    REQUIRE(reports.size() == 5);
    std::vector<std::string> ids;
    for (const GtReport& r : reports) ids.push_back(r.id);
    CHECK(ids == std::vector<std::string>{"n2-d1-g0", "n3-d2-g0", "n4-d1-g0", "n4-d2-g0",
                                          "n4-d3-g0"});
    for (const GtReport& r : reports) {
        CHECK(r.verdict == Verdict::Holds);  // swap target: no failures anywhere
        CHECK(regular_degree(r.graph) == r.d);
        CHECK(r.graph.n == r.n);
    }
}

TEST_CASE("scan results do not depend on the worker count") {
    TargetGraph h = two_loops();
    std::vector<GtReport> one = scan_corpus(h, 5, 4, nullptr, 1);
    std::vector<GtReport> three = scan_corpus(h, 5, 4, nullptr, 3);
    REQUIRE(one.size() == three.size());
    for (size_t i = 0; i < one.size(); i++) {
        CHECK(one[i].id == three[i].id);
        CHECK(one[i].lhs == three[i].lhs);
        CHECK(one[i].rhs_base == three[i].rhs_base);
        CHECK(one[i].lhs_power == three[i].lhs_power);
        CHECK(one[i].rhs_power == three[i].rhs_power);
        CHECK(one[i].verdict == three[i].verdict);
        CHECK(canonical_code(one[i].graph) == canonical_code(three[i].graph));
    }
}

TEST_CASE("scan against non-targets finds the failures") {
    std::vector<GtReport> reports = scan_corpus(two_loops(), 4, 3);
    int fails = 0;
    for (const GtReport& r : reports)
        if (r.verdict == Verdict::Fails) fails++;
    CHECK(fails == 2);  // the triangle and the complete graph on four vertices
    CHECK(reports[1].verdict == Verdict::Fails);  // n3-d2-g0
    CHECK(reports[4].verdict == Verdict::Fails);  // n4-d3-g0
}

TEST_CASE("scan parameter validation") {
    CHECK_THROWS_AS(scan_corpus(independence_target(), 0, 1), InvalidParameter);
    CHECK_THROWS_AS(scan_corpus(independence_target(), 3, 0), InvalidParameter);
    CHECK_THROWS_AS(scan_corpus(independence_target(), 11, 1), ResourceLimit);
}
