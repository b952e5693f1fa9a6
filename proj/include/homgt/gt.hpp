#pragma once

// Exact checks of the homomorphism-count inequalities for regular sources:
// hom(G, H) <= hom(K_{d,d}, H)^{N/(2d)} for d-regular G on N vertices, its
// weighted variant, and the two-sided doubling inequality
// hom(G ⊔ G, H) <= hom(G x K_2, H).  Fractional exponents are decided by
// cross-powering: lhs^{2d} <= rhs_base^N in exact arithmetic.

#include <cstdint>
#include <string>
#include <vector>

#include "homgt/graph.hpp"
#include "homgt/hom.hpp"
#include "homgt/numbers.hpp"

namespace homgt {

enum class Verdict { Holds, Fails };

// Degree when every vertex of g has the same one; -1 otherwise (or when g
// has no vertices).
int regular_degree(const SimpleGraph& g);

struct GtReport {
    std::string id;       // corpus position or caller-supplied name
    int n = 0;            // vertices of the source
    int d = 0;            // regularity degree
    Rat lhs;              // hom(G, H), weighted when weights were given
    Rat rhs_base;         // hom(K_{d,d}, H), likewise
    Rat lhs_power;        // lhs^{2d}
    Rat rhs_power;        // rhs_base^{n}
    Verdict verdict = Verdict::Holds;
    SimpleGraph graph;    // the source that was checked
};

// Requires g d-regular with d >= 1.  The zero edge case is automatic: when
// rhs_base = 0 the verdict holds exactly for lhs = 0.
GtReport check_gt(const SimpleGraph& g, const TargetGraph& h,
                  std::uint64_t node_budget = kDefaultNodeBudget);
GtReport check_wgt(const SimpleGraph& g, const TargetGraph& h, const std::vector<Rat>& weights,
                   std::uint64_t node_budget = kDefaultNodeBudget);

struct StronglyGtReport {
    Rat lhs;  // hom(G ⊔ G, H)
    Rat rhs;  // hom(G x K_2, H)
    Verdict verdict = Verdict::Holds;
};

// Any g, looped h; weighted overload sums vertex activities over images.
StronglyGtReport check_strongly_gt(const SimpleGraph& g, const TargetGraph& h,
                                   std::uint64_t node_budget = kDefaultNodeBudget);
StronglyGtReport check_strongly_gt(const SimpleGraph& g, const TargetGraph& h,
                                   const std::vector<Rat>& weights,
                                   std::uint64_t node_budget = kDefaultNodeBudget);

// One report per isomorphism class of d-regular source with 1 <= d <= d_max,
// d < n <= n_max, in deterministic order (n ascending, then d, then class
// index within enumerate_regular); `jobs` worker threads share the items and
// results are merged back in corpus order.
std::vector<GtReport> scan_corpus(const TargetGraph& h, int n_max, int d_max,
                                  const std::vector<Rat>* weights = nullptr, int jobs = 1,
                                  std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace homgt
