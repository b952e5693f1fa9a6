#pragma once

// Exact homomorphism counting.
//
// The core is a backtracking search over source vertices (most-constrained
// order, bitset candidate domains).  Suffixes of the order that span no edge
// are counted by a product instead of being walked.  Complete loop-free
// targets are routed through a memoized deletion-contraction chromatic
// polynomial, which also powers the surjective counts needed for the
// binomial-basis coloring profiles.

#include <cstdint>
#include <functional>
#include <vector>

#include "homgt/graph.hpp"
#include "homgt/numbers.hpp"

namespace homgt {

inline constexpr std::uint64_t kDefaultNodeBudget = 4'000'000'000ull;
inline constexpr std::uint64_t kDefaultDcBudget = 4'000'000ull;

// |Hom(g, h)|
Int count_hom(const SimpleGraph& g, const TargetGraph& h,
              std::uint64_t node_budget = kDefaultNodeBudget);

// Sum over Hom(g, h) of the product of vertex-image weights.
// `weights[w]` is the (nonnegative rational) weight of target vertex w.
Rat count_hom_weighted(const SimpleGraph& g, const TargetGraph& h,
                       const std::vector<Rat>& weights,
                       std::uint64_t node_budget = kDefaultNodeBudget);

// Calls `visit` once per homomorphism, in lexicographic order of the image
// tuple (source vertices 0..n-1).  Return false from `visit` to stop early.
void enumerate_hom(const SimpleGraph& g, const TargetGraph& h,
                   const std::function<bool(const std::vector<int>&)>& visit,
                   std::uint64_t node_budget = kDefaultNodeBudget);

// Chromatic polynomial of g, coefficients in the monomial basis (ascending
// powers, length n + 1), computed by memoized deletion-contraction.
std::vector<Int> chromatic_monomial(const SimpleGraph& g,
                                    std::uint64_t dc_budget = kDefaultDcBudget);

// Number of proper colorings with a fixed palette of `colors` colors;
// equals |Hom(g, K_colors)|.
Int count_colorings(const SimpleGraph& g, unsigned long colors,
                    std::uint64_t dc_budget = kDefaultDcBudget);

// Homomorphisms of g onto K_colors that hit every color, via inclusion-
// exclusion over the palette.
Int count_hom_surjective(const SimpleGraph& g, int colors,
                         std::uint64_t dc_budget = kDefaultDcBudget);

// Surjective counts for every palette size 0..upto, sharing one chromatic
// polynomial.
std::vector<Int> surjective_counts(const SimpleGraph& g, int upto,
                                   std::uint64_t dc_budget = kDefaultDcBudget);

// hom(K_{a,b}, h), optionally weighted: sums, over the images of the a-side,
// the weighted size of the common neighborhood raised to the b-th power.
Int count_hom_complete_bipartite(int a, int b, const TargetGraph& h);
Rat count_hom_complete_bipartite(int a, int b, const TargetGraph& h,
                                 const std::vector<Rat>& weights);

// A finite state system: states carry an activity and a weight, and two
// states may sit on adjacent source vertices exactly when their activities
// sum to at most the threshold.
struct StateSystem {
    std::vector<Rat> activities;
    std::vector<Rat> weights;
    Rat threshold;
};

// Weighted count of threshold-respecting state assignments of g.
Rat count_states(const SimpleGraph& g, const StateSystem& sys,
                 std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace homgt
