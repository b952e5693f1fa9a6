#pragma once

// Chromatic polynomials in the binomial basis and the coloring-count
// comparison between the two doublings of a source graph.  Writing
// P(G, q) = sum_i c_i binom(q, i) with c_i the number of proper colorings
// using exactly the full palette of i colors, the comparison between
// P(G ⊔ G, q) and P(G x K_2, q) becomes coefficient-wise: the two profiles
// agree above 2N - t + 1 (t = odd girth) and the cover side is strictly
// larger there, which forces eventual dominance of the cover side.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "homgt/graph.hpp"
#include "homgt/hom.hpp"
#include "homgt/numbers.hpp"

namespace homgt {

// value(q) = sum_i coeff[i] * binom(q, i)
struct BinomialPolynomial {
    std::vector<Int> coeff;
    Int eval(unsigned long q) const;
};

// Chromatic polynomial of g in the binomial basis; coefficient i counts the
// proper colorings surjective onto an i-color palette (length n + 1).
BinomialPolynomial chromatic_binomial(const SimpleGraph& g,
                                      std::uint64_t dc_budget = kDefaultDcBudget);

struct ProfilePair {
    std::vector<Int> disjoint;  // surjective counts of G ⊔ G, i = 0..2N
    std::vector<Int> crossed;   // surjective counts of G x K_2
};

ProfilePair surjective_profile_pair(const SimpleGraph& g,
                                    std::uint64_t dc_budget = kDefaultDcBudget);

struct CoefficientCompare {
    int n = 0;          // N
    int odd_girth = 0;  // t
    int boundary = 0;   // 2N - t + 1
    bool equality_ok = false;  // profiles equal for boundary < i <= 2N
    bool strict_ok = false;    // disjoint < crossed at i = boundary
    ProfilePair profiles;
    bool pass() const { return equality_ok && strict_ok; }
};

// Requires g non-bipartite (otherwise the profiles are simply identical).
CoefficientCompare verify_coefficient_compare(const SimpleGraph& g,
                                              std::uint64_t dc_budget = kDefaultDcBudget);

struct DominanceCertificate {
    int top_index = -1;  // highest index where the profiles differ; -1 = equal
    int top_sign = 0;    // sign of crossed - disjoint there (0 when equal)
    Int uniform_bound;   // (2N)^{2N+2}: dominance threshold independent of t
    std::optional<Int> girth_bound;  // (2N-t+1)^2 (2N-t)^{2N} + 2N - t
    std::vector<std::pair<unsigned long, Int>> evaluations;  // q -> difference
    ProfilePair profiles;
};

// Difference profile of the doublings, the two explicit dominance
// thresholds, and exact evaluations of P(G x K_2, q) - P(G ⊔ G, q) at the
// requested points.
DominanceCertificate dominance_certificate(const SimpleGraph& g,
                                           const std::vector<unsigned long>& eval_points,
                                           std::uint64_t dc_budget = kDefaultDcBudget);

struct CycleBoundReport {
    std::uint64_t checked_disjoint = 0;  // surjective colorings examined
    std::uint64_t checked_crossed = 0;
    bool exhaustive_disjoint = false;  // full enumeration vs seeded sampling
    bool exhaustive_crossed = false;
    bool pass = true;
};

// For surjective `colors`-colorings f of each doubling (exhaustively when
// the proper-coloring count fits max_enumerate, otherwise by seeded
// rejection sampling), measures every cycle among the violated edges of the
// pair labeling of f and asserts, with L the cycle length and N = |V(g)|:
//   L <= 2N - colors + 1          on both doublings, and
//   L <= 2N - colors              for odd L on the two-disjoint-copies side.
CycleBoundReport verify_cycle_violation_bounds(const SimpleGraph& g, int colors,
                                               std::uint64_t max_enumerate = 4'000'000,
                                               std::uint64_t samples = 20'000,
                                               std::uint64_t seed = 17);

}  // namespace homgt
