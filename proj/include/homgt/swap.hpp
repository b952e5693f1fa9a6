#pragma once

// The bipartite swapping machinery.  A pair labeling assigns an ordered pair
// of target vertices to each source vertex; such labelings encode
// homomorphisms out of either doubled graph (two disjoint copies, or the
// bipartite double cover).  Swapping the two coordinates on a suitable
// crossing set transports labelings between the two encodings, and doing so
// on a canonical crossing set makes the transport a bijection.

#include <cstdint>
#include <utility>
#include <vector>

#include "homgt/graph.hpp"
#include "homgt/numbers.hpp"

namespace homgt {

// Validity regimes: Disjoint encodes Hom(G ⊔ G, H) (each coordinate is a
// homomorphism on its own), Crossed encodes Hom(G x K_2, H) (across every
// edge, each coordinate of u must be adjacent to the other coordinate of v),
// Raw is unconstrained.
enum class LabelMode { Disjoint, Crossed, Raw };

struct PairLabeling {
    LabelMode mode = LabelMode::Raw;
    std::vector<std::pair<int, int>> labels;  // labels[v] = (first, second)
};

// One label pair per vertex of g, all coordinates inside h, and the mode
// constraint satisfied across every edge of g.
bool labeling_valid(const SimpleGraph& g, const TargetGraph& h, const PairLabeling& p);

// Validating constructor; throws InvalidParameter unless labeling_valid.
PairLabeling make_labeling(const SimpleGraph& g, const TargetGraph& h,
                           std::vector<std::pair<int, int>> labels, LabelMode mode);

// Decode a homomorphism image of disjoint_double(g) or bipartite_double(g)
// (vertex (v, i) at index 2v + i) into the corresponding labeling.
PairLabeling labeling_from_disjoint(const std::vector<int>& image);
PairLabeling labeling_from_crossed(const std::vector<int>& image);

// Edges uv of g (u < v, sorted) where one of the four pairs p_i(u) p_j(v)
// is not an edge of h; safe edges have all four present.
std::vector<std::pair<int, int>> violated_edges(const SimpleGraph& g, const TargetGraph& h,
                                                const PairLabeling& p);

// Whether the violated edges span a bipartite subgraph of g (the bipartite
// swapping property).
bool has_bsp(const SimpleGraph& g, const TargetGraph& h, const PairLabeling& p);

// The lexicographically least vertex set W such that every listed edge has
// exactly one endpoint in W: per component of the edge subgraph, the
// 2-coloring class avoiding the component's lowest vertex.  Returns W sorted
// ascending; throws NotBipartite (with an odd cycle) when no such W exists.
std::vector<int> canonical_crossing_set(const SimpleGraph& g,
                                        const std::vector<std::pair<int, int>>& edges);

// Exchanges the two coordinates on every vertex of w; resulting mode is Raw.
PairLabeling swap_labeling(const PairLabeling& p, const std::vector<int>& w);

struct TransportResult {
    PairLabeling labeling;          // coordinates swapped on the crossing set
    std::vector<int> crossing_set;  // the canonical crossing set used
};

// Swaps p on the canonical crossing set of its violated edges, producing a
// valid labeling of the opposite mode with the same violated edges.
// Requires mode Disjoint or Crossed, a valid labeling, and the bipartite
// swapping property; applying transport twice returns the input.
TransportResult transport(const SimpleGraph& g, const TargetGraph& h, const PairLabeling& p);

struct SwapBijectionReport {
    Int disjoint_count = 0;  // labelings from Hom(G ⊔ G, H) with the property
    Int crossed_count = 0;   // labelings from Hom(G x K_2, H) with the property
    bool roundtrip_ok = false;
    bool bijection_ok = false;
    bool ok() const { return roundtrip_ok && bijection_ok && disjoint_count == crossed_count; }
};

inline constexpr std::uint64_t kDefaultEnumBudget = 8'000'000;

// Enumerates both homomorphism sets, keeps the elements with the bipartite
// swapping property, transports every one of them both ways, and checks
// membership, injectivity, and the roundtrip identity.  Throws ResourceLimit
// when either set is larger than max_elements.
SwapBijectionReport verify_swap_bijection(const SimpleGraph& g, const TargetGraph& h,
                                          std::uint64_t max_elements = kDefaultEnumBudget);

inline constexpr std::uint64_t kDefaultPairBudget = 50'000'000;

// Exhaustively decides whether every element of Hom(G ⊔ G, H) has the
// bipartite swapping property.  Enumerates Hom(G, H) once and scans
// unordered pairs (f, f'): with both coordinates homomorphisms, an edge uv
// is violated exactly when f(u)f'(v) or f'(u)f(v) is a non-edge of h, the
// violated set does not depend on the pair order, and pairs with f = f'
// violate nothing.  Throws ResourceLimit past max_pairs unordered pairs.
bool disjoint_homs_all_bsp(const SimpleGraph& g, const TargetGraph& h,
                           std::uint64_t max_pairs = kDefaultPairBudget);

}  // namespace homgt
