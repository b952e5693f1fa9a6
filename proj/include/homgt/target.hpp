#pragma once

// Certifying which targets admit the swap bijection, and threshold graphs.
//
// The certificate machinery works on the pair-conflict graph of a target h:
// its vertices are ordered pairs (u, v) of vertices of h, and two pairs are
// adjacent when both coordinates can step along edges of h while at least one
// of the two crossed pairs is a non-edge.  A target admits the swap bijection
// for every source exactly when this graph is bipartite; an odd cycle in it
// lifts to a source homomorphism whose violated edges are an odd cycle.

#include <array>
#include <optional>
#include <vector>

#include "homgt/graph.hpp"
#include "homgt/numbers.hpp"

namespace homgt {

// Pair (u, v) of target vertices lives at index u * h.n + v.
TargetGraph conflict_graph(const TargetGraph& h);

struct TargetCertificate {
    bool swap_target = false;
    std::vector<int> coloring;   // 0/1 per conflict-graph vertex when certified
    std::vector<int> odd_cycle;  // odd cycle of conflict-graph vertices otherwise
};

TargetCertificate certify_target(const TargetGraph& h);

// Re-checks a certificate against the adjacency rule alone, without rebuilding
// the conflict graph through the same code path.
bool check_certificate(const TargetGraph& h, const TargetCertificate& cert);

// Vertices (a, b, c, d), not necessarily distinct, with ab and cd edges and
// bc and da non-edges; first match in lexicographic (a, b, c, d) order.
std::optional<std::array<int, 4>> find_alternating_four_circuit(const TargetGraph& h);

// Vertex weights a_1, ..., a_n and a threshold t describing a graph where
// x ~ y (including x = y) exactly when a_x + a_y <= t.
struct ThresholdRepresentation {
    std::vector<Rat> weights;       // aligned with `order`
    Rat threshold = 0;
    std::vector<int> order;         // original vertex for each weight slot
};

struct ThresholdRecognition {
    bool is_threshold = false;
    ThresholdRepresentation rep;          // valid when recognized
    std::array<int, 4> four_circuit{};    // witness otherwise
};

// Recognizes threshold targets by sorting vertices by degree and checking
// that closed neighborhoods form a chain; any failure yields an alternating
// four-circuit witness.
ThresholdRecognition recognize_threshold(const TargetGraph& h);

// Builds the graph of a threshold representation (vertex i keeps weights[i]).
TargetGraph threshold_graph(const std::vector<Rat>& weights, const Rat& threshold);

// The 2^n threshold classes on n vertices: for each looped/unlooped sequence,
// every looped vertex is joined to itself and to all later vertices.  The
// result is indexed by the loop bitmask (bit i = vertex i looped).
std::vector<TargetGraph> enumerate_threshold_classes(int n);

// Vertices 0..n with i ~ j exactly when i + j <= n; homomorphisms of g into
// this target are the lattice points of the n-fold dilate of the edge-relaxed
// stable-set polytope of g.
TargetGraph lattice_target(int n);

}  // namespace homgt
