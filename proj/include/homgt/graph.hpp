#pragma once

// Graphs on up to 256 vertices with adjacency kept as fixed-width bitset rows.
// SimpleGraph forbids loops (sources of homomorphisms); TargetGraph allows
// them (targets of homomorphisms).  Both are plain structs: build them with
// add_edge and treat them as immutable afterwards.

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace homgt {

inline constexpr int kMaxVertices = 256;

// ----- fixed-capacity vertex set ------------------------------------------

struct Bits {
    std::array<std::uint64_t, 4> w{};

    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    bool any() const { return (w[0] | w[1] | w[2] | w[3]) != 0; }
    bool none() const { return !any(); }
    int count() const {
        return std::popcount(w[0]) + std::popcount(w[1]) + std::popcount(w[2]) +
               std::popcount(w[3]);
    }
    bool intersects(const Bits& o) const {
        return ((w[0] & o.w[0]) | (w[1] & o.w[1]) | (w[2] & o.w[2]) | (w[3] & o.w[3])) != 0;
    }
    // true when this is a subset of o
    bool subset_of(const Bits& o) const {
        return ((w[0] & ~o.w[0]) | (w[1] & ~o.w[1]) | (w[2] & ~o.w[2]) | (w[3] & ~o.w[3])) == 0;
    }

    Bits& operator&=(const Bits& o) {
        for (int i = 0; i < 4; i++) w[i] &= o.w[i];
        return *this;
    }
    Bits& operator|=(const Bits& o) {
        for (int i = 0; i < 4; i++) w[i] |= o.w[i];
        return *this;
    }
    Bits& operator^=(const Bits& o) {
        for (int i = 0; i < 4; i++) w[i] ^= o.w[i];
        return *this;
    }
    friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
    friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
    friend Bits operator^(Bits a, const Bits& b) { return a ^= b; }
    Bits operator~() const {
        Bits r;
        for (int i = 0; i < 4; i++) r.w[i] = ~w[i];
        return r;
    }

    int lowest() const {
        for (int i = 0; i < 4; i++)
            if (w[i]) return 64 * i + std::countr_zero(w[i]);
        return -1;
    }
    // removes and returns the lowest set bit; -1 when empty
    int pop_lowest() {
        for (int i = 0; i < 4; i++)
            if (w[i]) {
                int b = std::countr_zero(w[i]);
                w[i] &= w[i] - 1;
                return 64 * i + b;
            }
        return -1;
    }
    std::vector<int> to_vector() const {
        std::vector<int> out;
        Bits t = *this;
        for (int v = t.pop_lowest(); v >= 0; v = t.pop_lowest()) out.push_back(v);
        return out;
    }

    static Bits first_n(int n) {
        Bits r;
        for (int i = 0; i < 4; i++) {
            int lo = 64 * i, hi = 64 * (i + 1);
            if (n >= hi)
                r.w[i] = ~std::uint64_t{0};
            else if (n > lo)
                r.w[i] = (std::uint64_t{1} << (n - lo)) - 1;
        }
        return r;
    }

    friend bool operator==(const Bits&, const Bits&) = default;
    friend auto operator<=>(const Bits&, const Bits&) = default;
};

// ----- graph types ----------------------------------------------------------

struct SimpleGraph {
    int n = 0;
    std::vector<Bits> adj;

    SimpleGraph() = default;
    explicit SimpleGraph(int n_);

    void add_edge(int u, int v);  // rejects loops, duplicates, range errors
    bool has_edge(int u, int v) const { return adj[u].test(v); }
    int degree(int v) const { return adj[v].count(); }
    int edge_count() const;
    std::vector<std::pair<int, int>> edges() const;  // sorted, u < v
};

struct TargetGraph {
    int n = 0;
    std::vector<Bits> adj;  // diagonal bit set marks a loop

    TargetGraph() = default;
    explicit TargetGraph(int n_);

    void add_edge(int u, int v);  // u == v adds a loop
    bool has_edge(int u, int v) const { return adj[u].test(v); }
    bool has_loop(int v) const { return adj[v].test(v); }
    int loop_count() const;
    int degree(int v) const { return adj[v].count(); }  // loop counts once
    int edge_count() const;                             // non-loop edges
    std::vector<std::pair<int, int>> edges() const;     // non-loop, sorted
    std::vector<int> loops() const;
};

// ----- constructions --------------------------------------------------------

SimpleGraph complete_graph(int n);
SimpleGraph complete_bipartite(int a, int b);
SimpleGraph cycle_graph(int n);   // n >= 3
SimpleGraph path_graph(int n);    // n vertices, n-1 edges
SimpleGraph empty_graph(int n);
SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b);

// Two disjoint copies of g; copy i of vertex v lands at index 2v + i.
SimpleGraph disjoint_double(const SimpleGraph& g);
// Bipartite double cover (tensor product with an edge); same 2v + i indexing,
// with (u, i) ~ (v, 1 - i) exactly when uv is an edge of g.
SimpleGraph bipartite_double(const SimpleGraph& g);

// Interpret a loop-free graph as a target.
TargetGraph as_target(const SimpleGraph& g);
// Target with every vertex looped and all pairs adjacent.
TargetGraph complete_looped_target(int n);
// Two vertices 0 and 1, loop at 0, edge 01: homomorphisms from g into this
// target are exactly the independent sets of g.
TargetGraph independence_target();

// ----- queries --------------------------------------------------------------

bool is_connected(const SimpleGraph& g);
std::vector<Bits> components(const SimpleGraph& g);

struct BipartiteCheck {
    bool bipartite = false;
    std::vector<int> side;       // 0/1 per vertex when bipartite
    std::vector<int> odd_cycle;  // simple odd cycle otherwise (single entry = loop)
};
BipartiteCheck check_bipartite(const SimpleGraph& g);
BipartiteCheck check_bipartite(const TargetGraph& g);  // loops are odd cycles of length 1
inline bool is_bipartite(const SimpleGraph& g) { return check_bipartite(g).bipartite; }
inline bool is_bipartite(const TargetGraph& g) { return check_bipartite(g).bipartite; }

// Length of a shortest odd cycle; empty for bipartite graphs.
std::optional<int> odd_girth(const SimpleGraph& g);

SimpleGraph induced_subgraph(const SimpleGraph& g, const Bits& keep);

// ----- isomorphism ----------------------------------------------------------

// Canonical codes: the lexicographically least upper-triangle bitstring over
// all vertex relabelings that respect degree classes (and loop/degree classes
// for targets).  Equal codes plus equal class profiles characterize
// isomorphism.  Capped at 10 vertices.
std::uint64_t canonical_code(const SimpleGraph& g);
std::uint64_t canonical_code(const TargetGraph& g);
bool isomorphic(const SimpleGraph& a, const SimpleGraph& b);
bool isomorphic(const TargetGraph& a, const TargetGraph& b);

// ----- enumeration ----------------------------------------------------------

// All isomorphism classes of d-regular graphs on n vertices, sorted by
// canonical code.  Empty when n*d is odd.  Requires 1 <= n <= 10, 0 <= d < n.
std::vector<SimpleGraph> enumerate_regular(int n, int d);

// All isomorphism classes of simple graphs on exactly n vertices (n <= 6).
std::vector<SimpleGraph> enumerate_simple_classes(int n);

// All isomorphism classes of loop-allowed graphs on exactly n vertices (n <= 5).
std::vector<TargetGraph> enumerate_target_classes(int n);

}  // namespace homgt
