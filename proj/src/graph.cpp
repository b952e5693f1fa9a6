#include "homgt/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <type_traits>

#include "homgt/errors.hpp"

namespace homgt {

// ----- construction ---------------------------------------------------------

static int check_vertex_count(int n) {
    if (n < 0 || n > kMaxVertices)
        throw InvalidParameter("vertex count " + std::to_string(n) + " outside [0, " +
                               std::to_string(kMaxVertices) + "]");
    return n;
}

// validate through the first initializer, before adj allocates
SimpleGraph::SimpleGraph(int n_) : n(check_vertex_count(n_)), adj(n) {}
TargetGraph::TargetGraph(int n_) : n(check_vertex_count(n_)), adj(n) {}

void SimpleGraph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n || v >= n)
        throw InvalidParameter("edge endpoint out of range");
    if (u == v) throw InvalidParameter("loops are not allowed in a simple graph");
    if (adj[u].test(v)) throw InvalidParameter("duplicate edge");
    adj[u].set(v);
    adj[v].set(u);
}

void TargetGraph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n || v >= n)
        throw InvalidParameter("edge endpoint out of range");
    if (adj[u].test(v)) throw InvalidParameter("duplicate edge");
    adj[u].set(v);
    adj[v].set(u);
}

int SimpleGraph::edge_count() const {
    int total = 0;
    for (const Bits& row : adj) total += row.count();
    return total / 2;
}

int TargetGraph::edge_count() const {
    int total = 0;
    for (int v = 0; v < n; v++) total += adj[v].count() - (has_loop(v) ? 1 : 0);
    return total / 2;
}

int TargetGraph::loop_count() const {
    int total = 0;
    for (int v = 0; v < n; v++) total += has_loop(v) ? 1 : 0;
    return total;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; u++)
        for (int v = u + 1; v < n; v++)
            if (adj[u].test(v)) out.emplace_back(u, v);
    return out;
}

std::vector<std::pair<int, int>> TargetGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; u++)
        for (int v = u + 1; v < n; v++)
            if (adj[u].test(v)) out.emplace_back(u, v);
    return out;
}

std::vector<int> TargetGraph::loops() const {
    std::vector<int> out;
    for (int v = 0; v < n; v++)
        if (has_loop(v)) out.push_back(v);
    return out;
}

SimpleGraph complete_graph(int n) {
    SimpleGraph g(n);
    for (int u = 0; u < n; u++)
        for (int v = u + 1; v < n; v++) g.add_edge(u, v);
    return g;
}

SimpleGraph complete_bipartite(int a, int b) {
    if (a < 0 || b < 0) throw InvalidParameter("negative part size");
    SimpleGraph g(a + b);
    for (int u = 0; u < a; u++)
        for (int v = a; v < a + b; v++) g.add_edge(u, v);
    return g;
}

SimpleGraph cycle_graph(int n) {
    if (n < 3) throw InvalidParameter("a cycle needs at least 3 vertices");
    SimpleGraph g(n);
    for (int v = 0; v < n; v++) g.add_edge(v, (v + 1) % n);
    return g;
}

SimpleGraph path_graph(int n) {
    SimpleGraph g(n);
    for (int v = 0; v + 1 < n; v++) g.add_edge(v, v + 1);
    return g;
}

SimpleGraph empty_graph(int n) { return SimpleGraph(n); }

SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b) {
    SimpleGraph g(a.n + b.n);
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(a.n + u, a.n + v);
    return g;
}

SimpleGraph disjoint_double(const SimpleGraph& g) {
    SimpleGraph d(2 * g.n);
    for (auto [u, v] : g.edges()) {
        d.add_edge(2 * u, 2 * v);
        d.add_edge(2 * u + 1, 2 * v + 1);
    }
    return d;
}

SimpleGraph bipartite_double(const SimpleGraph& g) {
    SimpleGraph d(2 * g.n);
    for (auto [u, v] : g.edges()) {
        d.add_edge(2 * u, 2 * v + 1);
        d.add_edge(2 * u + 1, 2 * v);
    }
    return d;
}

TargetGraph as_target(const SimpleGraph& g) {
    TargetGraph t(g.n);
    t.adj = g.adj;
    return t;
}

TargetGraph complete_looped_target(int n) {
    TargetGraph t(n);
    for (int u = 0; u < n; u++)
        for (int v = u; v < n; v++) t.add_edge(u, v);
    return t;
}

TargetGraph independence_target() {
    TargetGraph t(2);
    t.add_edge(0, 0);
    t.add_edge(0, 1);
    return t;
}

// ----- connectivity & bipartiteness ----------------------------------------

std::vector<Bits> components(const SimpleGraph& g) {
    std::vector<Bits> out;
    Bits seen;
    for (int s = 0; s < g.n; s++) {
        if (seen.test(s)) continue;
        Bits comp;
        comp.set(s);
        Bits frontier = comp;
        while (frontier.any()) {
            Bits next;
            Bits f = frontier;
            for (int v = f.pop_lowest(); v >= 0; v = f.pop_lowest()) next |= g.adj[v];
            frontier = next & ~comp;
            comp |= next;
        }
        seen |= comp;
        out.push_back(comp);
    }
    return out;
}

bool is_connected(const SimpleGraph& g) { return g.n <= 1 || components(g).size() == 1; }

namespace {

// Cuts an odd closed walk down to a simple odd cycle: whenever a vertex
// repeats, the walk splits into two closed walks whose lengths sum to the
// original odd length, so one of them is odd; keep that one and repeat.
std::vector<int> trim_to_odd_cycle(std::vector<int> walk) {
    // walk[0..k-1] describes a closed walk walk[0] -> ... -> walk[k-1] -> walk[0]
    for (;;) {
        std::map<int, int> pos;
        bool split = false;
        for (int i = 0; i < (int)walk.size() && !split; i++) {
            auto [it, fresh] = pos.emplace(walk[i], i);
            if (fresh) continue;
            int j = it->second;  // walk[j] == walk[i], j < i
            std::vector<int> inner(walk.begin() + j, walk.begin() + i);
            std::vector<int> outer;
            outer.insert(outer.end(), walk.begin(), walk.begin() + j);
            outer.insert(outer.end(), walk.begin() + i, walk.end());
            walk = (inner.size() % 2 == 1) ? inner : outer;
            split = true;
        }
        if (!split) return walk;
    }
}

template <typename Graph>
BipartiteCheck check_bipartite_impl(const Graph& g) {
    BipartiteCheck r;
    std::vector<int> side(g.n, -1), parent(g.n, -1);
    for (int v = 0; v < g.n; v++) {
        if constexpr (std::is_same_v<Graph, TargetGraph>) {
            if (g.has_loop(v)) {
                r.odd_cycle = {v};
                return r;
            }
        }
    }
    auto path_to_root = [&](int v) {
        std::vector<int> p;
        for (; v != -1; v = parent[v]) p.push_back(v);
        return p;  // v, ..., root
    };
    for (int s = 0; s < g.n; s++) {
        if (side[s] != -1) continue;
        side[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            Bits row = g.adj[u];
            for (int v = row.pop_lowest(); v >= 0; v = row.pop_lowest()) {
                if (v == u) continue;
                if (side[v] == -1) {
                    side[v] = 1 - side[u];
                    parent[v] = u;
                    q.push(v);
                } else if (side[v] == side[u]) {
                    // odd closed walk: u -> root -> v plus the edge vu
                    std::vector<int> pu = path_to_root(u);
                    std::vector<int> pv = path_to_root(v);
                    std::reverse(pu.begin(), pu.end());  // root, ..., u
                    std::vector<int> walk = pu;          // root .. u
                    walk.insert(walk.end(), pv.begin(), pv.end() - 1);  // v .. (excl root)
                    r.odd_cycle = trim_to_odd_cycle(std::move(walk));
                    return r;
                }
            }
        }
    }
    r.bipartite = true;
    r.side = std::move(side);
    return r;
}

}  // namespace

BipartiteCheck check_bipartite(const SimpleGraph& g) { return check_bipartite_impl(g); }
BipartiteCheck check_bipartite(const TargetGraph& g) { return check_bipartite_impl(g); }

std::optional<int> odd_girth(const SimpleGraph& g) {
    // A same-level BFS edge closes an odd walk of length 2*level + 1, and the
    // minimum of these over all roots is the length of a shortest odd cycle.
    int best = -1;
    std::vector<int> dist(g.n);
    for (int s = 0; s < g.n; s++) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            Bits row = g.adj[u];
            for (int v = row.pop_lowest(); v >= 0; v = row.pop_lowest()) {
                if (dist[v] == -1) {
                    dist[v] = dist[u] + 1;
                    q.push(v);
                } else if (dist[v] == dist[u]) {
                    int len = 2 * dist[u] + 1;
                    if (best == -1 || len < best) best = len;
                }
            }
        }
    }
    if (best == -1) return std::nullopt;
    return best;
}

SimpleGraph induced_subgraph(const SimpleGraph& g, const Bits& keep) {
    std::vector<int> idx(g.n, -1);
    int m = 0;
    for (int v = 0; v < g.n; v++)
        if (keep.test(v)) idx[v] = m++;
    SimpleGraph out(m);
    for (auto [u, v] : g.edges())
        if (keep.test(u) && keep.test(v)) out.add_edge(idx[u], idx[v]);
    return out;
}

// ----- canonical codes ------------------------------------------------------

namespace {

// Branch-and-bound search for the least upper-triangle bitstring.  Positions
// are filled left to right; the bits contributed by position p are the column
// above it: (0,p), (1,p), ..., (p-1,p), plus the diagonal bit (p,p) when
// loops are in play.  Candidates must come from the position's vertex class.
struct CanonSearch {
    int n;
    bool with_diagonal;
    const std::vector<Bits>* adj;
    std::vector<int> class_of;       // vertex -> class id
    std::vector<int> class_at;      // position -> class id
    int total_bits = 0;
    std::uint64_t best = ~std::uint64_t{0};
    std::vector<int> order;
    std::vector<char> used;

    std::uint64_t run() {
        order.assign(n, -1);
        used.assign(n, 0);
        total_bits = with_diagonal ? n * (n + 1) / 2 : n * (n - 1) / 2;
        if (total_bits == 0) return 0;
        best = (total_bits == 64) ? ~std::uint64_t{0}
                                  : ((std::uint64_t{1} << total_bits) - 1);
        dfs(0, 0, 0);
        return best;
    }

    void dfs(int p, std::uint64_t prefix, int prefix_len) {
        if (p == n) {
            if (prefix < best) best = prefix;
            return;
        }
        int block_len = p + (with_diagonal ? 1 : 0);
        std::vector<std::pair<std::uint64_t, int>> cands;
        for (int v = 0; v < n; v++) {
            if (used[v] || class_of[v] != class_at[p]) continue;
            std::uint64_t block = 0;
            for (int j = 0; j < p; j++) block = (block << 1) | ((*adj)[order[j]].test(v) ? 1 : 0);
            if (with_diagonal) block = (block << 1) | ((*adj)[v].test(v) ? 1 : 0);
            cands.emplace_back(block, v);
        }
        std::sort(cands.begin(), cands.end());
        for (auto [block, v] : cands) {
            std::uint64_t next = (prefix << block_len) | block;
            int next_len = prefix_len + block_len;
            if (next > (best >> (total_bits - next_len))) continue;
            order[p] = v;
            used[v] = 1;
            dfs(p + 1, next, next_len);
            used[v] = 0;
            order[p] = -1;
        }
    }
};

std::uint64_t canonical_impl(int n, const std::vector<Bits>& adj, bool with_diagonal,
                             const std::vector<long>& vertex_key) {
    if (n > 10) throw ResourceLimit("canonical form capped at 10 vertices");
    // class ids follow the sorted order of vertex keys
    std::vector<long> keys = vertex_key;
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    CanonSearch cs;
    cs.n = n;
    cs.with_diagonal = with_diagonal;
    cs.adj = &adj;
    cs.class_of.resize(n);
    for (int v = 0; v < n; v++)
        cs.class_of[v] =
            (int)(std::lower_bound(keys.begin(), keys.end(), vertex_key[v]) - keys.begin());
    std::vector<int> sorted_classes = cs.class_of;
    std::sort(sorted_classes.begin(), sorted_classes.end());
    cs.class_at = sorted_classes;
    return cs.run();
}

}  // namespace

std::uint64_t canonical_code(const SimpleGraph& g) {
    std::vector<long> key(g.n);
    for (int v = 0; v < g.n; v++) key[v] = g.degree(v);
    return canonical_impl(g.n, g.adj, false, key);
}

std::uint64_t canonical_code(const TargetGraph& g) {
    std::vector<long> key(g.n);
    for (int v = 0; v < g.n; v++) key[v] = 2 * g.degree(v) + (g.has_loop(v) ? 1 : 0);
    return canonical_impl(g.n, g.adj, true, key);
}

bool isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
    if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.n; v++) da.push_back(a.degree(v));
    for (int v = 0; v < b.n; v++) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return canonical_code(a) == canonical_code(b);
}

bool isomorphic(const TargetGraph& a, const TargetGraph& b) {
    if (a.n != b.n || a.edge_count() != b.edge_count() || a.loop_count() != b.loop_count())
        return false;
    std::vector<long> da, db;
    for (int v = 0; v < a.n; v++) da.push_back(2 * a.degree(v) + (a.has_loop(v) ? 1 : 0));
    for (int v = 0; v < b.n; v++) db.push_back(2 * b.degree(v) + (b.has_loop(v) ? 1 : 0));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return canonical_code(a) == canonical_code(b);
}

// ----- enumeration ----------------------------------------------------------

namespace {

// Emits every labeled d-regular graph exactly once: vertices are completed in
// index order, and the vertex being completed only picks neighbors with a
// higher index, so each graph has a unique build sequence.
void regular_rec(int n, int d, std::vector<int>& residual, SimpleGraph& g,
                 const std::function<void(const SimpleGraph&)>& emit) {
    int v = -1;
    for (int i = 0; i < n; i++)
        if (residual[i] > 0) {
            v = i;
            break;
        }
    if (v == -1) {
        emit(g);
        return;
    }
    std::vector<int> pool;
    for (int u = v + 1; u < n; u++)
        if (residual[u] > 0 && !g.has_edge(v, u)) pool.push_back(u);
    int need = residual[v];
    if ((int)pool.size() < need) return;
    std::vector<int> pick;
    // choose `need` neighbors from pool, in increasing order
    auto choose = [&](auto&& self, int start) -> void {
        if ((int)pick.size() == need) {
            for (int u : pick) {
                g.adj[v].set(u);
                g.adj[u].set(v);
                residual[u]--;
            }
            int saved = residual[v];
            residual[v] = 0;
            regular_rec(n, d, residual, g, emit);
            residual[v] = saved;
            for (int u : pick) {
                g.adj[v].reset(u);
                g.adj[u].reset(v);
                residual[u]++;
            }
            return;
        }
        for (int i = start; i < (int)pool.size(); i++) {
            if ((int)pool.size() - i < need - (int)pick.size()) break;
            pick.push_back(pool[i]);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    choose(choose, 0);
}

}  // namespace

std::vector<SimpleGraph> enumerate_regular(int n, int d) {
    if (n < 1) throw InvalidParameter("regular enumeration needs n >= 1");
    if (n > 10) throw ResourceLimit("regular enumeration capped at 10 vertices");
    if (d < 0 || d >= n) throw InvalidParameter("regular enumeration needs 0 <= d < n");
    if ((n * d) % 2 == 1) return {};  // no graph has an odd degree sum
    std::map<std::uint64_t, SimpleGraph> classes;
    std::vector<int> residual(n, d);
    SimpleGraph g(n);
    regular_rec(n, d, residual, g, [&](const SimpleGraph& found) {
        classes.emplace(canonical_code(found), found);
    });
    std::vector<SimpleGraph> out;
    out.reserve(classes.size());
    for (auto& [code, cls] : classes) out.push_back(std::move(cls));
    return out;
}

std::vector<SimpleGraph> enumerate_simple_classes(int n) {
    if (n < 0) throw InvalidParameter("negative vertex count");
    if (n > 6) throw ResourceLimit("simple-class enumeration capped at 6 vertices");
    int bits = n * (n - 1) / 2;
    std::map<std::uint64_t, SimpleGraph> classes;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); mask++) {
        SimpleGraph g(n);
        int b = 0;
        for (int u = 0; u < n; u++)
            for (int v = u + 1; v < n; v++, b++)
                if ((mask >> b) & 1) g.add_edge(u, v);
        std::uint64_t code = canonical_code(g);
        classes.emplace(code, std::move(g));
    }
    std::vector<SimpleGraph> out;
    for (auto& [code, cls] : classes) out.push_back(std::move(cls));
    return out;
}

std::vector<TargetGraph> enumerate_target_classes(int n) {
    if (n < 0) throw InvalidParameter("negative vertex count");
    if (n > 5) throw ResourceLimit("target-class enumeration capped at 5 vertices");
    int bits = n * (n + 1) / 2;
    std::map<std::uint64_t, TargetGraph> classes;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); mask++) {
        TargetGraph g(n);
        int b = 0;
        for (int u = 0; u < n; u++)
            for (int v = u; v < n; v++, b++)
                if ((mask >> b) & 1) g.add_edge(u, v);
        std::uint64_t code = canonical_code(g);
        classes.emplace(code, std::move(g));
    }
    std::vector<TargetGraph> out;
    for (auto& [code, cls] : classes) out.push_back(std::move(cls));
    return out;
}

}  // namespace homgt
