#include "homgt/hom.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <string>
#include <unordered_map>

#include "homgt/errors.hpp"
#include "homgt/target.hpp"

namespace homgt {

// ----- placement order and static per-order data ----------------------------

namespace {

// Vertices of one connected component, ordered so that each vertex (after the
// first) maximizes the number of already-placed neighbors; ties prefer higher
// degree, then lower index.
std::vector<int> component_order(const SimpleGraph& g, const Bits& comp) {
    std::vector<int> ord;
    std::vector<int> placed_nbrs(g.n, 0);
    Bits unplaced = comp;
    while (unplaced.any()) {
        int best = -1;
        Bits scan = unplaced;
        for (int v = scan.pop_lowest(); v >= 0; v = scan.pop_lowest()) {
            if (best == -1 || placed_nbrs[v] > placed_nbrs[best] ||
                (placed_nbrs[v] == placed_nbrs[best] && g.degree(v) > g.degree(best)))
                best = v;
        }
        ord.push_back(best);
        unplaced.reset(best);
        Bits nb = g.adj[best] & unplaced;
        for (int u = nb.pop_lowest(); u >= 0; u = nb.pop_lowest()) placed_nbrs[u]++;
    }
    return ord;
}

struct Block {
    std::vector<int> ord;
    std::vector<std::vector<int>> later_nbrs;  // positions after p adjacent to ord[p]
    std::vector<char> tail_indep;              // ord[p..] spans no edge of g

    Block(const SimpleGraph& g, std::vector<int> order) : ord(std::move(order)) {
        int k = (int)ord.size();
        later_nbrs.resize(k);
        tail_indep.assign(k + 1, 1);
        for (int p = 0; p < k; p++)
            for (int q = p + 1; q < k; q++)
                if (g.has_edge(ord[p], ord[q])) later_nbrs[p].push_back(q);
        for (int p = k - 1; p >= 0; p--)
            tail_indep[p] = tail_indep[p + 1] && later_nbrs[p].empty();
    }
};

struct NodeBudget {
    std::uint64_t limit;
    std::uint64_t used = 0;
    void bump() {
        if (++used > limit) throw ResourceLimit("homomorphism search budget exhausted");
    }
};

// Counts homomorphisms of one ordered block; weights (already scaled to
// integers) are optional.
struct BlockCount {
    BlockCount(const TargetGraph& h_, const Block& b_, NodeBudget& budget_)
        : h(h_), b(b_), budget(budget_) {}

    const TargetGraph& h;
    const Block& b;
    NodeBudget& budget;
    const std::vector<Int>* lam = nullptr;  // integer-scaled weights, or null
    std::vector<Bits> dom;
    std::vector<std::pair<int, Bits>> undo;
    std::vector<Int> placed_weight;  // product of weights of placed vertices
    Int total = 0;

    Int run() {
        int k = (int)b.ord.size();
        dom.assign(k, Bits::first_n(h.n));
        placed_weight.assign(k + 1, 1);
        dfs(0);
        return total;
    }

    Int domain_weight(const Bits& d) const {
        if (!lam) return d.count();
        Int s = 0;
        Bits t = d;
        for (int w = t.pop_lowest(); w >= 0; w = t.pop_lowest()) s += (*lam)[w];
        return s;
    }

    void dfs(int p) {
        int k = (int)b.ord.size();
        if (b.tail_indep[p]) {
            Int prod = placed_weight[p];
            for (int q = p; q < k && prod != 0; q++) prod *= domain_weight(dom[q]);
            total += prod;
            return;
        }
        Bits cand = dom[p];
        for (int w = cand.pop_lowest(); w >= 0; w = cand.pop_lowest()) {
            budget.bump();
            if (lam && (*lam)[w] == 0) continue;
            size_t mark = undo.size();
            bool dead = false;
            for (int q : b.later_nbrs[p]) {
                undo.emplace_back(q, dom[q]);
                dom[q] &= h.adj[w];
                if (dom[q].none()) {
                    dead = true;
                    break;
                }
            }
            if (!dead) {
                if (lam) placed_weight[p + 1] = placed_weight[p] * (*lam)[w];
                dfs(p + 1);
            }
            while (undo.size() > mark) {
                dom[undo.back().first] = undo.back().second;
                undo.pop_back();
            }
        }
    }
};

bool is_complete_loopless(const TargetGraph& h) {
    Bits all = Bits::first_n(h.n);
    for (int v = 0; v < h.n; v++) {
        Bits expect = all;
        expect.reset(v);
        if (h.adj[v] != expect) return false;
    }
    return true;
}

// Scales rationals to integers by their common denominator; returns the
// denominator used.
Int scale_weights(const std::vector<Rat>& weights, std::vector<Int>& out) {
    Int d = 1;
    for (const Rat& w : weights) {
        if (w < 0) throw InvalidParameter("weights must be nonnegative");
        mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), w.get_den().get_mpz_t());
    }
    out.clear();
    for (const Rat& w : weights) out.push_back(Int(w.get_num() * (d / w.get_den())));
    return d;
}

}  // namespace

// ----- public counting entry points ----------------------------------------

Int count_hom(const SimpleGraph& g, const TargetGraph& h, std::uint64_t node_budget) {
    if (g.n == 0) return 1;
    if (h.n == 0) return 0;
    if (is_complete_loopless(h)) return count_colorings(g, (unsigned long)h.n);
    NodeBudget budget{node_budget};
    Int result = 1;
    for (const Bits& comp : components(g)) {
        Block block(g, component_order(g, comp));
        BlockCount run{h, block, budget};
        result *= run.run();
        if (result == 0) return result;
    }
    return result;
}

Rat count_hom_weighted(const SimpleGraph& g, const TargetGraph& h,
                       const std::vector<Rat>& weights, std::uint64_t node_budget) {
    if ((int)weights.size() != h.n)
        throw InvalidParameter("need one weight per target vertex");
    if (g.n == 0) return 1;
    if (h.n == 0) return 0;
    std::vector<Int> lam;
    Int denom = scale_weights(weights, lam);
    NodeBudget budget{node_budget};
    Int result = 1;
    for (const Bits& comp : components(g)) {
        Block block(g, component_order(g, comp));
        BlockCount run{h, block, budget};
        run.lam = &lam;
        result *= run.run();
        if (result == 0) break;
    }
    Rat out(result, int_pow(denom, (unsigned long)g.n));
    out.canonicalize();
    return out;
}

void enumerate_hom(const SimpleGraph& g, const TargetGraph& h,
                   const std::function<bool(const std::vector<int>&)>& visit,
                   std::uint64_t node_budget) {
    if (g.n == 0) {
        std::vector<int> empty;
        visit(empty);
        return;
    }
    std::vector<int> identity(g.n);
    for (int v = 0; v < g.n; v++) identity[v] = v;
    Block block(g, identity);
    NodeBudget budget{node_budget};
    std::vector<Bits> dom(g.n, Bits::first_n(h.n));
    std::vector<std::pair<int, Bits>> undo;
    std::vector<int> img(g.n, -1);
    bool stop = false;

    auto dfs = [&](auto&& self, int p) -> void {
        if (stop) return;
        if (p == g.n) {
            if (!visit(img)) stop = true;
            return;
        }
        Bits cand = dom[p];
        for (int w = cand.pop_lowest(); w >= 0 && !stop; w = cand.pop_lowest()) {
            budget.bump();
            size_t mark = undo.size();
            bool dead = false;
            for (int q : block.later_nbrs[p]) {
                undo.emplace_back(q, dom[q]);
                dom[q] &= h.adj[w];
                if (dom[q].none()) {
                    dead = true;
                    break;
                }
            }
            if (!dead) {
                img[p] = w;
                self(self, p + 1);
                img[p] = -1;
            }
            while (undo.size() > mark) {
                dom[undo.back().first] = undo.back().second;
                undo.pop_back();
            }
        }
    };
    dfs(dfs, 0);
}

// ----- chromatic polynomial via deletion-contraction -------------------------

namespace {

using Poly = std::vector<Int>;  // ascending coefficients

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); i++)
        for (size_t j = 0; j < b.size(); j++) r[i + j] += a[i] * b[j];
    return r;
}

void poly_sub(Poly& a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Int(0));
    for (size_t i = 0; i < b.size(); i++) a[i] -= b[i];
}

// x * (x - 1)^(n-1), the chromatic polynomial of any tree on n vertices
Poly tree_poly(int n) {
    Poly r{Int(0), Int(1)};  // x
    Poly base{Int(-1), Int(1)};
    for (int i = 0; i < n - 1; i++) r = poly_mul(r, base);
    return r;
}

std::string graph_key(const SimpleGraph& g) {
    std::string key;
    key.reserve(8 * (g.n + 1));
    auto put = [&](std::uint64_t x) { key.append((const char*)&x, 8); };
    put((std::uint64_t)g.n);
    for (const Bits& row : g.adj) put(row.w[0]);
    return key;
}

SimpleGraph delete_edge(const SimpleGraph& g, int u, int v) {
    SimpleGraph out = g;
    out.adj[u].reset(v);
    out.adj[v].reset(u);
    return out;
}

SimpleGraph contract_edge(const SimpleGraph& g, int u, int v) {
    // merge v into u, drop index v
    SimpleGraph out(g.n - 1);
    auto remap = [v](int w) { return w < v ? w : w - 1; };
    for (auto [a, b] : g.edges()) {
        if (a == u && b == v) continue;
        int x = (a == v) ? u : a;
        int y = (b == v) ? u : b;
        x = remap(x);
        y = remap(y);
        if (x == y) continue;
        if (x > y) std::swap(x, y);
        if (!out.has_edge(x, y)) out.add_edge(x, y);
    }
    return out;
}

struct DcCtx {
    std::unordered_map<std::string, Poly> memo;
    std::uint64_t nodes = 0;
    std::uint64_t limit;
};

Poly dc(const SimpleGraph& g, DcCtx& ctx) {
    if (++ctx.nodes > ctx.limit)
        throw ResourceLimit("deletion-contraction budget exhausted");
    if (g.n > 64) throw ResourceLimit("deletion-contraction capped at 64 vertices");
    int m = g.edge_count();
    if (m == 0) {
        Poly r(g.n + 1, Int(0));
        r[g.n] = 1;
        return r;
    }
    auto comps = components(g);
    if (comps.size() > 1) {
        Poly r{Int(1)};
        for (const Bits& c : comps) r = poly_mul(r, dc(induced_subgraph(g, c), ctx));
        return r;
    }
    if (m == g.n - 1) return tree_poly(g.n);
    std::string key = graph_key(g);
    auto it = ctx.memo.find(key);
    if (it != ctx.memo.end()) return it->second;
    auto [u, v] = g.edges().front();
    Poly r = dc(delete_edge(g, u, v), ctx);
    poly_sub(r, dc(contract_edge(g, u, v), ctx));
    ctx.memo.emplace(std::move(key), r);
    return r;
}

Int poly_eval(const Poly& p, const Int& x) {
    Int r = 0;
    for (size_t i = p.size(); i-- > 0;) r = r * x + p[i];
    return r;
}

}  // namespace

std::vector<Int> chromatic_monomial(const SimpleGraph& g, std::uint64_t dc_budget) {
    DcCtx ctx{{}, 0, dc_budget};
    Poly p = dc(g, ctx);
    p.resize(g.n + 1, Int(0));
    return p;
}

Int count_colorings(const SimpleGraph& g, unsigned long colors, std::uint64_t dc_budget) {
    return poly_eval(chromatic_monomial(g, dc_budget), Int((unsigned long)colors));
}

std::vector<Int> surjective_counts(const SimpleGraph& g, int upto, std::uint64_t dc_budget) {
    if (upto < 0) throw InvalidParameter("palette bound must be nonnegative");
    Poly p = chromatic_monomial(g, dc_budget);
    std::vector<Int> hom(upto + 1);
    for (int j = 0; j <= upto; j++) hom[j] = poly_eval(p, Int((unsigned long)j));
    std::vector<Int> out(upto + 1, Int(0));
    for (int i = 0; i <= upto; i++) {
        if (i > g.n) continue;  // cannot hit more colors than vertices
        Int s = 0;
        for (int j = 0; j <= i; j++) {
            Int term = binomial(i, j) * hom[j];
            if ((i - j) % 2 == 1) term = -term;
            s += term;
        }
        out[i] = s;
    }
    return out;
}

Int count_hom_surjective(const SimpleGraph& g, int colors, std::uint64_t dc_budget) {
    if (colors < 0) throw InvalidParameter("palette size must be nonnegative");
    if (colors > g.n) return 0;
    return surjective_counts(g, colors, dc_budget)[colors];
}

// ----- complete bipartite fast path -----------------------------------------

Rat count_hom_complete_bipartite(int a, int b, const TargetGraph& h,
                                 const std::vector<Rat>& weights) {
    if (a < 1 || b < 1) throw InvalidParameter("complete bipartite parts must be >= 1");
    if ((int)weights.size() != h.n)
        throw InvalidParameter("need one weight per target vertex");
    if (h.n == 0) return 0;
    std::vector<Int> lam;
    Int denom = scale_weights(weights, lam);
    std::map<Bits, Int> wsum_memo;
    auto wsum = [&](const Bits& set) -> const Int& {
        auto it = wsum_memo.find(set);
        if (it != wsum_memo.end()) return it->second;
        Int s = 0;
        Bits t = set;
        for (int w = t.pop_lowest(); w >= 0; w = t.pop_lowest()) s += lam[w];
        return wsum_memo.emplace(set, std::move(s)).first->second;
    };
    Int total = 0;
    auto rec = [&](auto&& self, int depth, const Bits& inter, const Int& wprod) -> void {
        if (depth == a) {
            total += wprod * int_pow(wsum(inter), (unsigned long)b);
            return;
        }
        for (int w = 0; w < h.n; w++) {
            if (lam[w] == 0) continue;
            Bits next = inter & h.adj[w];
            if (next.none()) continue;  // empty common neighborhood contributes 0
            self(self, depth + 1, next, Int(wprod * lam[w]));
        }
    };
    rec(rec, 0, Bits::first_n(h.n), Int(1));
    Rat out(total, int_pow(denom, (unsigned long)(a + b)));
    out.canonicalize();
    return out;
}

Int count_hom_complete_bipartite(int a, int b, const TargetGraph& h) {
    std::vector<Rat> unit(h.n, Rat(1));
    Rat r = count_hom_complete_bipartite(a, b, h, unit);
    return r.get_num();  // unit weights keep the count integral
}

// ----- state systems ---------------------------------------------------------

Rat count_states(const SimpleGraph& g, const StateSystem& sys, std::uint64_t node_budget) {
    if (sys.activities.size() != sys.weights.size())
        throw InvalidParameter("state system needs one weight per activity");
    TargetGraph t = threshold_graph(sys.activities, sys.threshold);
    return count_hom_weighted(g, t, sys.weights, node_budget);
}

}  // namespace homgt
