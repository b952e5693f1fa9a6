#include "homgt/coloring.hpp"

#include <algorithm>
#include <random>

#include "homgt/errors.hpp"

namespace homgt {

Int BinomialPolynomial::eval(unsigned long q) const {
    Int total = 0;
    for (size_t i = 0; i < coeff.size(); i++) total += coeff[i] * binomial(q, (unsigned long)i);
    return total;
}

BinomialPolynomial chromatic_binomial(const SimpleGraph& g, std::uint64_t dc_budget) {
    return BinomialPolynomial{surjective_counts(g, g.n, dc_budget)};
}

ProfilePair surjective_profile_pair(const SimpleGraph& g, std::uint64_t dc_budget) {
    ProfilePair pp;
    pp.disjoint = surjective_counts(disjoint_double(g), 2 * g.n, dc_budget);
    pp.crossed = surjective_counts(bipartite_double(g), 2 * g.n, dc_budget);
    return pp;
}

CoefficientCompare verify_coefficient_compare(const SimpleGraph& g, std::uint64_t dc_budget) {
    std::optional<int> t = odd_girth(g);
    if (!t) throw InvalidParameter("coefficient comparison needs a non-bipartite source");
    CoefficientCompare cc;
    cc.n = g.n;
    cc.odd_girth = *t;
    cc.boundary = 2 * g.n - *t + 1;
    cc.profiles = surjective_profile_pair(g, dc_budget);
    cc.equality_ok = true;
    for (int i = cc.boundary + 1; i <= 2 * g.n; i++)
        if (cc.profiles.disjoint[i] != cc.profiles.crossed[i]) cc.equality_ok = false;
    cc.strict_ok = cc.profiles.disjoint[cc.boundary] < cc.profiles.crossed[cc.boundary];
    return cc;
}

DominanceCertificate dominance_certificate(const SimpleGraph& g,
                                           const std::vector<unsigned long>& eval_points,
                                           std::uint64_t dc_budget) {
    DominanceCertificate cert;
    cert.profiles = surjective_profile_pair(g, dc_budget);
    for (int i = 0; i <= 2 * g.n; i++) {
        int s = cmp(cert.profiles.crossed[i], cert.profiles.disjoint[i]);
        if (s != 0) {
            cert.top_index = i;
            cert.top_sign = s < 0 ? -1 : 1;
        }
    }
    unsigned long nn = 2 * (unsigned long)g.n;
    cert.uniform_bound = int_pow(Int(nn), nn + 2);
    if (std::optional<int> t = odd_girth(g)) {
        unsigned long a = nn - (unsigned long)*t;  // 2N - t
        cert.girth_bound = Int(a + 1) * Int(a + 1) * int_pow(Int(a), nn) + Int(a);
    }
    for (unsigned long q : eval_points) {
        Int diff = 0;
        for (int i = 0; i <= 2 * g.n; i++)
            diff += (cert.profiles.crossed[i] - cert.profiles.disjoint[i]) *
                    binomial(q, (unsigned long)i);
        cert.evaluations.emplace_back(q, diff);
    }
    return cert;
}

// ----- cycle bounds on violated edges ----------------------------------------

namespace {

// Longest cycle and longest odd cycle (0 when absent) in the spanning
// subgraph of g holding the masked edges, by depth-first enumeration of
// simple paths from each cycle's minimum vertex.
struct CycleLengths {
    int longest = 0;
    int longest_odd = 0;
};

struct CycleSearch {
    std::vector<Bits> adj;
    int root = 0;
    Bits on_path;
    CycleLengths result;

    void dfs(int v, int len) {
        Bits cand = adj[v];
        if (len >= 3 && cand.test(root)) {
            result.longest = std::max(result.longest, len);
            if (len % 2 == 1) result.longest_odd = std::max(result.longest_odd, len);
        }
        for (int u = cand.pop_lowest(); u >= 0; u = cand.pop_lowest()) {
            if (u <= root || on_path.test(u)) continue;
            on_path.set(u);
            dfs(u, len + 1);
            on_path.reset(u);
        }
    }
};

CycleLengths masked_cycles(const std::vector<std::pair<int, int>>& edges, int n,
                           std::uint64_t mask) {
    CycleSearch cs;
    cs.adj.assign(n, Bits{});
    for (size_t k = 0; k < edges.size(); k++)
        if ((mask >> k) & 1) {
            cs.adj[edges[k].first].set(edges[k].second);
            cs.adj[edges[k].second].set(edges[k].first);
        }
    for (int r = 0; r < n; r++) {
        cs.root = r;
        cs.on_path = Bits{};
        cs.on_path.set(r);
        cs.dfs(r, 1);
    }
    return cs.result;
}

// Violated-edge mask of the pair labeling of a proper coloring of a doubled
// graph: the straight pairs are proper by assumption, so on the disjoint
// doubling an edge is violated when a cross pair collides, and on the
// crossed doubling when a straight pair collides.
std::uint64_t violated_mask(const std::vector<std::pair<int, int>>& edges,
                            const std::vector<int>& img, bool crossed_side) {
    std::uint64_t mask = 0;
    for (size_t k = 0; k < edges.size(); k++) {
        auto [u, v] = edges[k];
        bool viol = crossed_side ? img[2 * u] == img[2 * v] || img[2 * u + 1] == img[2 * v + 1]
                                 : img[2 * u] == img[2 * v + 1] || img[2 * u + 1] == img[2 * v];
        if (viol) mask |= std::uint64_t{1} << k;
    }
    return mask;
}

bool uses_all_colors(const std::vector<int>& img, int colors) {
    std::uint64_t seen = 0;
    for (int c : img) seen |= std::uint64_t{1} << c;
    return seen == (colors >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << colors) - 1);
}

}  // namespace

CycleBoundReport verify_cycle_violation_bounds(const SimpleGraph& g, int colors,
                                               std::uint64_t max_enumerate,
                                               std::uint64_t samples, std::uint64_t seed) {
    if (colors < 0 || colors >= 63) throw InvalidParameter("palette size out of range");
    std::vector<std::pair<int, int>> edges = g.edges();
    if (edges.size() > 20) throw ResourceLimit("cycle bound scan capped at 20 source edges");
    CycleBoundReport rep;
    int max_len = 2 * g.n - colors + 1;
    int max_odd = 2 * g.n - colors;

    std::vector<CycleLengths> table(std::size_t{1} << edges.size());
    std::vector<signed char> known(table.size(), 0);
    auto lengths_of = [&](std::uint64_t mask) {
        if (!known[mask]) {
            table[mask] = masked_cycles(edges, g.n, mask);
            known[mask] = 1;
        }
        return table[mask];
    };
    auto check = [&](const std::vector<int>& img, bool crossed_side) {
        CycleLengths cl = lengths_of(violated_mask(edges, img, crossed_side));
        if (cl.longest > max_len) rep.pass = false;
        if (!crossed_side && cl.longest_odd > max_odd) rep.pass = false;
    };

    TargetGraph palette = as_target(complete_graph(std::max(colors, 1)));
    std::mt19937_64 rng(seed);
    for (bool crossed_side : {false, true}) {
        SimpleGraph doubled = crossed_side ? bipartite_double(g) : disjoint_double(g);
        std::uint64_t& checked = crossed_side ? rep.checked_crossed : rep.checked_disjoint;
        bool& exhaustive = crossed_side ? rep.exhaustive_crossed : rep.exhaustive_disjoint;
        if (count_colorings(doubled, (unsigned long)colors) <= Int(max_enumerate)) {
            exhaustive = true;
            enumerate_hom(doubled, palette, [&](const std::vector<int>& img) {
                if (uses_all_colors(img, colors)) {
                    checked++;
                    check(img, crossed_side);
                }
                return true;
            });
        } else {
            std::uniform_int_distribution<int> pick(0, colors - 1);
            std::vector<int> img(doubled.n);
            std::uint64_t attempts = 200 * samples;
            while (checked < samples && attempts-- > 0) {
                for (int& c : img) c = pick(rng);
                bool proper = true;
                for (auto [u, v] : doubled.edges())
                    if (img[u] == img[v]) {
                        proper = false;
                        break;
                    }
                if (!proper || !uses_all_colors(img, colors)) continue;
                checked++;
                check(img, crossed_side);
            }
        }
    }
    return rep;
}

}  // namespace homgt
