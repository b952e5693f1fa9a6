#include "homgt/swap.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "homgt/errors.hpp"
#include "homgt/hom.hpp"

namespace homgt {

namespace {

bool in_range(const TargetGraph& h, const std::pair<int, int>& lab) {
    return lab.first >= 0 && lab.first < h.n && lab.second >= 0 && lab.second < h.n;
}

bool edge_ok(const TargetGraph& h, LabelMode mode, const std::pair<int, int>& lu,
             const std::pair<int, int>& lv) {
    switch (mode) {
        case LabelMode::Disjoint:
            return h.has_edge(lu.first, lv.first) && h.has_edge(lu.second, lv.second);
        case LabelMode::Crossed:
            return h.has_edge(lu.first, lv.second) && h.has_edge(lu.second, lv.first);
        case LabelMode::Raw:
            return true;
    }
    return false;
}

}  // namespace

bool labeling_valid(const SimpleGraph& g, const TargetGraph& h, const PairLabeling& p) {
    if ((int)p.labels.size() != g.n) return false;
    for (const auto& lab : p.labels)
        if (!in_range(h, lab)) return false;
    if (p.mode == LabelMode::Raw) return true;
    for (auto [u, v] : g.edges())
        if (!edge_ok(h, p.mode, p.labels[u], p.labels[v])) return false;
    return true;
}

PairLabeling make_labeling(const SimpleGraph& g, const TargetGraph& h,
                           std::vector<std::pair<int, int>> labels, LabelMode mode) {
    PairLabeling p{mode, std::move(labels)};
    if (!labeling_valid(g, h, p)) throw InvalidParameter("pair labeling violates its mode");
    return p;
}

PairLabeling labeling_from_disjoint(const std::vector<int>& image) {
    PairLabeling p;
    p.mode = LabelMode::Disjoint;
    for (size_t v = 0; 2 * v + 1 < image.size(); v++)
        p.labels.emplace_back(image[2 * v], image[2 * v + 1]);
    return p;
}

PairLabeling labeling_from_crossed(const std::vector<int>& image) {
    PairLabeling p = labeling_from_disjoint(image);
    p.mode = LabelMode::Crossed;
    return p;
}

std::vector<std::pair<int, int>> violated_edges(const SimpleGraph& g, const TargetGraph& h,
                                                const PairLabeling& p) {
    std::vector<std::pair<int, int>> out;
    for (auto [u, v] : g.edges()) {
        const auto& lu = p.labels[u];
        const auto& lv = p.labels[v];
        bool safe = h.has_edge(lu.first, lv.first) && h.has_edge(lu.second, lv.second) &&
                    h.has_edge(lu.first, lv.second) && h.has_edge(lu.second, lv.first);
        if (!safe) out.emplace_back(u, v);
    }
    return out;
}

bool has_bsp(const SimpleGraph& g, const TargetGraph& h, const PairLabeling& p) {
    SimpleGraph f(g.n);
    for (auto [u, v] : violated_edges(g, h, p)) f.add_edge(u, v);
    return is_bipartite(f);
}

std::vector<int> canonical_crossing_set(const SimpleGraph& g,
                                        const std::vector<std::pair<int, int>>& edges) {
    SimpleGraph f(g.n);
    for (auto [u, v] : edges) f.add_edge(u, v);
    BipartiteCheck bc = check_bipartite(f);
    if (!bc.bipartite) throw NotBipartite("violated edges contain an odd cycle", bc.odd_cycle);
    // BFS roots are component minima and take side 0, so the side-1 class is
    // exactly the per-component class avoiding the minimum vertex; vertices
    // isolated in f are roots and stay out.
    std::vector<int> w;
    for (int v = 0; v < g.n; v++)
        if (bc.side[v] == 1) w.push_back(v);
    return w;
}

PairLabeling swap_labeling(const PairLabeling& p, const std::vector<int>& w) {
    PairLabeling q = p;
    q.mode = LabelMode::Raw;
    for (int v : w) {
        if (v < 0 || v >= (int)q.labels.size())
            throw InvalidParameter("crossing set vertex out of range");
        std::swap(q.labels[v].first, q.labels[v].second);
    }
    return q;
}

TransportResult transport(const SimpleGraph& g, const TargetGraph& h, const PairLabeling& p) {
    if (p.mode == LabelMode::Raw) throw InvalidParameter("transport needs a moded labeling");
    if (!labeling_valid(g, h, p)) throw InvalidParameter("transport input labeling invalid");
    TransportResult r;
    r.crossing_set = canonical_crossing_set(g, violated_edges(g, h, p));
    r.labeling = swap_labeling(p, r.crossing_set);
    r.labeling.mode = p.mode == LabelMode::Disjoint ? LabelMode::Crossed : LabelMode::Disjoint;
    if (!labeling_valid(g, h, r.labeling))
        throw InternalInconsistency("transported labeling violates the opposite mode");
    return r;
}

// ----- bijection verification -----------------------------------------------

namespace {

std::string label_key(const PairLabeling& p) {
    std::string key;
    key.reserve(2 * p.labels.size());
    for (const auto& [a, b] : p.labels) {
        key.push_back((char)(unsigned char)a);
        key.push_back((char)(unsigned char)b);
    }
    return key;
}

// Sorted keys of the bsp elements of Hom(doubled g, h), decoded to labelings.
std::vector<std::string> collect_bsp(const SimpleGraph& g, const TargetGraph& h, bool crossed,
                                     std::uint64_t max_elements) {
    SimpleGraph doubled = crossed ? bipartite_double(g) : disjoint_double(g);
    std::vector<std::string> keys;
    std::uint64_t seen = 0;
    bool over = false;
    enumerate_hom(doubled, h, [&](const std::vector<int>& img) {
        if (++seen > max_elements) {
            over = true;
            return false;
        }
        PairLabeling p = crossed ? labeling_from_crossed(img) : labeling_from_disjoint(img);
        if (has_bsp(g, h, p)) keys.push_back(label_key(p));
        return true;
    });
    if (over) throw ResourceLimit("homomorphism set exceeds the enumeration budget");
    // lexicographic image order makes the keys arrive sorted
    return keys;
}

PairLabeling key_to_labeling(const std::string& key, LabelMode mode) {
    PairLabeling p;
    p.mode = mode;
    for (size_t i = 0; i + 1 < key.size(); i += 2)
        p.labels.emplace_back((int)(unsigned char)key[i], (int)(unsigned char)key[i + 1]);
    return p;
}

}  // namespace

SwapBijectionReport verify_swap_bijection(const SimpleGraph& g, const TargetGraph& h,
                                          std::uint64_t max_elements) {
    std::vector<std::string> disj = collect_bsp(g, h, false, max_elements);
    std::vector<std::string> cros = collect_bsp(g, h, true, max_elements);
    SwapBijectionReport rep;
    rep.disjoint_count = (long)disj.size();
    rep.crossed_count = (long)cros.size();
    rep.roundtrip_ok = true;
    rep.bijection_ok = true;

    auto member = [](const std::vector<std::string>& set, const std::string& key) {
        return std::binary_search(set.begin(), set.end(), key);
    };
    auto run_direction = [&](const std::vector<std::string>& from,
                             const std::vector<std::string>& to, LabelMode mode) {
        std::vector<std::string> images;
        images.reserve(from.size());
        for (const std::string& key : from) {
            PairLabeling p = key_to_labeling(key, mode);
            TransportResult t = transport(g, h, p);
            std::string img = label_key(t.labeling);
            if (!member(to, img)) rep.bijection_ok = false;
            images.push_back(img);
            TransportResult back = transport(g, h, t.labeling);
            if (label_key(back.labeling) != key || back.labeling.mode != mode)
                rep.roundtrip_ok = false;
        }
        std::sort(images.begin(), images.end());
        if (std::adjacent_find(images.begin(), images.end()) != images.end())
            rep.bijection_ok = false;
    };
    run_direction(disj, cros, LabelMode::Disjoint);
    run_direction(cros, disj, LabelMode::Crossed);
    if (disj.size() != cros.size()) rep.bijection_ok = false;
    return rep;
}

// ----- exhaustive definition check ------------------------------------------

bool disjoint_homs_all_bsp(const SimpleGraph& g, const TargetGraph& h,
                           std::uint64_t max_pairs) {
    if (is_bipartite(g)) return true;  // every subgraph is bipartite
    std::vector<std::pair<int, int>> edges = g.edges();
    int m = (int)edges.size();

    // collect Hom(g, h) as byte strings
    std::vector<std::string> homs;
    enumerate_hom(g, h, [&](const std::vector<int>& img) {
        std::string key;
        key.reserve(img.size());
        for (int x : img) key.push_back((char)(unsigned char)x);
        homs.push_back(std::move(key));
        return true;
    });
    std::uint64_t count = homs.size();
    if (count > 1 && count * (count - 1) / 2 > max_pairs)
        throw ResourceLimit("pair scan exceeds the budget");

    // bipartiteness of each violated-edge mask, memoized when masks are small
    std::vector<signed char> memo;
    if (m <= 20) memo.assign(std::size_t{1} << m, -1);
    auto mask_bipartite = [&](std::uint64_t mask) {
        SimpleGraph f(g.n);
        for (int k = 0; k < m; k++)
            if ((mask >> k) & 1) f.add_edge(edges[k].first, edges[k].second);
        return is_bipartite(f);
    };

    auto pair_violated = [&](const std::string& f0, const std::string& f1, int k) {
        auto [u, v] = edges[k];
        return !h.has_edge((unsigned char)f0[u], (unsigned char)f1[v]) ||
               !h.has_edge((unsigned char)f1[u], (unsigned char)f0[v]);
    };
    for (size_t i = 0; i < homs.size(); i++)
        for (size_t j = i + 1; j < homs.size(); j++) {
            const std::string& f0 = homs[i];
            const std::string& f1 = homs[j];
            bool ok;
            if (m <= 64) {
                std::uint64_t mask = 0;
                for (int k = 0; k < m; k++)
                    if (pair_violated(f0, f1, k)) mask |= std::uint64_t{1} << k;
                if (!memo.empty()) {
                    signed char& slot = memo[mask];
                    if (slot < 0) slot = mask_bipartite(mask) ? 1 : 0;
                    ok = slot == 1;
                } else {
                    ok = mask_bipartite(mask);
                }
            } else {
                SimpleGraph f(g.n);
                for (int k = 0; k < m; k++)
                    if (pair_violated(f0, f1, k)) f.add_edge(edges[k].first, edges[k].second);
                ok = is_bipartite(f);
            }
            if (!ok) return false;
        }
    return true;
}

}  // namespace homgt
