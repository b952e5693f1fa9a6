#include "homgt/target.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "homgt/errors.hpp"

namespace homgt {

namespace {

// Edge rule of the pair-conflict graph: both coordinates step along edges
// of h while at least one crossed pair is a non-edge.
bool conflict_edge(const TargetGraph& h, int u, int v, int uu, int vv) {
    return h.has_edge(u, uu) && h.has_edge(v, vv) &&
           (!h.has_edge(u, vv) || !h.has_edge(uu, v));
}

}  // namespace

TargetGraph conflict_graph(const TargetGraph& h) {
    long nn = (long)h.n * h.n;
    if (nn > kMaxVertices)
        throw ResourceLimit("conflict graph needs n^2 <= " + std::to_string(kMaxVertices) +
                            " vertices");
    TargetGraph c((int)nn);
    for (int x = 0; x < (int)nn; x++) {
        int u = x / h.n, v = x % h.n;
        for (int y = x; y < (int)nn; y++) {
            int uu = y / h.n, vv = y % h.n;
            if (conflict_edge(h, u, v, uu, vv)) c.add_edge(x, y);
        }
    }
    return c;
}

TargetCertificate certify_target(const TargetGraph& h) {
    TargetCertificate cert;
    BipartiteCheck bc = check_bipartite(conflict_graph(h));
    cert.swap_target = bc.bipartite;
    if (bc.bipartite)
        cert.coloring = std::move(bc.side);
    else
        cert.odd_cycle = std::move(bc.odd_cycle);
    return cert;
}

bool check_certificate(const TargetGraph& h, const TargetCertificate& cert) {
    long nn = (long)h.n * h.n;
    if (cert.swap_target) {
        if ((long)cert.coloring.size() != nn) return false;
        for (int c : cert.coloring)
            if (c != 0 && c != 1) return false;
        for (int x = 0; x < (int)nn; x++)
            for (int y = x; y < (int)nn; y++)
                if (conflict_edge(h, x / h.n, x % h.n, y / h.n, y % h.n) &&
                    cert.coloring[x] == cert.coloring[y])
                    return false;
        return true;
    }
    const std::vector<int>& cyc = cert.odd_cycle;
    if (cyc.empty() || cyc.size() % 2 == 0) return false;
    for (size_t i = 0; i < cyc.size(); i++) {
        int x = cyc[i], y = cyc[(i + 1) % cyc.size()];
        if (x < 0 || x >= nn) return false;
        if (!conflict_edge(h, x / h.n, x % h.n, y / h.n, y % h.n)) return false;
    }
    for (size_t i = 0; i < cyc.size(); i++)
        for (size_t j = i + 1; j < cyc.size(); j++)
            if (cyc[i] == cyc[j]) return false;
    return true;
}

std::optional<std::array<int, 4>> find_alternating_four_circuit(const TargetGraph& h) {
    for (int a = 0; a < h.n; a++)
        for (int b = 0; b < h.n; b++) {
            if (!h.has_edge(a, b)) continue;
            for (int c = 0; c < h.n; c++) {
                if (h.has_edge(b, c)) continue;
                for (int d = 0; d < h.n; d++)
                    if (h.has_edge(c, d) && !h.has_edge(d, a))
                        return std::array<int, 4>{a, b, c, d};
            }
        }
    return std::nullopt;
}

ThresholdRecognition recognize_threshold(const TargetGraph& h) {
    ThresholdRecognition out;
    std::vector<int> order(h.n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return h.degree(a) > h.degree(b); });
    // closed neighborhoods must form a descending chain along the order
    for (int i = 0; i + 1 < h.n; i++) {
        int a = order[i], b = order[i + 1];
        if (h.adj[b].subset_of(h.adj[a])) continue;
        // chain broken: |N(a)| >= |N(b)| and N(b) is not inside N(a), so both
        // difference sets are nonempty and give an alternating four-circuit
        Bits only_b = h.adj[b] & ~h.adj[a];
        Bits only_a = h.adj[a] & ~h.adj[b];
        int x = only_a.lowest();
        int y = only_b.lowest();
        out.four_circuit = {a, x, b, y};
        if (!(h.has_edge(a, x) && h.has_edge(b, y) && !h.has_edge(x, b) && !h.has_edge(y, a)))
            throw InternalInconsistency("four-circuit witness construction failed");
        return out;
    }
    out.is_threshold = true;
    out.rep.threshold = 0;
    out.rep.order = order;
    for (int i = 0; i < h.n; i++)
        out.rep.weights.push_back(Rat(i + 1) - Rat(h.degree(order[i])));
    // representation invariant: adjacency (including loops) matches the
    // weight-sum rule under the recorded order
    for (int i = 0; i < h.n; i++)
        for (int j = i; j < h.n; j++) {
            bool adj = h.has_edge(order[i], order[j]);
            bool rule = out.rep.weights[i] + out.rep.weights[j] <= out.rep.threshold;
            if (adj != rule)
                throw InternalInconsistency("threshold representation invariant failed");
        }
    return out;
}

TargetGraph threshold_graph(const std::vector<Rat>& weights, const Rat& threshold) {
    if (weights.empty()) throw InvalidParameter("threshold graph needs at least one weight");
    int n = (int)weights.size();
    TargetGraph t(n);
    for (int i = 0; i < n; i++)
        for (int j = i; j < n; j++)
            if (weights[i] + weights[j] <= threshold) t.add_edge(i, j);
    return t;
}

std::vector<TargetGraph> enumerate_threshold_classes(int n) {
    if (n < 0) throw InvalidParameter("vertex count must be nonnegative");
    if (n > 16) throw ResourceLimit("threshold enumeration capped at 16 vertices");
    std::vector<TargetGraph> out;
    out.reserve(1u << n);
    for (unsigned mask = 0; mask < (1u << n); mask++) {
        TargetGraph t(n);
        for (int i = 0; i < n; i++) {
            if (!((mask >> i) & 1)) continue;
            for (int j = i; j < n; j++) t.add_edge(i, j);
        }
        out.push_back(std::move(t));
    }
    return out;
}

TargetGraph lattice_target(int n) {
    if (n < 0) throw InvalidParameter("dilation must be nonnegative");
    std::vector<Rat> w;
    for (int i = 0; i <= n; i++) w.push_back(Rat(i));
    return threshold_graph(w, Rat(n));
}

}  // namespace homgt
