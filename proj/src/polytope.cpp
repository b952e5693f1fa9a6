#include "homgt/polytope.hpp"

#include "homgt/errors.hpp"
#include "homgt/target.hpp"

namespace homgt {

Int lattice_count(const SimpleGraph& g, int n, std::uint64_t node_budget) {
    return count_hom(g, lattice_target(n), node_budget);
}

Rat Polynomial::eval(const Rat& x) const {
    Rat acc = 0;
    for (size_t i = coeff.size(); i-- > 0;) acc = acc * x + coeff[i];
    return acc;
}

namespace {

// Exact Newton interpolation through the given points, expanded to
// ascending-power coefficients.
Polynomial interpolate(const std::vector<std::pair<Rat, Rat>>& pts) {
    size_t k = pts.size();
    std::vector<Rat> dd;  // divided differences, dd[j] = f[x_0..x_j]
    dd.reserve(k);
    for (const auto& [x, y] : pts) dd.push_back(y);
    for (size_t level = 1; level < k; level++)
        for (size_t j = k - 1; j >= level; j--)
            dd[j] = (dd[j] - dd[j - 1]) / (pts[j].first - pts[j - level].first);
    Polynomial p;
    p.coeff.assign(k, Rat(0));
    // horner expansion: p = p * (x - x_j) + dd[j], from the top down
    std::vector<Rat> cur(1, dd[k - 1]);
    for (size_t j = k - 1; j-- > 0;) {
        std::vector<Rat> next(cur.size() + 1, Rat(0));
        for (size_t i = 0; i < cur.size(); i++) {
            next[i + 1] += cur[i];
            next[i] -= cur[i] * pts[j].first;
        }
        next[0] += dd[j];
        cur = std::move(next);
    }
    for (size_t i = 0; i < cur.size(); i++) p.coeff[i] = cur[i];
    return p;
}

}  // namespace

EhrhartPair ehrhart_interpolate(const SimpleGraph& g, std::uint64_t node_budget) {
    int n = g.n;
    std::vector<Int> counts;
    for (int level = 0; level <= 2 * n + 3; level++)
        counts.push_back(lattice_count(g, level, node_budget));

    EhrhartPair out;
    for (int parity = 0; parity < 2; parity++) {
        std::vector<std::pair<Rat, Rat>> pts;
        for (int level = parity; level <= 2 * n + 3; level += 2)
            pts.emplace_back(Rat(level), Rat(counts[level]));
        // first n+1 points determine the degree-n polynomial; the final
        // point of the parity class is held out for validation
        std::vector<std::pair<Rat, Rat>> fit(pts.begin(), pts.begin() + (n + 1));
        Polynomial poly = interpolate(fit);
        for (const auto& [x, y] : pts)
            if (poly.eval(x) != y)
                throw InternalInconsistency(
                    "lattice counts do not follow a degree-n per-parity polynomial");
        (parity == 0 ? out.even_part : out.odd_part) = poly;
    }
    Rat even_lead = out.even_part.coeff[n];
    Rat odd_lead = out.odd_part.coeff[n];
    if (even_lead != odd_lead)
        throw InternalInconsistency("parity parts disagree on the leading coefficient");
    out.volume = even_lead;
    return out;
}

Rat estab_volume(const SimpleGraph& g, std::uint64_t node_budget) {
    return ehrhart_interpolate(g, node_budget).volume;
}

Rat stab_volume_complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw InvalidParameter("part sizes must be >= 1");
    return Rat(factorial((unsigned long)a) * factorial((unsigned long)b)) /
           Rat(factorial((unsigned long)(a + b)));
}

VolumeGtReport check_volume_gt(const SimpleGraph& g, std::uint64_t node_budget) {
    int d = regular_degree(g);
    if (d < 1) throw InvalidParameter("source must be d-regular with d >= 1");
    VolumeGtReport r;
    r.n = g.n;
    r.d = d;
    r.lhs = estab_volume(g, node_budget);
    r.rhs_base = stab_volume_complete_bipartite(d, d);
    r.lhs_power = rat_pow(r.lhs, 2 * (unsigned long)d);
    r.rhs_power = rat_pow(r.rhs_base, (unsigned long)g.n);
    r.verdict = r.lhs_power <= r.rhs_power ? Verdict::Holds : Verdict::Fails;
    return r;
}

RiemannReport weighted_riemann_check(const SimpleGraph& g, const std::vector<Rat>& tau,
                                     std::uint64_t node_budget) {
    int d = regular_degree(g);
    if (d < 1) throw InvalidParameter("source must be d-regular with d >= 1");
    if (tau.size() < 2) throw InvalidParameter("grid needs resolution >= 1 (two values)");
    int level = (int)tau.size() - 1;
    TargetGraph hn = lattice_target(level);
    RiemannReport r;
    r.level = level;
    r.n = g.n;
    r.d = d;
    r.lhs = count_hom_weighted(g, hn, tau, node_budget);
    r.rhs_base = count_hom_complete_bipartite(d, d, hn, tau);
    r.riemann_sum = r.lhs / rat_pow(Rat(level), (unsigned long)g.n);
    r.lhs_power = rat_pow(r.lhs, 2 * (unsigned long)d);
    r.rhs_power = rat_pow(r.rhs_base, (unsigned long)g.n);
    r.verdict = r.lhs_power <= r.rhs_power ? Verdict::Holds : Verdict::Fails;
    return r;
}

}  // namespace homgt
