#include "homgt/gt.hpp"

#include <future>
#include <utility>

#include "homgt/errors.hpp"

namespace homgt {

int regular_degree(const SimpleGraph& g) {
    if (g.n == 0) return -1;
    int d = g.degree(0);
    for (int v = 1; v < g.n; v++)
        if (g.degree(v) != d) return -1;
    return d;
}

namespace {

GtReport check_gt_impl(const SimpleGraph& g, const TargetGraph& h,
                       const std::vector<Rat>* weights, std::uint64_t node_budget) {
    int d = regular_degree(g);
    if (d < 1) throw InvalidParameter("source must be d-regular with d >= 1");
    GtReport r;
    r.n = g.n;
    r.d = d;
    r.graph = g;
    if (weights) {
        r.lhs = count_hom_weighted(g, h, *weights, node_budget);
        r.rhs_base = count_hom_complete_bipartite(d, d, h, *weights);
    } else {
        r.lhs = Rat(count_hom(g, h, node_budget));
        r.rhs_base = Rat(count_hom_complete_bipartite(d, d, h));
    }
    r.lhs_power = rat_pow(r.lhs, 2 * (unsigned long)d);
    r.rhs_power = rat_pow(r.rhs_base, (unsigned long)g.n);
    r.verdict = r.lhs_power <= r.rhs_power ? Verdict::Holds : Verdict::Fails;
    return r;
}

}  // namespace

GtReport check_gt(const SimpleGraph& g, const TargetGraph& h, std::uint64_t node_budget) {
    return check_gt_impl(g, h, nullptr, node_budget);
}

GtReport check_wgt(const SimpleGraph& g, const TargetGraph& h, const std::vector<Rat>& weights,
                   std::uint64_t node_budget) {
    return check_gt_impl(g, h, &weights, node_budget);
}

namespace {

StronglyGtReport check_strongly_impl(const SimpleGraph& g, const TargetGraph& h,
                                     const std::vector<Rat>* weights,
                                     std::uint64_t node_budget) {
    SimpleGraph two = disjoint_double(g);
    SimpleGraph cover = bipartite_double(g);
    StronglyGtReport r;
    if (weights) {
        r.lhs = count_hom_weighted(two, h, *weights, node_budget);
        r.rhs = count_hom_weighted(cover, h, *weights, node_budget);
    } else {
        r.lhs = Rat(count_hom(two, h, node_budget));
        r.rhs = Rat(count_hom(cover, h, node_budget));
    }
    r.verdict = r.lhs <= r.rhs ? Verdict::Holds : Verdict::Fails;
    return r;
}

}  // namespace

StronglyGtReport check_strongly_gt(const SimpleGraph& g, const TargetGraph& h,
                                   std::uint64_t node_budget) {
    return check_strongly_impl(g, h, nullptr, node_budget);
}

StronglyGtReport check_strongly_gt(const SimpleGraph& g, const TargetGraph& h,
                                   const std::vector<Rat>& weights, std::uint64_t node_budget) {
    return check_strongly_impl(g, h, &weights, node_budget);
}

std::vector<GtReport> scan_corpus(const TargetGraph& h, int n_max, int d_max,
                                  const std::vector<Rat>* weights, int jobs,
                                  std::uint64_t node_budget) {
    if (n_max < 1 || d_max < 1) throw InvalidParameter("scan caps must be positive");
    struct Item {
        SimpleGraph g;
        std::string id;
    };
    std::vector<Item> items;
    for (int n = 2; n <= n_max; n++)
        for (int d = 1; d <= d_max && d < n; d++) {
            std::vector<SimpleGraph> classes = enumerate_regular(n, d);
            for (size_t k = 0; k < classes.size(); k++)
                items.push_back({std::move(classes[k]), "n" + std::to_string(n) + "-d" +
                                                            std::to_string(d) + "-g" +
                                                            std::to_string(k)});
        }

    std::vector<GtReport> out(items.size());
    auto work = [&](int worker, int stride) {
        for (size_t i = worker; i < items.size(); i += stride) {
            out[i] = weights ? check_wgt(items[i].g, h, *weights, node_budget)
                             : check_gt(items[i].g, h, node_budget);
            out[i].id = items[i].id;
        }
    };
    if (jobs <= 1) {
        work(0, 1);
    } else {
        std::vector<std::future<void>> pool;
        for (int t = 0; t < jobs; t++)
            pool.push_back(std::async(std::launch::async, work, t, jobs));
        for (auto& f : pool) f.get();
    }
    return out;
}

}  // namespace homgt
