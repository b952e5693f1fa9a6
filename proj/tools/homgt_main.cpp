// Command-line driver.
//
// Subcommands: certify, count, gt-scan, strongly-gt, chromatic, dominance,
// coef-compare, ehrhart, volume-gt, thresholds, swap-verify.
//
// Exit codes: 0 when every check passes, 1 when any verdict is FAILS (or a
// certificate comes back negative, or an internal cross-check trips), 2 on
// usage or input errors.  Reports are plain text by default; --format jsonl
// switches to one JSON object per line with arbitrary-precision values as
// decimal strings.  Given identical inputs and caps, jsonl output is
// byte-identical regardless of --jobs.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "homgt/coloring.hpp"
#include "homgt/errors.hpp"
#include "homgt/gt.hpp"
#include "homgt/hom.hpp"
#include "homgt/io.hpp"
#include "homgt/numbers.hpp"
#include "homgt/polytope.hpp"
#include "homgt/swap.hpp"
#include "homgt/target.hpp"

namespace {

using homgt::Int;
using homgt::Rat;
using homgt::Verdict;
using json = nlohmann::ordered_json;

// ----- shared options -----

struct Output {
    bool jsonl = false;

    // Text goes out as given; records one object per line.
    void line(const std::string& text) const {
        if (!jsonl) std::cout << text << "\n";
    }
    void record(const json& rec) const {
        if (jsonl) std::cout << rec.dump() << "\n";
    }
};

void add_format_flag(CLI::App* cmd, Output& out) {
    cmd->add_flag_callback(
        "--jsonl", [&out] { out.jsonl = true; }, "one JSON object per output line");
    cmd->add_option_function<std::string>(
           "--format", [&out](const std::string& v) { out.jsonl = (v == "jsonl"); },
           "output format")
        ->check(CLI::IsMember({"text", "jsonl"}));
}

const char* verdict_str(Verdict v) { return v == Verdict::Holds ? "HOLDS" : "FAILS"; }

// Graph file text on a single line: newlines become " ; ".  Replay with
// `tr ';' '\n'` (the parser skips blank lines).
std::string inline_graph(const std::string& file_text) {
    std::string out;
    for (char c : file_text) {
        if (c == '\n')
            out += " ; ";
        else
            out += c;
    }
    while (!out.empty() && (out.back() == ' ' || out.back() == ';')) out.pop_back();
    return out;
}

// "a..b" or a single integer; both ends inclusive.
std::vector<unsigned long> parse_eval_range(const std::string& text) {
    size_t dots = text.find("..");
    unsigned long lo = 0, hi = 0;
    try {
        if (dots == std::string::npos) {
            lo = hi = std::stoul(text);
        } else {
            lo = std::stoul(text.substr(0, dots));
            hi = std::stoul(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw homgt::InvalidParameter("bad --eval range '" + text + "' (want N or A..B)");
    }
    if (hi < lo) throw homgt::InvalidParameter("bad --eval range: " + text);
    if (hi - lo > 10000) throw homgt::InvalidParameter("--eval range wider than 10000 points");
    std::vector<unsigned long> points;
    for (unsigned long q = lo; q <= hi; q++) points.push_back(q);
    return points;
}

std::string sign_str(int s) { return s > 0 ? "+" : (s < 0 ? "-" : "0"); }

// ----- certify -----

int run_certify(const std::string& target_path, const Output& out) {
    homgt::TargetGraph h = homgt::load_target_graph(target_path);
    homgt::TargetCertificate cert = homgt::certify_target(h);
    if (!homgt::check_certificate(h, cert))
        throw homgt::InternalInconsistency("certificate failed its own re-check");

    json rec{{"command", "certify"}, {"target", target_path}, {"n", h.n}};
    if (cert.swap_target) {
        rec["verdict"] = "TARGET";
        rec["coloring"] = cert.coloring;
        out.record(rec);
        out.line("TARGET");
        std::ostringstream side0, side1;
        for (int u = 0; u < h.n; u++)
            for (int v = 0; v < h.n; v++) {
                std::ostringstream& side = cert.coloring[u * h.n + v] ? side1 : side0;
                side << " (" << u << "," << v << ")";
            }
        out.line("side-0 pairs:" + side0.str());
        out.line("side-1 pairs:" + side1.str());
        return 0;
    }
    std::ostringstream cyc;
    json cyc_json = json::array();
    for (int idx : cert.odd_cycle) {
        cyc << " (" << idx / h.n << "," << idx % h.n << ")";
        cyc_json.push_back({idx / h.n, idx % h.n});
    }
    rec["verdict"] = "NOT_TARGET";
    rec["odd_cycle"] = cyc_json;
    out.record(rec);
    out.line("NOT_TARGET");
    out.line("odd cycle of conflicting pairs:" + cyc.str());
    return 1;
}

// ----- count -----

int run_count(const std::string& source_path, const std::string& target_path,
              const std::string& weights_path, std::uint64_t budget, const Output& out) {
    homgt::SimpleGraph g = homgt::load_simple_graph(source_path);
    homgt::TargetGraph h = homgt::load_target_graph(target_path);
    json rec{{"command", "count"}, {"source", source_path}, {"target", target_path}};
    std::string value;
    if (weights_path.empty()) {
        value = homgt::int_str(homgt::count_hom(g, h, budget));
    } else {
        std::vector<Rat> w = homgt::load_weights_json(weights_path, h.n);
        value = homgt::rat_str(homgt::count_hom_weighted(g, h, w, budget));
        rec["weights"] = weights_path;
    }
    rec["hom"] = value;
    out.record(rec);
    out.line("hom = " + value);
    return 0;
}

// ----- gt-scan -----

int run_gt_scan(const std::string& target_path, int n_max, int d_max,
                const std::string& weights_path, int jobs, std::uint64_t budget,
                const Output& out) {
    homgt::TargetGraph h = homgt::load_target_graph(target_path);
    std::vector<Rat> weights;
    const std::vector<Rat>* wp = nullptr;
    if (!weights_path.empty()) {
        weights = homgt::load_weights_json(weights_path, h.n);
        wp = &weights;
    }
    std::vector<homgt::GtReport> reports = homgt::scan_corpus(h, n_max, d_max, wp, jobs, budget);

    int fails = 0;
    for (const homgt::GtReport& r : reports) {
        bool failed = r.verdict == Verdict::Fails;
        fails += failed;
        json rec{{"command", "gt-scan"},
                 {"id", r.id},
                 {"n", r.n},
                 {"d", r.d},
                 {"verdict", verdict_str(r.verdict)},
                 {"lhs", homgt::rat_str(r.lhs)},
                 {"rhs_base", homgt::rat_str(r.rhs_base)},
                 {"lhs_power", homgt::rat_str(r.lhs_power)},
                 {"rhs_power", homgt::rat_str(r.rhs_power)}};
        std::string witness = homgt::format_graph(r.graph);
        if (failed) rec["witness"] = witness;
        out.record(rec);
        std::ostringstream line;
        line << r.id << " N=" << r.n << " d=" << r.d << " " << verdict_str(r.verdict)
             << " lhs=" << r.lhs << " rhs_base=" << r.rhs_base << " lhs^{2d}=" << r.lhs_power
             << " rhs^{N}=" << r.rhs_power;
        if (!failed && r.lhs_power == r.rhs_power) line << " tight";
        if (failed) line << " witness=" << inline_graph(witness);
        out.line(line.str());
    }
    out.record(json{{"command", "gt-scan"},
                    {"summary", true},
                    {"scanned", reports.size()},
                    {"fails", fails}});
    out.line("scanned " + std::to_string(reports.size()) + " graphs, " + std::to_string(fails) +
             " FAILS");
    return fails > 0 ? 1 : 0;
}

// ----- strongly-gt -----

int run_strongly_gt(const std::string& source_path, const std::string& target_path,
                    const std::string& weights_path, std::uint64_t budget, const Output& out) {
    homgt::SimpleGraph g = homgt::load_simple_graph(source_path);
    homgt::TargetGraph h = homgt::load_target_graph(target_path);
    homgt::StronglyGtReport r;
    if (weights_path.empty()) {
        r = homgt::check_strongly_gt(g, h, budget);
    } else {
        std::vector<Rat> w = homgt::load_weights_json(weights_path, h.n);
        r = homgt::check_strongly_gt(g, h, w, budget);
    }
    out.record(json{{"command", "strongly-gt"},
                    {"source", source_path},
                    {"target", target_path},
                    {"verdict", verdict_str(r.verdict)},
                    {"lhs", homgt::rat_str(r.lhs)},
                    {"rhs", homgt::rat_str(r.rhs)}});
    std::ostringstream line;
    line << verdict_str(r.verdict) << " hom(G+G,H)=" << r.lhs << " hom(GxK2,H)=" << r.rhs;
    out.line(line.str());
    return r.verdict == Verdict::Fails ? 1 : 0;
}

// ----- chromatic -----

int run_chromatic(const std::string& graph_path, const std::string& eval_range,
                  std::uint64_t budget, const Output& out) {
    homgt::SimpleGraph g = homgt::load_simple_graph(graph_path);
    homgt::BinomialPolynomial p = homgt::chromatic_binomial(g, budget);
    json coeffs = json::array();
    std::ostringstream line;
    line << "binomial coefficients:";
    for (const Int& c : p.coeff) {
        coeffs.push_back(homgt::int_str(c));
        line << " " << c;
    }
    json rec{{"command", "chromatic"}, {"graph", graph_path}, {"n", g.n}, {"coefficients", coeffs}};
    std::vector<std::string> eval_lines;
    if (!eval_range.empty()) {
        json evals = json::array();
        for (unsigned long q : parse_eval_range(eval_range)) {
            Int v = p.eval(q);
            evals.push_back({{"q", q}, {"value", homgt::int_str(v)}});
            eval_lines.push_back("P(" + std::to_string(q) + ") = " + homgt::int_str(v));
        }
        rec["evaluations"] = evals;
    }
    out.record(rec);
    out.line(line.str());
    for (const std::string& l : eval_lines) out.line(l);
    return 0;
}

// ----- dominance -----

int run_dominance(const std::string& graph_path, const std::string& eval_range,
                  std::uint64_t budget, const Output& out) {
    homgt::SimpleGraph g = homgt::load_simple_graph(graph_path);
    std::vector<unsigned long> points;
    if (!eval_range.empty()) points = parse_eval_range(eval_range);
    homgt::DominanceCertificate cert = homgt::dominance_certificate(g, points, budget);

    // Term-by-term scan: indices where the crossed profile falls below the
    // disjoint one (none are expected; evidence only).
    std::vector<int> negative;
    for (size_t i = 0; i < cert.profiles.disjoint.size(); i++)
        if (cert.profiles.crossed[i] < cert.profiles.disjoint[i]) negative.push_back((int)i);

    bool falsified = cert.top_sign < 0;
    json rec{{"command", "dominance"},
             {"graph", graph_path},
             {"n", g.n},
             {"top_index", cert.top_index},
             {"top_sign", sign_str(cert.top_sign)},
             {"uniform_bound", homgt::int_str(cert.uniform_bound)},
             {"girth_bound",
              cert.girth_bound ? json(homgt::int_str(*cert.girth_bound)) : json(nullptr)},
             {"negative_indices", negative}};
    out.line("top difference index: " + std::to_string(cert.top_index) +
             " sign: " + sign_str(cert.top_sign));
    out.line("dominance threshold (uniform): " + homgt::int_str(cert.uniform_bound));
    out.line("dominance threshold (odd-girth): " +
             (cert.girth_bound ? homgt::int_str(*cert.girth_bound) : std::string("n/a")));
    {
        std::ostringstream l1, l2;
        l1 << "surjective profile G+G: ";
        l2 << "surjective profile GxK2:";
        json p1 = json::array(), p2 = json::array();
        for (const Int& c : cert.profiles.disjoint) {
            l1 << " " << c;
            p1.push_back(homgt::int_str(c));
        }
        for (const Int& c : cert.profiles.crossed) {
            l2 << " " << c;
            p2.push_back(homgt::int_str(c));
        }
        rec["profile_disjoint"] = p1;
        rec["profile_crossed"] = p2;
        out.line(l1.str());
        out.line(l2.str());
    }
    if (!negative.empty()) {
        std::ostringstream l;
        l << "term-by-term dominance violated at i =";
        for (int i : negative) l << " " << i;
        out.line(l.str());
    } else {
        out.line("term-by-term dominance: no violations");
    }
    json evals = json::array();
    for (const auto& [q, diff] : cert.evaluations) {
        int s = sgn(diff);
        if (s < 0) falsified = true;
        evals.push_back({{"q", q}, {"difference", homgt::int_str(diff)}, {"sign", sign_str(s)}});
        out.line("q=" + std::to_string(q) + " difference=" + homgt::int_str(diff));
    }
    rec["evaluations"] = evals;
    rec["verdict"] = falsified ? "FAILS" : "HOLDS";
    out.record(rec);
    out.line(falsified ? "FAILS" : "HOLDS");
    return falsified ? 1 : 0;
}

// ----- coef-compare -----

int run_coef_compare(const std::string& graph_path, std::uint64_t budget, int cycle_colors,
                     std::uint64_t samples, std::uint64_t seed, const Output& out) {
    homgt::SimpleGraph g = homgt::load_simple_graph(graph_path);
    homgt::CoefficientCompare cc = homgt::verify_coefficient_compare(g, budget);
    json rec{{"command", "coef-compare"},
             {"graph", graph_path},
             {"n", cc.n},
             {"odd_girth", cc.odd_girth},
             {"boundary", cc.boundary},
             {"equality_ok", cc.equality_ok},
             {"strict_ok", cc.strict_ok}};
    out.line("N=" + std::to_string(cc.n) + " odd-girth=" + std::to_string(cc.odd_girth) +
             " boundary=" + std::to_string(cc.boundary));
    out.line(std::string("equality for i > boundary: ") + (cc.equality_ok ? "ok" : "VIOLATED"));
    out.line("strict at boundary: " +
             (cc.strict_ok ? "ok: " + homgt::int_str(cc.profiles.disjoint[cc.boundary]) + " < " +
                                 homgt::int_str(cc.profiles.crossed[cc.boundary])
                           : std::string("VIOLATED")));
    bool pass = cc.pass();

    if (cycle_colors >= 0) {
        homgt::CycleBoundReport cb = homgt::verify_cycle_violation_bounds(
            g, cycle_colors, homgt::kDefaultDcBudget, samples, seed);
        pass = pass && cb.pass;
        rec["cycle_bounds"] = json{{"colors", cycle_colors},
                                   {"pass", cb.pass},
                                   {"checked_disjoint", cb.checked_disjoint},
                                   {"checked_crossed", cb.checked_crossed},
                                   {"exhaustive_disjoint", cb.exhaustive_disjoint},
                                   {"exhaustive_crossed", cb.exhaustive_crossed}};
        std::ostringstream l;
        l << "cycle bounds at " << cycle_colors << " colors: " << (cb.pass ? "ok" : "VIOLATED")
          << " (checked " << cb.checked_disjoint << " disjoint"
          << (cb.exhaustive_disjoint ? ", exhaustive" : ", sampled") << "; " << cb.checked_crossed
          << " crossed" << (cb.exhaustive_crossed ? ", exhaustive" : ", sampled") << ")";
        out.line(l.str());
    }
    rec["verdict"] = pass ? "PASS" : "FAILS";
    out.record(rec);
    out.line(pass ? "PASS" : "FAILS");
    return pass ? 0 : 1;
}

// ----- ehrhart -----

std::string poly_str(const homgt::Polynomial& p) {
    std::ostringstream out;
    for (size_t i = 0; i < p.coeff.size(); i++) out << (i ? " " : "") << p.coeff[i];
    return out.str();
}

json poly_json(const homgt::Polynomial& p) {
    json arr = json::array();
    for (const Rat& c : p.coeff) arr.push_back(homgt::rat_str(c));
    return arr;
}

int run_ehrhart(const std::string& graph_path, std::uint64_t budget, const Output& out) {
    homgt::SimpleGraph g = homgt::load_simple_graph(graph_path);
    homgt::EhrhartPair e = homgt::ehrhart_interpolate(g, budget);
    out.record(json{{"command", "ehrhart"},
                    {"graph", graph_path},
                    {"n", g.n},
                    {"even", poly_json(e.even_part)},
                    {"odd", poly_json(e.odd_part)},
                    {"volume", homgt::rat_str(e.volume)}});
    out.line("even-part coefficients (ascending): " + poly_str(e.even_part));
    out.line("odd-part coefficients (ascending):  " + poly_str(e.odd_part));
    out.line("volume = " + homgt::rat_str(e.volume));
    return 0;
}

// ----- volume-gt -----

int run_volume_gt(const std::string& graph_path, const std::string& tau_path,
                  std::uint64_t budget, const Output& out) {
    homgt::SimpleGraph g = homgt::load_simple_graph(graph_path);
    if (tau_path.empty()) {
        homgt::VolumeGtReport r = homgt::check_volume_gt(g, budget);
        out.record(json{{"command", "volume-gt"},
                        {"graph", graph_path},
                        {"n", r.n},
                        {"d", r.d},
                        {"verdict", verdict_str(r.verdict)},
                        {"lhs", homgt::rat_str(r.lhs)},
                        {"rhs_base", homgt::rat_str(r.rhs_base)},
                        {"lhs_power", homgt::rat_str(r.lhs_power)},
                        {"rhs_power", homgt::rat_str(r.rhs_power)}});
        std::ostringstream line;
        line << verdict_str(r.verdict) << " N=" << r.n << " d=" << r.d << " vol=" << r.lhs
             << " base=" << r.rhs_base << " lhs^{2d}=" << r.lhs_power
             << " rhs^{N}=" << r.rhs_power;
        out.line(line.str());
        return r.verdict == Verdict::Fails ? 1 : 0;
    }
    std::vector<Rat> tau = homgt::load_rational_grid(tau_path);
    homgt::RiemannReport r = homgt::weighted_riemann_check(g, tau, budget);
    out.record(json{{"command", "volume-gt"},
                    {"graph", graph_path},
                    {"tau", tau_path},
                    {"level", r.level},
                    {"n", r.n},
                    {"d", r.d},
                    {"verdict", verdict_str(r.verdict)},
                    {"lhs", homgt::rat_str(r.lhs)},
                    {"rhs_base", homgt::rat_str(r.rhs_base)},
                    {"riemann_sum", homgt::rat_str(r.riemann_sum)},
                    {"lhs_power", homgt::rat_str(r.lhs_power)},
                    {"rhs_power", homgt::rat_str(r.rhs_power)}});
    std::ostringstream line;
    line << verdict_str(r.verdict) << " level=" << r.level << " N=" << r.n << " d=" << r.d
         << " lhs=" << r.lhs << " rhs_base=" << r.rhs_base << " riemann-sum=" << r.riemann_sum
         << " lhs^{2d}=" << r.lhs_power << " rhs^{N}=" << r.rhs_power;
    out.line(line.str());
    return r.verdict == Verdict::Fails ? 1 : 0;
}

// ----- thresholds -----

int run_thresholds(int n, const Output& out) {
    std::vector<homgt::TargetGraph> classes = homgt::enumerate_threshold_classes(n);
    for (size_t mask = 0; mask < classes.size(); mask++) {
        const homgt::TargetGraph& h = classes[mask];
        int loops = (int)h.loops().size();
        std::string text = homgt::format_graph(h);
        out.record(json{{"command", "thresholds"},
                        {"mask", mask},
                        {"loops", loops},
                        {"graph", text}});
        out.line("mask=" + std::to_string(mask) + " loops=" + std::to_string(loops) +
                 " graph: " + inline_graph(text));
    }
    out.record(json{{"command", "thresholds"}, {"summary", true}, {"count", classes.size()}});
    out.line(std::to_string(classes.size()) + " graphs listed");
    return 0;
}

// ----- swap-verify -----

int run_swap_verify(const std::string& source_path, const std::string& target_path,
                    std::uint64_t budget, const Output& out) {
    homgt::SimpleGraph g = homgt::load_simple_graph(source_path);
    homgt::TargetGraph h = homgt::load_target_graph(target_path);
    homgt::SwapBijectionReport r = homgt::verify_swap_bijection(g, h, budget);
    out.record(json{{"command", "swap-verify"},
                    {"source", source_path},
                    {"target", target_path},
                    {"disjoint_count", homgt::int_str(r.disjoint_count)},
                    {"crossed_count", homgt::int_str(r.crossed_count)},
                    {"roundtrip_ok", r.roundtrip_ok},
                    {"bijection_ok", r.bijection_ok},
                    {"verdict", r.ok() ? "PASS" : "FAILS"}});
    out.line("labelings with the swapping property: disjoint=" + homgt::int_str(r.disjoint_count) +
             " crossed=" + homgt::int_str(r.crossed_count));
    out.line(std::string("transport roundtrip: ") + (r.roundtrip_ok ? "ok" : "VIOLATED"));
    out.line(std::string("transport bijection: ") + (r.bijection_ok ? "ok" : "VIOLATED"));
    out.line(r.ok() ? "PASS" : "FAILS");
    return r.ok() ? 0 : 1;
}

}  // namespace

// ----- main -----

int main(int argc, char** argv) {
    CLI::App app{"exact homomorphism-inequality toolkit"};
    app.require_subcommand(1);

    Output out;
    std::string source_path, target_path, graph_path, weights_path, tau_path, eval_range;
    std::string basis = "binomial";
    int n_max = 6, d_max = 3, jobs = 1, n_vertices = 3, cycle_colors = -1;
    std::uint64_t budget = homgt::kDefaultNodeBudget;
    std::uint64_t dc_budget = homgt::kDefaultDcBudget;
    std::uint64_t swap_budget = homgt::kDefaultEnumBudget;
    std::uint64_t samples = 20000, seed = 17;

    CLI::App* certify = app.add_subcommand("certify", "decide the pair-swapping criterion");
    certify->add_option("--target", target_path, "target graph file")->required();
    add_format_flag(certify, out);

    CLI::App* count = app.add_subcommand("count", "exact homomorphism count");
    count->add_option("--source", source_path, "source graph file")->required();
    count->add_option("--target", target_path, "target graph file")->required();
    count->add_option("--weights", weights_path, "vertex activities (JSON)");
    count->add_option("--budget", budget, "search-node budget");
    add_format_flag(count, out);

    CLI::App* gt_scan = app.add_subcommand("gt-scan", "scan regular sources for the inequality");
    gt_scan->add_option("--target", target_path, "target graph file")->required();
    gt_scan->add_option("--nmax", n_max, "max source vertices")->check(CLI::PositiveNumber);
    gt_scan->add_option("--dmax", d_max, "max regularity degree")->check(CLI::PositiveNumber);
    gt_scan->add_option("--weights", weights_path, "vertex activities (JSON)");
    gt_scan->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    gt_scan->add_option("--budget", budget, "search-node budget");
    add_format_flag(gt_scan, out);

    CLI::App* strongly = app.add_subcommand("strongly-gt", "compare the two doublings");
    strongly->add_option("--source", source_path, "source graph file")->required();
    strongly->add_option("--target", target_path, "target graph file")->required();
    strongly->add_option("--weights", weights_path, "vertex activities (JSON)");
    strongly->add_option("--budget", budget, "search-node budget");
    add_format_flag(strongly, out);

    CLI::App* chromatic = app.add_subcommand("chromatic", "chromatic polynomial, binomial basis");
    chromatic->add_option("--graph", graph_path, "graph file")->required();
    chromatic->add_option("--basis", basis, "coefficient basis")
        ->check(CLI::IsMember({"binomial"}));
    chromatic->add_option("--eval", eval_range, "evaluate at q in N or A..B");
    chromatic->add_option("--budget", dc_budget, "deletion-contraction budget");
    add_format_flag(chromatic, out);

    CLI::App* dominance = app.add_subcommand("dominance", "doubling dominance certificate");
    dominance->add_option("--graph", graph_path, "graph file")->required();
    dominance->add_option("--eval", eval_range, "evaluate the difference at q in N or A..B");
    dominance->add_option("--budget", dc_budget, "deletion-contraction budget");
    add_format_flag(dominance, out);

    CLI::App* coef = app.add_subcommand("coef-compare", "surjective-profile comparison");
    coef->add_option("--graph", graph_path, "graph file")->required();
    coef->add_option("--budget", dc_budget, "deletion-contraction budget");
    coef->add_option("--cycle-colors", cycle_colors,
                     "also check violated-cycle length bounds at this color count");
    coef->add_option("--samples", samples, "colorings sampled when enumeration is too large");
    coef->add_option("--seed", seed, "sampling seed");
    add_format_flag(coef, out);

    CLI::App* ehrhart = app.add_subcommand("ehrhart", "lattice-count quasi-polynomial");
    ehrhart->add_option("--graph", graph_path, "graph file")->required();
    ehrhart->add_option("--budget", budget, "search-node budget");
    add_format_flag(ehrhart, out);

    CLI::App* volume = app.add_subcommand("volume-gt", "polytope-volume inequality");
    volume->add_option("--graph", graph_path, "graph file")->required();
    volume->add_option("--tau", tau_path, "weight grid file: check at its resolution instead");
    volume->add_option("--budget", budget, "search-node budget");
    add_format_flag(volume, out);

    CLI::App* thresholds = app.add_subcommand("thresholds", "enumerate threshold targets");
    thresholds->add_option("--n", n_vertices, "vertex count")->required();
    add_format_flag(thresholds, out);

    CLI::App* swap = app.add_subcommand("swap-verify", "transport bijection check");
    swap->add_option("--source", source_path, "source graph file")->required();
    swap->add_option("--target", target_path, "target graph file")->required();
    swap->add_option("--budget", swap_budget, "max homomorphisms enumerated per side");
    add_format_flag(swap, out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (certify->parsed()) return run_certify(target_path, out);
        if (count->parsed()) return run_count(source_path, target_path, weights_path, budget, out);
        if (gt_scan->parsed())
            return run_gt_scan(target_path, n_max, d_max, weights_path, jobs, budget, out);
        if (strongly->parsed())
            return run_strongly_gt(source_path, target_path, weights_path, budget, out);
        if (chromatic->parsed()) return run_chromatic(graph_path, eval_range, dc_budget, out);
        if (dominance->parsed()) return run_dominance(graph_path, eval_range, dc_budget, out);
        if (coef->parsed())
            return run_coef_compare(graph_path, dc_budget, cycle_colors, samples, seed, out);
        if (ehrhart->parsed()) return run_ehrhart(graph_path, budget, out);
        if (volume->parsed()) return run_volume_gt(graph_path, tau_path, budget, out);
        if (thresholds->parsed()) return run_thresholds(n_vertices, out);
        if (swap->parsed()) return run_swap_verify(source_path, target_path, swap_budget, out);
    } catch (const homgt::InternalInconsistency& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 1;
    } catch (const homgt::NotBipartite& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 1;
    } catch (const homgt::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
