#include "homgt/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <type_traits>

#include <json.hpp>

#include "homgt/errors.hpp"

namespace homgt {

namespace {

// Reads the next non-empty line; returns false at end of input.
bool next_line(std::istream& in, std::string& line, int& lineno) {
    while (std::getline(in, line)) {
        lineno++;
        bool blank = true;
        for (char c : line)
            if (!std::isspace((unsigned char)c)) {
                blank = false;
                break;
            }
        if (!blank) return true;
    }
    return false;
}

std::vector<long> parse_ints(const std::string& line, size_t expect, int lineno) {
    std::istringstream ss(line);
    std::vector<long> out;
    long x;
    while (ss >> x) out.push_back(x);
    std::string tail;
    if (ss.fail() && !ss.eof()) throw ParseError("expected integers, got '" + line + "'", lineno);
    if (out.size() != expect)
        throw ParseError("expected " + std::to_string(expect) + " integers, got " +
                             std::to_string(out.size()),
                         lineno);
    return out;
}

template <typename Graph>
Graph parse_graph_impl(std::istream& in, bool allow_loops) {
    std::string line;
    int lineno = 0;
    if (!next_line(in, line, lineno)) throw ParseError("missing header line", lineno + 1);
    auto header = parse_ints(line, 3, lineno);
    long n = header[0], m = header[1], loops = header[2];
    if (n < 0 || n > kMaxVertices) throw ParseError("vertex count out of range", lineno);
    if (m < 0 || loops < 0) throw ParseError("negative edge count", lineno);
    if (!allow_loops && loops != 0)
        throw ParseError("loops are not allowed in a simple graph", lineno);
    Graph g((int)n);
    for (long i = 0; i < m; i++) {
        if (!next_line(in, line, lineno))
            throw ParseError("expected " + std::to_string(m) + " edge lines", lineno + 1);
        auto e = parse_ints(line, 2, lineno);
        if (e[0] < 0 || e[1] < 0 || e[0] >= n || e[1] >= n)
            throw ParseError("edge endpoint out of range", lineno);
        if (e[0] >= e[1]) throw ParseError("edges must be written 'u v' with u < v", lineno);
        if (g.has_edge((int)e[0], (int)e[1])) throw ParseError("duplicate edge", lineno);
        g.add_edge((int)e[0], (int)e[1]);
    }
    for (long i = 0; i < loops; i++) {
        if (!next_line(in, line, lineno))
            throw ParseError("expected " + std::to_string(loops) + " loop lines", lineno + 1);
        auto e = parse_ints(line, 2, lineno);
        if (e[0] != e[1]) throw ParseError("loop lines must repeat the vertex: 'v v'", lineno);
        if (e[0] < 0 || e[0] >= n) throw ParseError("loop vertex out of range", lineno);
        if constexpr (std::is_same_v<Graph, TargetGraph>) {
            if (g.has_loop((int)e[0])) throw ParseError("duplicate loop", lineno);
            g.add_edge((int)e[0], (int)e[0]);
        }
    }
    if (next_line(in, line, lineno))
        throw ParseError("unexpected trailing content '" + line + "'", lineno);
    return g;
}

}  // namespace

SimpleGraph parse_simple_graph(std::istream& in) {
    return parse_graph_impl<SimpleGraph>(in, false);
}

TargetGraph parse_target_graph(std::istream& in) {
    return parse_graph_impl<TargetGraph>(in, true);
}

static std::ifstream open_or_throw(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw InvalidParameter("cannot open file: " + path);
    return f;
}

SimpleGraph load_simple_graph(const std::string& path) {
    std::ifstream f = open_or_throw(path);
    return parse_simple_graph(f);
}

TargetGraph load_target_graph(const std::string& path) {
    std::ifstream f = open_or_throw(path);
    return parse_target_graph(f);
}

std::string format_graph(const SimpleGraph& g) {
    std::ostringstream out;
    auto es = g.edges();
    out << g.n << " " << es.size() << " 0\n";
    for (auto [u, v] : es) out << u << " " << v << "\n";
    return out.str();
}

std::string format_graph(const TargetGraph& g) {
    std::ostringstream out;
    auto es = g.edges();
    auto ls = g.loops();
    out << g.n << " " << es.size() << " " << ls.size() << "\n";
    for (auto [u, v] : es) out << u << " " << v << "\n";
    for (int v : ls) out << v << " " << v << "\n";
    return out.str();
}

Rat parse_rational(const std::string& text) {
    std::string s = text;
    if (s.empty()) throw InvalidParameter("empty rational");
    // validate shape by hand; mpq_class aborts on malformed input
    size_t slash = s.find('/');
    auto is_int = [](const std::string& t) {
        if (t.empty()) return false;
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); i++)
            if (!std::isdigit((unsigned char)t[i])) return false;
        return true;
    };
    if (slash == std::string::npos) {
        if (!is_int(s)) throw InvalidParameter("malformed rational '" + text + "'");
        return Rat(mpz_class(s, 10));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) throw InvalidParameter("malformed rational '" + text + "'");
    mpz_class d(den, 10);
    if (d == 0) throw InvalidParameter("zero denominator in '" + text + "'");
    Rat q(mpz_class(num, 10), d);
    q.canonicalize();
    return q;
}

std::vector<Rat> parse_weights_json(std::istream& in, int n) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidParameter(std::string("malformed weight JSON: ") + e.what());
    }
    if (!j.is_object()) throw InvalidParameter("weight JSON must be an object");
    std::vector<Rat> weights(n, Rat(-1));
    for (auto& [key, value] : j.items()) {
        int v;
        try {
            size_t used = 0;
            v = std::stoi(key, &used);
            if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
            throw InvalidParameter("weight key '" + key + "' is not a vertex index");
        }
        if (v < 0 || v >= n) throw InvalidParameter("weight key '" + key + "' out of range");
        if (!value.is_string())
            throw InvalidParameter("weight for vertex " + key + " must be a rational string");
        weights[v] = parse_rational(value.get<std::string>());
        if (weights[v] < 0)
            throw InvalidParameter("weight for vertex " + key + " must be nonnegative");
    }
    for (int v = 0; v < n; v++)
        if (weights[v] < 0)
            throw InvalidParameter("missing weight for vertex " + std::to_string(v));
    return weights;
}

std::vector<Rat> load_weights_json(const std::string& path, int n) {
    std::ifstream f = open_or_throw(path);
    return parse_weights_json(f, n);
}

std::vector<Rat> parse_rational_grid(std::istream& in, int count) {
    std::vector<Rat> out;
    std::string line;
    int lineno = 0;
    while (next_line(in, line, lineno)) {
        std::istringstream ss(line);
        std::string tok;
        ss >> tok;
        std::string rest;
        if (ss >> rest) throw ParseError("one rational per line", lineno);
        Rat q = parse_rational(tok);
        if (q < 0) throw ParseError("grid values must be nonnegative", lineno);
        out.push_back(q);
    }
    if (count < 0 && out.empty()) throw ParseError("grid file is empty", lineno);
    if (count >= 0 && (int)out.size() != count)
        throw InvalidParameter("expected " + std::to_string(count) + " grid values, got " +
                               std::to_string(out.size()));
    return out;
}

std::vector<Rat> load_rational_grid(const std::string& path, int count) {
    std::ifstream f = open_or_throw(path);
    return parse_rational_grid(f, count);
}

}  // namespace homgt
