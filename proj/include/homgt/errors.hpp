#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace homgt {

// An argument violates an operation's contract.
struct InvalidParameter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A configurable work budget (nodes, vertices, masks) ran out before the
// computation finished.
struct ResourceLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input file; `line` is 1-based.
struct ParseError : std::runtime_error {
    int line;
    ParseError(const std::string& msg, int line_)
        : std::runtime_error(msg + " (line " + std::to_string(line_) + ")"), line(line_) {}
};

// A step that requires a bipartite graph found an odd cycle instead.
// `odd_cycle` lists the cycle's vertices in order; a single entry means a loop.
struct NotBipartite : std::runtime_error {
    std::vector<int> odd_cycle;
    explicit NotBipartite(std::vector<int> cycle)
        : std::runtime_error("graph is not bipartite"), odd_cycle(std::move(cycle)) {}
    NotBipartite(const std::string& msg, std::vector<int> cycle)
        : std::runtime_error(msg), odd_cycle(std::move(cycle)) {}
};

// An internal cross-check failed: two quantities the theory forces to agree
// did not.  Signals a defect in this library, not in its input.
struct InternalInconsistency : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace homgt
