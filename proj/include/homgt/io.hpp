#pragma once

// Text formats.
//
// Graph files: a header line "n m L" (vertex count, non-loop edge count, loop
// count), then m lines "u v" with u < v, then L lines "v v".  Vertices are
// 0-based.  Simple graphs must have L = 0.
//
// Weight files: a JSON object mapping vertex indices (as strings) to
// nonnegative rationals written "p" or "p/q", e.g. {"0": "1", "1": "1/2"}.
// Every vertex of the graph must be present.
//
// Grid files: one nonnegative rational per line; used for sampled weight
// functions on {0, 1/n, ..., 1}.

#include <iosfwd>
#include <string>
#include <vector>

#include "homgt/graph.hpp"
#include "homgt/numbers.hpp"

namespace homgt {

SimpleGraph parse_simple_graph(std::istream& in);
TargetGraph parse_target_graph(std::istream& in);
SimpleGraph load_simple_graph(const std::string& path);
TargetGraph load_target_graph(const std::string& path);

std::string format_graph(const SimpleGraph& g);
std::string format_graph(const TargetGraph& g);

// Parses "p" or "p/q"; rejects zero denominators; result is canonicalized.
Rat parse_rational(const std::string& text);

// Weight map for a target on n vertices; all entries required, all >= 0.
std::vector<Rat> parse_weights_json(std::istream& in, int n);
std::vector<Rat> load_weights_json(const std::string& path, int n);

// Nonnegative rationals, one per line; `count` pins the expected number,
// -1 accepts any nonempty grid.
std::vector<Rat> parse_rational_grid(std::istream& in, int count = -1);
std::vector<Rat> load_rational_grid(const std::string& path, int count = -1);

}  // namespace homgt
