#pragma once

// Graph serialization (graph6 and a small edge-list text format), canonical
// forms, and exhaustive enumeration of isomorphism classes of small graphs.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gps/graph.hpp"
#include "gps/perm.hpp"

namespace gps {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                      : what),
          line(line) {}
    int line;  // 1-based; 0 when not line-oriented (graph6)
};

inline constexpr int kGraph6MaxOrder = 62;  // single-byte order form only

// Standard graph6: first byte 63+n, then the upper triangle in column-major
// order, x(0,1) x(0,2) x(1,2) x(0,3) ..., six bits per byte, most significant
// bit first, zero-padded. Rejects out-of-range bytes, bad length, nonzero
// padding, and the multi-byte order escape ('~').
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

// Edge-list text: optional '#' comment lines and blank lines, then a header
// "n <edge-count>", then one "u v" pair per line (0-based ids). Errors carry
// 1-based line numbers.
Graph parse_edgelist(std::string_view text);

inline constexpr int kEnumerateMaxOrder = 8;

// Upper-triangle adjacency bits in graph6 bit order, packed with the first
// pair as the most significant bit, minimised over all relabelings.
// Requires 1 <= n <= 8 (28 bits at most).
std::uint32_t canonical_bits(const Graph& g);

// relabel(g, canonical_labeling(g)) attains canonical_bits(g).
Permutation canonical_labeling(const Graph& g);

// graph6 string of the canonical relabeling; equal strings iff isomorphic.
std::string canonical_graph6(const Graph& g);

// All isomorphism classes of order n (1 <= n <= 8), each represented by its
// canonical labeling, sorted by canonical form.
std::vector<Graph> enumerate_graphs(int n, bool connected_only = false);

}  // namespace gps
