#pragma once

// Simple undirected graphs with bit-row adjacency, plus the structural
// predicates used throughout the library (connectivity, bipartiteness,
// R-thinness, quotients).

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gps {

// Set of vertex ids over a fixed universe {0..n-1}, packed 64 per word.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe)
        : n_(universe), words_((universe + 63) / 64, 0) {}

    int universe() const { return n_; }

    bool test(int v) const {
        return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
    }
    void set(int v) {
        words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
    }
    void reset(int v) {
        words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    int count() const;
    bool empty() const;
    int first() const;          // smallest member, -1 when empty
    int next(int after) const;  // smallest member > after, -1 when none

    VertexSet intersect(const VertexSet& o) const;
    bool intersects(const VertexSet& o) const;
    bool contains_all(const VertexSet& o) const;  // o subset of this
    std::vector<int> to_vector() const;

    bool operator==(const VertexSet& o) const {
        return n_ == o.n_ && words_ == o.words_;
    }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }
    bool operator<(const VertexSet& o) const;

private:
    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

using Edge = std::pair<int, int>;

// Immutable simple graph. Adjacency is symmetric and irreflexive; all
// operations below are pure, so values can be shared freely.
class Graph {
public:
    Graph() = default;

    // Throws std::invalid_argument on out-of-range ids, loops, or an edge
    // listed twice (a repeated edge signals malformed input).
    Graph(int n, const std::vector<Edge>& edges, std::string label = "");

    int order() const { return n_; }
    bool adjacent(int u, int v) const { return rows_[u].test(v); }
    int degree(int u) const { return rows_[u].count(); }
    const VertexSet& neighbors(int u) const { return rows_[u]; }

    std::vector<Edge> edges() const;  // sorted, u < v
    std::size_t edge_count() const;

    const std::string& label() const { return label_; }

    bool operator==(const Graph& o) const {
        return n_ == o.n_ && rows_ == o.rows_;
    }
    bool operator!=(const Graph& o) const { return !(*this == o); }

private:
    int n_ = 0;
    std::vector<VertexSet> rows_;
    std::string label_;
};

Graph build_graph(int n, const std::vector<Edge>& edges, std::string label = "");

// N_G(u); throws on out-of-range u.
VertexSet neighborhood(const Graph& g, int u);

// k when every vertex has degree k, absent otherwise. Requires order >= 1.
std::optional<int> regular_valency(const Graph& g);

struct Components {
    bool connected = false;
    // One vertex list per component, each sorted; components ordered by
    // least element.
    std::vector<std::vector<int>> parts;
};

// Requires order >= 1.
Components connected_components(const Graph& g);
bool is_connected(const Graph& g);

// Proper 2-coloring of the vertex set. Canonical orientation: the least
// vertex of every connected component lies in side0.
struct Bipartition {
    VertexSet side0, side1;
};

std::optional<Bipartition> bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

struct RThinReport {
    bool thin = true;
    // When thick: the least pair (u, v), u < v, with N(u) = N(v).
    std::optional<Edge> witness;
};

RThinReport r_thinness(const Graph& g);
bool is_r_thin(const Graph& g);

// N(u) and N(v) intersected; u == v allowed (gives N(u)).
VertexSet common_neighbors(const Graph& g, int u, int v);

// One vertex per block (blocks ordered by least element); blocks adjacent
// when some edge of g joins them. An edge inside a block does not create a
// loop, so the result stays simple. Blocks must partition {0..n-1}.
Graph quotient_graph(const Graph& g, const std::vector<std::vector<int>>& blocks);

}  // namespace gps
