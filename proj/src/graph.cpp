#include "gps/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>
#include <string>

namespace gps {

// ---- VertexSet ----

int VertexSet::count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
}

bool VertexSet::empty() const {
    for (auto w : words_)
        if (w) return false;
    return true;
}

int VertexSet::first() const { return next(-1); }

int VertexSet::next(int after) const {
    int start = after + 1;
    if (start >= n_) return -1;
    std::size_t wi = static_cast<std::size_t>(start) >> 6;
    std::uint64_t w = words_[wi] >> (start & 63);
    if (w) return start + std::countr_zero(w);
    for (++wi; wi < words_.size(); ++wi)
        if (words_[wi]) return static_cast<int>(wi * 64) + std::countr_zero(words_[wi]);
    return -1;
}

VertexSet VertexSet::intersect(const VertexSet& o) const {
    if (n_ != o.n_) throw std::invalid_argument("VertexSet::intersect: universe mismatch");
    VertexSet r(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
    return r;
}

bool VertexSet::intersects(const VertexSet& o) const {
    if (n_ != o.n_) throw std::invalid_argument("VertexSet::intersects: universe mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & o.words_[i]) return true;
    return false;
}

bool VertexSet::contains_all(const VertexSet& o) const {
    if (n_ != o.n_) throw std::invalid_argument("VertexSet::contains_all: universe mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (o.words_[i] & ~words_[i]) return false;
    return true;
}

std::vector<int> VertexSet::to_vector() const {
    std::vector<int> out;
    for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
    return out;
}

bool VertexSet::operator<(const VertexSet& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return words_ < o.words_;
}

// ---- Graph ----

Graph::Graph(int n, const std::vector<Edge>& edges, std::string label)
    : n_(n), label_(std::move(label)) {
    if (n < 0) throw std::invalid_argument("Graph: negative order");
    rows_.assign(n_, VertexSet(n_));
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::invalid_argument("Graph: vertex id out of range in edge (" +
                                        std::to_string(u) + ", " + std::to_string(v) + ")");
        if (u == v)
            throw std::invalid_argument("Graph: loop at vertex " + std::to_string(u));
        if (rows_[u].test(v))
            throw std::invalid_argument("Graph: duplicate edge (" + std::to_string(u) +
                                        ", " + std::to_string(v) + ")");
        rows_[u].set(v);
        rows_[v].set(u);
    }
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
        for (int v = rows_[u].next(u); v >= 0; v = rows_[u].next(v)) out.emplace_back(u, v);
    return out;
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (int u = 0; u < n_; ++u) twice += static_cast<std::size_t>(rows_[u].count());
    return twice / 2;
}

Graph build_graph(int n, const std::vector<Edge>& edges, std::string label) {
    return Graph(n, edges, std::move(label));
}

VertexSet neighborhood(const Graph& g, int u) {
    if (u < 0 || u >= g.order())
        throw std::invalid_argument("neighborhood: vertex out of range");
    return g.neighbors(u);
}

std::optional<int> regular_valency(const Graph& g) {
    if (g.order() < 1) throw std::invalid_argument("regular_valency: empty graph");
    int k = g.degree(0);
    for (int u = 1; u < g.order(); ++u)
        if (g.degree(u) != k) return std::nullopt;
    return k;
}

Components connected_components(const Graph& g) {
    if (g.order() < 1) throw std::invalid_argument("connected_components: empty graph");
    Components out;
    std::vector<char> seen(g.order(), 0);
    for (int root = 0; root < g.order(); ++root) {
        if (seen[root]) continue;
        std::vector<int> part;
        std::deque<int> queue{root};
        seen[root] = 1;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            part.push_back(u);
            const VertexSet& nb = g.neighbors(u);
            for (int v = nb.first(); v >= 0; v = nb.next(v)) {
                if (!seen[v]) {
                    seen[v] = 1;
                    queue.push_back(v);
                }
            }
        }
        std::sort(part.begin(), part.end());
        out.parts.push_back(std::move(part));
    }
    out.connected = out.parts.size() == 1;
    return out;
}

bool is_connected(const Graph& g) { return connected_components(g).connected; }

std::optional<Bipartition> bipartition(const Graph& g) {
    if (g.order() < 1) throw std::invalid_argument("bipartition: empty graph");
    std::vector<int> color(g.order(), -1);
    Bipartition out{VertexSet(g.order()), VertexSet(g.order())};
    for (int root = 0; root < g.order(); ++root) {
        if (color[root] >= 0) continue;
        color[root] = 0;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            const VertexSet& nb = g.neighbors(u);
            for (int v = nb.first(); v >= 0; v = nb.next(v)) {
                if (color[v] < 0) {
                    color[v] = 1 - color[u];
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    return std::nullopt;  // odd closed walk
                }
            }
        }
    }
    for (int u = 0; u < g.order(); ++u) (color[u] == 0 ? out.side0 : out.side1).set(u);
    return out;
}

bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

RThinReport r_thinness(const Graph& g) {
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.neighbors(u) == g.neighbors(v))
                return {false, Edge{u, v}};
    return {true, std::nullopt};
}

bool is_r_thin(const Graph& g) { return r_thinness(g).thin; }

VertexSet common_neighbors(const Graph& g, int u, int v) {
    if (u < 0 || u >= g.order() || v < 0 || v >= g.order())
        throw std::invalid_argument("common_neighbors: vertex out of range");
    return g.neighbors(u).intersect(g.neighbors(v));
}

Graph quotient_graph(const Graph& g, const std::vector<std::vector<int>>& blocks) {
    std::vector<int> block_of(g.order(), -1);
    std::vector<std::vector<int>> sorted = blocks;
    for (auto& b : sorted) {
        if (b.empty()) throw std::invalid_argument("quotient_graph: empty block");
        std::sort(b.begin(), b.end());
    }
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    for (std::size_t bi = 0; bi < sorted.size(); ++bi) {
        for (int v : sorted[bi]) {
            if (v < 0 || v >= g.order())
                throw std::invalid_argument("quotient_graph: block member out of range");
            if (block_of[v] >= 0)
                throw std::invalid_argument("quotient_graph: blocks overlap at vertex " +
                                            std::to_string(v));
            block_of[v] = static_cast<int>(bi);
        }
    }
    for (int v = 0; v < g.order(); ++v)
        if (block_of[v] < 0)
            throw std::invalid_argument("quotient_graph: vertex " + std::to_string(v) +
                                        " not covered by any block");

    std::vector<Edge> qedges;
    Graph probe(static_cast<int>(sorted.size()), {});
    std::vector<VertexSet> seen(sorted.size(), VertexSet(static_cast<int>(sorted.size())));
    for (const auto& [u, v] : g.edges()) {
        int a = block_of[u], b = block_of[v];
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        if (!seen[a].test(b)) {
            seen[a].set(b);
            qedges.emplace_back(a, b);
        }
    }
    return Graph(static_cast<int>(sorted.size()), qedges);
}

}  // namespace gps
