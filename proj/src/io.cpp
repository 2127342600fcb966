#include "gps/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace gps {

// ---- graph6 ----

Graph parse_graph6(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty graph6 string");
    unsigned char head = static_cast<unsigned char>(text[0]);
    if (head == 126)
        throw ParseError("graph6 multi-byte order form not supported (order > 62)");
    if (head < 63 || head > 63 + kGraph6MaxOrder)
        throw ParseError("graph6 order byte out of range");
    int n = head - 63;
    int bits = n * (n - 1) / 2;
    std::size_t nbytes = static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() != 1 + nbytes)
        throw ParseError("graph6 length mismatch: order " + std::to_string(n) + " needs " +
                         std::to_string(nbytes) + " data bytes, got " +
                         std::to_string(text.size() - 1));

    std::vector<Edge> edges;
    int k = 0;  // bit index over the upper triangle, column-major
    int col = 1, row = 0;
    for (std::size_t bi = 0; bi < nbytes; ++bi) {
        unsigned char byte = static_cast<unsigned char>(text[1 + bi]);
        if (byte < 63 || byte > 126)
            throw ParseError("graph6 data byte out of range at position " + std::to_string(bi + 1));
        unsigned val = byte - 63;
        for (int b = 5; b >= 0; --b, ++k) {
            unsigned bit = (val >> b) & 1u;
            if (k >= bits) {
                if (bit) throw ParseError("graph6 nonzero padding bits");
                continue;
            }
            if (bit) edges.emplace_back(row, col);
            if (++row == col) {
                row = 0;
                ++col;
            }
        }
    }
    return Graph(n, edges);
}

std::string emit_graph6(const Graph& g) {
    if (g.order() > kGraph6MaxOrder)
        throw std::invalid_argument("emit_graph6: order > 62 unsupported");
    int n = g.order();
    int bits = n * (n - 1) / 2;
    std::string out(1 + static_cast<std::size_t>((bits + 5) / 6), static_cast<char>(63));
    out[0] = static_cast<char>(63 + n);
    int k = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row, ++k)
            if (g.adjacent(row, col))
                out[1 + k / 6] = static_cast<char>(out[1 + k / 6] + (1 << (5 - k % 6)));
    return out;
}

// ---- edge-list text ----

Graph parse_edgelist(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<Edge> edges;
    std::set<Edge> dup;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        std::istringstream fields(line);
        if (n < 0) {
            std::string keyword;
            fields >> keyword;
            if (keyword != "n") throw ParseError("expected header 'n <order>'", lineno);
            long order = -1;
            if (!(fields >> order) || order < 0)
                throw ParseError("bad vertex count in header", lineno);
            std::string rest;
            if (fields >> rest) throw ParseError("trailing tokens after header", lineno);
            n = static_cast<int>(order);
            continue;
        }
        long u, v;
        if (!(fields >> u >> v)) throw ParseError("expected 'u v' edge line", lineno);
        std::string rest;
        if (fields >> rest) throw ParseError("trailing tokens on edge line", lineno);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("vertex id out of range for order " + std::to_string(n), lineno);
        if (u == v) throw ParseError("loop at vertex " + std::to_string(u), lineno);
        Edge e{static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v))};
        if (!dup.insert(e).second) throw ParseError("duplicate edge", lineno);
        edges.push_back(e);
    }
    if (n < 0) throw ParseError("missing header 'n <order>'", lineno ? lineno : 1);
    return Graph(n, edges);
}

// ---- canonical form ----

namespace {

// Backtracking minimisation of the packed upper-triangle bits. Positions are
// filled left to right; placing position p reveals exactly column p of the
// bit string, so prefixes compare cleanly block by block.
struct CanonSearch {
    const Graph& g;
    int n, m;
    std::vector<int> perm;  // position -> original vertex
    std::vector<char> used;
    std::vector<std::uint32_t> col;       // current column blocks, col[p] has p bits
    std::vector<std::uint32_t> best_col;
    std::vector<int> best_perm;

    explicit CanonSearch(const Graph& graph)
        : g(graph),
          n(graph.order()),
          m(graph.order() * (graph.order() - 1) / 2),
          perm(graph.order(), -1),
          used(graph.order(), 0),
          col(graph.order(), 0),
          best_col(graph.order(), 0) {}

    std::uint32_t block(int p, int w) const {
        std::uint32_t b = 0;
        for (int i = 0; i < p; ++i) b = (b << 1) | (g.adjacent(perm[i], w) ? 1u : 0u);
        return b;
    }

    void adopt_current_as_best() {
        best_perm = perm;
        for (int p = 1; p < n; ++p) best_col[p] = col[p];
    }

    // Fill positions depth..n-1 greedily by least block value (ties by vertex
    // id) and record the completion as the new best.
    void greedy_complete(int depth) {
        std::vector<int> chosen;
        for (int p = depth; p < n; ++p) {
            int pick = -1;
            std::uint32_t pick_block = 0;
            for (int w = 0; w < n; ++w) {
                if (used[w]) continue;
                std::uint32_t b = block(p, w);
                if (pick < 0 || b < pick_block) {
                    pick = w;
                    pick_block = b;
                }
            }
            perm[p] = pick;
            used[pick] = 1;
            col[p] = pick_block;
            chosen.push_back(pick);
        }
        adopt_current_as_best();
        for (int i = static_cast<int>(chosen.size()) - 1; i >= 0; --i) {
            used[chosen[i]] = 0;
            perm[depth + i] = -1;
        }
    }

    // tight: the prefix equals the best prefix so far.
    void dfs(int depth, bool tight) {
        if (depth == n) return;  // equal to best all the way down
        for (int w = 0; w < n; ++w) {
            if (used[w]) continue;
            std::uint32_t b = block(depth, w);
            bool now_tight = tight;
            if (tight) {
                if (b > best_col[depth]) continue;
                if (b < best_col[depth]) now_tight = false;
            }
            perm[depth] = w;
            used[w] = 1;
            col[depth] = b;
            if (!now_tight) {
                // Strictly better prefix: rebase best on a greedy completion,
                // then keep searching this subtree against the new best.
                greedy_complete(depth + 1);
                dfs(depth + 1, true);
            } else {
                dfs(depth + 1, true);
            }
            used[w] = 0;
            perm[depth] = -1;
        }
    }

    void run() {
        greedy_complete(0);
        dfs(0, true);
    }

    std::uint32_t value() const {
        std::uint32_t v = 0;
        for (int p = 1; p < n; ++p) v = (v << p) | best_col[p];
        return v;
    }
};

struct CanonResult {
    std::uint32_t bits;
    Permutation labeling;  // original vertex -> canonical position
};

CanonResult canonical_search(const Graph& g) {
    if (g.order() < 1 || g.order() > kEnumerateMaxOrder)
        throw std::invalid_argument("canonical form requires 1 <= order <= 8");
    CanonSearch s(g);
    s.run();
    Permutation labeling(g.order());
    for (int pos = 0; pos < g.order(); ++pos) labeling[s.best_perm[pos]] = pos;
    return {s.value(), labeling};
}

}  // namespace

std::uint32_t canonical_bits(const Graph& g) { return canonical_search(g).bits; }

Permutation canonical_labeling(const Graph& g) { return canonical_search(g).labeling; }

std::string canonical_graph6(const Graph& g) {
    return emit_graph6(relabel(g, canonical_labeling(g)));
}

// ---- enumeration ----

std::vector<Graph> enumerate_graphs(int n, bool connected_only) {
    if (n < 1 || n > kEnumerateMaxOrder)
        throw std::invalid_argument("enumerate_graphs requires 1 <= n <= 8");
    std::vector<Graph> reps{Graph(1, {})};
    for (int k = 2; k <= n; ++k) {
        std::set<std::uint32_t> seen;
        std::vector<std::pair<std::uint32_t, Graph>> next;
        for (const Graph& base : reps) {
            auto base_edges = base.edges();
            for (unsigned mask = 0; mask < (1u << (k - 1)); ++mask) {
                auto edges = base_edges;
                for (int i = 0; i < k - 1; ++i)
                    if ((mask >> i) & 1u) edges.emplace_back(i, k - 1);
                Graph cand(k, edges);
                auto canon = canonical_search(cand);
                if (seen.insert(canon.bits).second)
                    next.emplace_back(canon.bits, relabel(cand, canon.labeling));
            }
        }
        std::sort(next.begin(), next.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        reps.clear();
        for (auto& [bits, graph] : next) reps.push_back(std::move(graph));
    }
    if (connected_only) {
        std::vector<Graph> filtered;
        for (auto& g : reps)
            if (is_connected(g)) filtered.push_back(std::move(g));
        reps = std::move(filtered);
    }
    return reps;
}

}  // namespace gps
