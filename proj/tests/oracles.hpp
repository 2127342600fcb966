#pragma once

// Shared fixtures and independent oracles for the test suite. Oracles favour
// the most literal possible computation (full factorial scans, min-over-all-
// relabelings canonical forms) and deliberately share no search machinery
// with the library.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "gps/graph.hpp"
#include "gps/perm.hpp"
#include "gps/sigma.hpp"

namespace oracles {

inline gps::Graph cycle(int n, const std::string& label = "") {
    std::vector<gps::Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    if (n > 2) edges.emplace_back(0, n - 1);
    return gps::build_graph(n, edges, label.empty() ? "C" + std::to_string(n) : label);
}

inline gps::Graph complete(int n, const std::string& label = "") {
    std::vector<gps::Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return gps::build_graph(n, edges, label.empty() ? "K" + std::to_string(n) : label);
}

inline gps::Graph path(int n) {
    std::vector<gps::Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return gps::build_graph(n, edges, "P" + std::to_string(n));
}

inline gps::Graph empty_graph(int n) {
    return gps::build_graph(n, {}, std::to_string(n) + "K1");
}

inline gps::Graph complete_bipartite(int a, int b) {
    std::vector<gps::Edge> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
    return gps::build_graph(a + b, edges, "K" + std::to_string(a) + "," + std::to_string(b));
}

inline gps::Graph disjoint_union(const gps::Graph& g, const gps::Graph& h) {
    std::vector<gps::Edge> edges = g.edges();
    for (auto [u, v] : h.edges()) edges.emplace_back(u + g.order(), v + g.order());
    return gps::build_graph(g.order() + h.order(), edges, g.label() + "+" + h.label());
}

// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline gps::Graph petersen() {
    std::vector<gps::Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(std::min(i, (i + 1) % 5), std::max(i, (i + 1) % 5));
        edges.emplace_back(i, i + 5);
        edges.emplace_back(std::min(5 + i, 5 + (i + 2) % 5), std::max(5 + i, 5 + (i + 2) % 5));
    }
    std::sort(edges.begin(), edges.end());
    return gps::build_graph(10, edges, "Petersen");
}

inline bool preserves_adjacency(const gps::Graph& g, const gps::Permutation& p) {
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.adjacent(u, v) != g.adjacent(p[u], p[v])) return false;
    return true;
}

// Every automorphism by scanning all n! permutations. Keep n small.
inline std::vector<gps::Permutation> automorphisms_full_scan(const gps::Graph& g) {
    std::vector<gps::Permutation> out;
    gps::Permutation p(g.order());
    std::iota(p.begin(), p.end(), 0);
    do {
        if (preserves_adjacency(g, p)) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;  // next_permutation order is lexicographic already
}

// Pruned backtracking that only matches degrees: independent of the
// library's neighbour-degree refinement, still fast enough for products.
inline std::vector<gps::Permutation> automorphisms_degree_backtracking(const gps::Graph& g) {
    int n = g.order();
    std::vector<gps::Permutation> out;
    gps::Permutation p(n, -1);
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self, int u) -> void {
        if (u == n) {
            out.push_back(p);
            return;
        }
        for (int w = 0; w < n; ++w) {
            if (used[w] || g.degree(w) != g.degree(u)) continue;
            bool ok = true;
            for (int v = 0; v < u && ok; ++v) ok = g.adjacent(u, v) == g.adjacent(w, p[v]);
            if (!ok) continue;
            used[w] = true;
            p[u] = w;
            self(self, u + 1);
            used[w] = false;
            p[u] = -1;
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

// All two-fold pairs by a double factorial scan ((n!)^2 adjacency checks
// inside); n <= 6 stays comfortable.
inline std::vector<gps::TwoFoldPair> two_fold_pairs_full_scan(const gps::Graph& g) {
    int n = g.order();
    std::vector<gps::Permutation> perms;
    gps::Permutation p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    std::vector<gps::TwoFoldPair> out;
    for (const auto& alpha : perms)
        for (const auto& beta : perms) {
            bool ok = true;
            for (int u = 0; u < n && ok; ++u)
                for (int v = 0; v < n && ok; ++v)
                    ok = g.adjacent(u, v) == g.adjacent(alpha[u], beta[v]);
            if (ok) out.push_back({alpha, beta});
        }
    return out;  // lexicographic by construction
}

// Isomorphism-class count by brute canonicalisation: every adjacency mask of
// order n, minimised over all n! relabelings, deduplicated.
inline std::size_t count_isomorphism_classes(int n, bool connected_only = false) {
    int bits = n * (n - 1) / 2;
    std::vector<std::vector<int>> pair_index(n, std::vector<int>(n, -1));
    int k = 0;
    // graph6 column-major pair order keeps this comparable across tools.
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            pair_index[u][v] = pair_index[v][u] = k;
            ++k;
        }

    std::vector<gps::Permutation> perms;
    gps::Permutation p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    auto connected = [&](std::uint32_t mask) {
        std::vector<int> seen(n, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int found = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < n; ++v) {
                if (v == u || seen[v] || !((mask >> pair_index[u][v]) & 1)) continue;
                seen[v] = 1;
                ++found;
                stack.push_back(v);
            }
        }
        return found == n;
    };

    std::set<std::uint32_t> classes;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << bits); ++mask) {
        if (connected_only && !connected(mask)) continue;
        std::uint32_t best = ~std::uint32_t{0};
        for (const auto& perm : perms) {
            std::uint32_t image = 0;
            for (int v = 1; v < n; ++v)
                for (int u = 0; u < v; ++u)
                    if ((mask >> pair_index[u][v]) & 1)
                        image |= std::uint32_t{1} << pair_index[perm[u]][perm[v]];
            best = std::min(best, image);
        }
        classes.insert(best);
    }
    return classes.size();
}

}  // namespace oracles
