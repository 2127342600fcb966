#include "gps/perm.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace gps {

Permutation identity_permutation(int n) {
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

bool is_permutation(const Permutation& p) {
    std::vector<char> seen(p.size(), 0);
    for (int v : p) {
        if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw std::invalid_argument("compose: degree mismatch");
    Permutation r(a.size());
    for (std::size_t u = 0; u < a.size(); ++u) r[u] = b[a[u]];
    return r;
}

Permutation inverse(const Permutation& a) {
    Permutation r(a.size());
    for (std::size_t u = 0; u < a.size(); ++u) r[a[u]] = static_cast<int>(u);
    return r;
}

VertexSet apply(const Permutation& p, const VertexSet& s) {
    if (static_cast<int>(p.size()) != s.universe())
        throw std::invalid_argument("apply: universe mismatch");
    VertexSet r(s.universe());
    for (int v = s.first(); v >= 0; v = s.next(v)) r.set(p[v]);
    return r;
}

Graph relabel(const Graph& g, const Permutation& p) {
    if (static_cast<int>(p.size()) != g.order() || !is_permutation(p))
        throw std::invalid_argument("relabel: not a permutation of the vertex set");
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges()) edges.emplace_back(p[u], p[v]);
    return Graph(g.order(), edges, g.label());
}

bool GroupElements::contains(const Permutation& p) const {
    return std::binary_search(elements.begin(), elements.end(), p);
}

namespace {

// (degree, sorted neighbour degrees); preserved by automorphisms and by
// both coordinates of a two-fold pair, so safe as a candidate filter.
std::vector<std::vector<int>> refinement_keys(const Graph& g) {
    std::vector<std::vector<int>> keys(g.order());
    for (int u = 0; u < g.order(); ++u) {
        std::vector<int> k{g.degree(u)};
        const VertexSet& nb = g.neighbors(u);
        for (int v = nb.first(); v >= 0; v = nb.next(v)) k.push_back(g.degree(v));
        std::sort(k.begin() + 1, k.end());
        keys[u] = std::move(k);
    }
    return keys;
}

struct AutSearch {
    const Graph& g;
    std::uint64_t cap;
    std::vector<int> order;                    // search order over vertices
    std::vector<std::vector<int>> candidates;  // per search position
    std::vector<int> img;
    std::vector<char> used;
    std::vector<Permutation> found;

    AutSearch(const Graph& graph, std::uint64_t c) : g(graph), cap(c) {
        auto keys = refinement_keys(g);

        // Group vertices by key; a vertex may only map within its class.
        std::vector<std::vector<int>> classes;
        std::vector<int> class_of(g.order(), -1);
        {
            std::vector<int> ids(g.order());
            std::iota(ids.begin(), ids.end(), 0);
            std::stable_sort(ids.begin(), ids.end(),
                             [&](int a, int b) { return keys[a] < keys[b]; });
            for (int id : ids) {
                if (classes.empty() || keys[classes.back().front()] != keys[id])
                    classes.push_back({id});
                else
                    classes.back().push_back(id);
            }
            for (std::size_t i = 0; i < classes.size(); ++i)
                for (int v : classes[i]) class_of[v] = static_cast<int>(i);
        }

        // Most-constrained-first order: each next vertex maximises the number
        // of already-placed neighbours (ties: smaller class, lower id), so the
        // adjacency check prunes immediately instead of after a free prefix of
        // mutually non-adjacent vertices.
        std::vector<char> placed(g.order(), 0);
        std::vector<int> placed_nb(g.order(), 0);
        for (int pos = 0; pos < g.order(); ++pos) {
            int best = -1;
            for (int v = 0; v < g.order(); ++v) {
                if (placed[v]) continue;
                if (best < 0) {
                    best = v;
                    continue;
                }
                if (placed_nb[v] != placed_nb[best]) {
                    if (placed_nb[v] > placed_nb[best]) best = v;
                    continue;
                }
                if (classes[class_of[v]].size() < classes[class_of[best]].size()) best = v;
            }
            order.push_back(best);
            candidates.push_back(classes[class_of[best]]);
            placed[best] = 1;
            const VertexSet& nb = g.neighbors(best);
            for (int w = nb.first(); w >= 0; w = nb.next(w))
                if (!placed[w]) ++placed_nb[w];
        }
        img.assign(g.order(), -1);
        used.assign(g.order(), 0);
    }

    void run(int depth) {
        if (depth == g.order()) {
            if (found.size() >= cap)
                throw CapExceeded("automorphisms: more than " + std::to_string(cap) +
                                  " elements (raise the cap to proceed)");
            found.push_back(img);
            return;
        }
        int v = order[depth];
        for (int w : candidates[depth]) {
            if (used[w]) continue;
            bool ok = true;
            for (int d = 0; d < depth; ++d) {
                int u = order[d];
                if (g.adjacent(v, u) != g.adjacent(w, img[u])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            img[v] = w;
            used[w] = 1;
            run(depth + 1);
            img[v] = -1;
            used[w] = 0;
        }
    }
};

}  // namespace

namespace {

// Vertices with identical (open) neighbourhoods can be permuted freely, so
// the class sizes give the cheap lower bound |Aut| >= prod(c_i !). Saturates
// at limit + 1 to avoid overflow.
std::uint64_t twin_factorial_bound(const Graph& g, std::uint64_t limit) {
    std::vector<int> ids(g.order());
    std::iota(ids.begin(), ids.end(), 0);
    std::sort(ids.begin(), ids.end(),
              [&](int a, int b) { return g.neighbors(a) < g.neighbors(b); });
    std::uint64_t bound = 1;
    std::size_t run = 1;
    for (std::size_t i = 1; i <= ids.size(); ++i) {
        if (i < ids.size() && g.neighbors(ids[i]) == g.neighbors(ids[i - 1])) {
            ++run;
            if (bound > limit / run) return limit + 1;
            bound *= run;  // running product of factorials, factor by factor
        } else {
            run = 1;
        }
    }
    return bound;
}

}  // namespace

GroupElements automorphisms(const Graph& g, std::uint64_t cap) {
    if (g.order() < 1) throw std::invalid_argument("automorphisms: empty graph");
    if (twin_factorial_bound(g, cap) > cap)
        throw CapExceeded("automorphisms: more than " + std::to_string(cap) +
                          " elements (raise the cap to proceed)");
    AutSearch search(g, cap);
    search.run(0);
    std::sort(search.found.begin(), search.found.end());
    return {g.order(), std::move(search.found)};
}

GroupElements automorphisms_bruteforce(const Graph& g) {
    if (g.order() < 1) throw std::invalid_argument("automorphisms_bruteforce: empty graph");
    if (g.order() > kBruteForceMaxOrder)
        throw std::invalid_argument("automorphisms_bruteforce: order > 8");
    GroupElements out{g.order(), {}};
    Permutation p = identity_permutation(g.order());
    do {
        bool ok = true;
        for (int u = 0; u < g.order() && ok; ++u)
            for (int v = u + 1; v < g.order(); ++v)
                if (g.adjacent(u, v) != g.adjacent(p[u], p[v])) {
                    ok = false;
                    break;
                }
        if (ok) out.elements.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;  // next_permutation order is already lexicographic
}

namespace {

// Natural-order backtracking so that the first complete map is the
// lexicographically least image array.
bool extend_isomorphism(const Graph& g, const Graph& h,
                        const std::vector<std::vector<int>>& gkeys,
                        const std::vector<std::vector<int>>& hkeys, int v,
                        std::vector<int>& img, std::vector<char>& used) {
    if (v == g.order()) return true;
    for (int w = 0; w < h.order(); ++w) {
        if (used[w] || gkeys[v] != hkeys[w]) continue;
        bool ok = true;
        for (int u = 0; u < v; ++u)
            if (g.adjacent(v, u) != h.adjacent(w, img[u])) {
                ok = false;
                break;
            }
        if (!ok) continue;
        img[v] = w;
        used[w] = 1;
        if (extend_isomorphism(g, h, gkeys, hkeys, v + 1, img, used)) return true;
        used[w] = 0;
    }
    return false;
}

}  // namespace

std::optional<Permutation> find_isomorphism(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.edge_count() != h.edge_count()) return std::nullopt;
    if (g.order() == 0) return Permutation{};
    auto gkeys = refinement_keys(g);
    auto hkeys = refinement_keys(h);
    {
        auto a = gkeys;
        auto b = hkeys;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return std::nullopt;
    }
    std::vector<int> img(g.order(), -1);
    std::vector<char> used(g.order(), 0);
    if (extend_isomorphism(g, h, gkeys, hkeys, 0, img, used)) return img;
    return std::nullopt;
}

bool isomorphic(const Graph& g, const Graph& h) { return find_isomorphism(g, h).has_value(); }

std::vector<std::vector<int>> orbits(const GroupElements& group) {
    int n = group.degree;
    std::vector<int> root(n);
    std::iota(root.begin(), root.end(), 0);
    // Union-find over images.
    auto find = [&](int v) {
        while (root[v] != v) v = root[v] = root[root[v]];
        return v;
    };
    for (const auto& p : group.elements)
        for (int u = 0; u < n; ++u) {
            int a = find(u), b = find(p[u]);
            if (a != b) root[std::max(a, b)] = std::min(a, b);
        }
    std::vector<std::vector<int>> out;
    std::vector<int> index(n, -1);
    for (int u = 0; u < n; ++u) {
        int r = find(u);
        if (index[r] < 0) {
            index[r] = static_cast<int>(out.size());
            out.push_back({});
        }
        out[index[r]].push_back(u);
    }
    return out;
}

bool is_vertex_transitive(const Graph& g, std::uint64_t cap) {
    if (g.order() < 1) throw std::invalid_argument("is_vertex_transitive: empty graph");
    return orbits(automorphisms(g, cap)).size() == 1;
}

}  // namespace gps
