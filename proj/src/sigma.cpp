#include "gps/sigma.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace gps {

bool is_two_fold(const Graph& g, const Permutation& alpha, const Permutation& beta) {
    int n = g.order();
    if (static_cast<int>(alpha.size()) != n || static_cast<int>(beta.size()) != n)
        throw std::invalid_argument("is_two_fold: degree mismatch");
    for (int u = 0; u < n; ++u)
        if (apply(beta, g.neighbors(u)) != g.neighbors(alpha[u])) return false;
    return true;
}

std::optional<Permutation> two_fold_partner(const Graph& g, const Permutation& alpha) {
    if (static_cast<int>(alpha.size()) != g.order() || !is_permutation(alpha))
        throw std::invalid_argument("two_fold_partner: not a permutation of V(G)");
    if (!is_r_thin(g))
        throw std::invalid_argument("two_fold_partner: graph is R-thick, partner not unique");
    std::map<VertexSet, int> by_neighborhood;
    for (int v = 0; v < g.order(); ++v) by_neighborhood.emplace(g.neighbors(v), v);
    Permutation beta(g.order());
    for (int v = 0; v < g.order(); ++v) {
        auto it = by_neighborhood.find(apply(alpha, g.neighbors(v)));
        if (it == by_neighborhood.end()) return std::nullopt;
        beta[v] = it->second;
    }
    return beta;  // injective because g is R-thin, hence a permutation
}

namespace {

// Same candidate filter as the automorphism search; both coordinates of a
// two-fold pair preserve degree and neighbour-degree multisets.
std::vector<std::vector<int>> pair_keys(const Graph& g) {
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

struct PairSearch {
    const Graph& g;
    std::uint64_t cap;
    std::vector<int> order;
    std::vector<std::vector<int>> candidates;
    std::vector<int> aimg, bimg;
    std::vector<char> aused, bused;
    std::vector<TwoFoldPair> found;

    PairSearch(const Graph& graph, std::uint64_t c) : g(graph), cap(c) {
        auto keys = pair_keys(g);
        std::vector<int> ids(g.order());
        std::iota(ids.begin(), ids.end(), 0);
        std::stable_sort(ids.begin(), ids.end(),
                         [&](int a, int b) { return keys[a] < keys[b]; });
        std::vector<std::vector<int>> classes;
        for (int id : ids) {
            if (classes.empty() || keys[classes.back().front()] != keys[id])
                classes.push_back({id});
            else
                classes.back().push_back(id);
        }
        std::stable_sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return a.front() < b.front();
        });
        for (const auto& cls : classes)
            for (int v : cls) {
                order.push_back(v);
                candidates.push_back(cls);
            }
        aimg.assign(g.order(), -1);
        bimg.assign(g.order(), -1);
        aused.assign(g.order(), 0);
        bused.assign(g.order(), 0);
    }

    void run(int depth) {
        if (depth == g.order()) {
            if (found.size() >= cap)
                throw CapExceeded("two_fold_pairs: more than " + std::to_string(cap) +
                                  " pairs (raise the cap to proceed)");
            found.push_back({aimg, bimg});
            return;
        }
        int v = order[depth];
        for (int a : candidates[depth]) {
            if (aused[a]) continue;
            bool ok = true;
            for (int d = 0; d < depth && ok; ++d)
                ok = g.adjacent(v, order[d]) == g.adjacent(a, bimg[order[d]]);
            if (!ok) continue;
            aimg[v] = a;
            aused[a] = 1;
            for (int b : candidates[depth]) {
                if (bused[b]) continue;
                bool fine = true;
                for (int d = 0; d <= depth && fine; ++d)
                    fine = g.adjacent(order[d], v) == g.adjacent(aimg[order[d]], b);
                if (!fine) continue;
                bimg[v] = b;
                bused[b] = 1;
                run(depth + 1);
                bimg[v] = -1;
                bused[b] = 0;
            }
            aimg[v] = -1;
            aused[a] = 0;
        }
    }
};

}  // namespace

std::vector<TwoFoldPair> two_fold_pairs(const Graph& g, std::uint64_t cap) {
    if (g.order() < 1) throw std::invalid_argument("two_fold_pairs: empty graph");
    std::vector<TwoFoldPair> out;
    if (g.order() <= kBruteForceMaxOrder && is_r_thin(g)) {
        Permutation alpha = identity_permutation(g.order());
        do {
            auto beta = two_fold_partner(g, alpha);
            if (!beta) continue;
            if (out.size() >= cap)
                throw CapExceeded("two_fold_pairs: more than " + std::to_string(cap) +
                                  " pairs (raise the cap to proceed)");
            out.push_back({alpha, *beta});
        } while (std::next_permutation(alpha.begin(), alpha.end()));
        return out;  // alpha ascending, beta determined: already sorted
    }
    PairSearch search(g, cap);
    search.run(0);
    out = std::move(search.found);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_sigma_automorphism(const Graph& g, const Graph& s,
                           const std::vector<Permutation>& tuple) {
    if (static_cast<int>(tuple.size()) != s.order())
        throw std::invalid_argument("is_sigma_automorphism: tuple arity != |V(S)|");
    for (const auto& p : tuple)
        if (static_cast<int>(p.size()) != g.order() || !is_permutation(p))
            throw std::invalid_argument("is_sigma_automorphism: bad tuple entry");
    for (const auto& [i, j] : s.edges())
        if (!is_two_fold(g, tuple[i], tuple[j])) return false;
    return true;
}

namespace {

struct SigmaSearchBase {
    const Graph& s;
    std::vector<Permutation> domain;          // distinct first coordinates, sorted
    std::vector<std::vector<int>> compat;     // per value: sorted compatible values
    std::vector<int> order;                   // BFS order over V(S), component by component
    std::vector<std::vector<int>> prior_nbrs; // per position: earlier S-neighbours

    SigmaSearchBase(const Graph& g, const Graph& sigma, std::uint64_t cap) : s(sigma) {
        if (s.order() < 2)
            throw std::invalid_argument("sigma_automorphism_group: |V(S)| must be >= 2");
        for (int i = 0; i < s.order(); ++i)
            if (s.degree(i) == 0)
                throw std::invalid_argument(
                    "sigma_automorphism_group: S has an isolated vertex (" +
                    std::to_string(i) + ")");

        auto pairs = two_fold_pairs(g, cap);
        for (const auto& p : pairs)
            if (domain.empty() || domain.back() != p.alpha) domain.push_back(p.alpha);
        auto index_of = [&](const Permutation& p) {
            return static_cast<int>(
                std::lower_bound(domain.begin(), domain.end(), p) - domain.begin());
        };
        compat.resize(domain.size());
        // Both coordinates of every pair occur as first coordinates, since
        // (alpha, beta) two-fold implies (beta, alpha) two-fold.
        for (const auto& p : pairs) compat[index_of(p.alpha)].push_back(index_of(p.beta));

        std::vector<char> seen(s.order(), 0);
        for (int root = 0; root < s.order(); ++root) {
            if (seen[root]) continue;
            seen[root] = 1;
            std::size_t head = order.size();
            order.push_back(root);
            while (head < order.size()) {
                int u = order[head++];
                const VertexSet& nb = s.neighbors(u);
                for (int v = nb.first(); v >= 0; v = nb.next(v))
                    if (!seen[v]) {
                        seen[v] = 1;
                        order.push_back(v);
                    }
            }
        }
        prior_nbrs.resize(s.order());
        std::vector<int> position(s.order());
        for (std::size_t k = 0; k < order.size(); ++k) position[order[k]] = static_cast<int>(k);
        for (std::size_t k = 0; k < order.size(); ++k) {
            const VertexSet& nb = s.neighbors(order[k]);
            for (int v = nb.first(); v >= 0; v = nb.next(v))
                if (position[v] < static_cast<int>(k)) prior_nbrs[k].push_back(v);
        }
    }

    bool allowed(int value, const std::vector<int>& assign, std::size_t k) const {
        for (int j : prior_nbrs[k]) {
            const auto& row = compat[assign[j]];
            if (!std::binary_search(row.begin(), row.end(), value)) return false;
        }
        return true;
    }
};

}  // namespace

SigmaAutGroup sigma_automorphism_group(const Graph& g, const Graph& s, std::uint64_t cap) {
    SigmaSearchBase base(g, s, cap);
    SigmaAutGroup out{g.order(), s.order(), {}};
    std::vector<int> assign(s.order(), -1);
    std::vector<SigmaAutomorphism>& elements = out.elements;

    auto dfs = [&](auto&& self, std::size_t k) -> void {
        if (k == base.order.size()) {
            if (elements.size() >= cap)
                throw CapExceeded("sigma_automorphism_group: more than " +
                                  std::to_string(cap) + " elements (raise the cap)");
            SigmaAutomorphism el;
            el.tuple.reserve(assign.size());
            for (int value : assign) el.tuple.push_back(base.domain[value]);
            elements.push_back(std::move(el));
            return;
        }
        int vertex = base.order[k];
        if (base.prior_nbrs[k].empty()) {
            for (std::size_t value = 0; value < base.domain.size(); ++value) {
                assign[vertex] = static_cast<int>(value);
                self(self, k + 1);
            }
        } else {
            for (int value : base.compat[assign[base.prior_nbrs[k].front()]]) {
                if (!base.allowed(value, assign, k)) continue;
                assign[vertex] = value;
                self(self, k + 1);
            }
        }
        assign[vertex] = -1;
    };
    dfs(dfs, 0);
    std::sort(elements.begin(), elements.end());
    return out;
}

std::optional<SigmaAutomorphism> find_nondiagonal(const Graph& g, const Graph& s,
                                                  std::uint64_t cap) {
    SigmaSearchBase base(g, s, cap);
    std::vector<int> assign(s.order(), -1);
    std::uint64_t leaves = 0;
    std::optional<SigmaAutomorphism> hit;

    int anchor = base.order.front();
    auto dfs = [&](auto&& self, std::size_t k) -> bool {
        if (k == base.order.size()) {
            if (++leaves > cap)
                throw CapExceeded("find_nondiagonal: more than " + std::to_string(cap) +
                                  " candidate tuples (raise the cap)");
            for (int value : assign)
                if (value != assign[anchor]) {
                    SigmaAutomorphism el;
                    for (int v : assign) el.tuple.push_back(base.domain[v]);
                    hit = std::move(el);
                    return true;
                }
            return false;
        }
        int vertex = base.order[k];
        std::vector<int> values;
        if (base.prior_nbrs[k].empty()) {
            values.resize(base.domain.size());
            std::iota(values.begin(), values.end(), 0);
        } else {
            for (int value : base.compat[assign[base.prior_nbrs[k].front()]])
                if (base.allowed(value, assign, k)) values.push_back(value);
        }
        // Diagonal-last: values equal to the anchor's go to the back so the
        // first complete tuple is nondiagonal whenever one exists.
        if (k > 0)
            std::stable_partition(values.begin(), values.end(),
                                  [&](int v) { return v != assign[anchor]; });
        for (int value : values) {
            assign[vertex] = value;
            if (self(self, k + 1)) return true;
        }
        assign[vertex] = -1;
        return false;
    };
    dfs(dfs, 0);
    return hit;
}

}  // namespace gps
