#include "gps/products.hpp"

#include <numeric>
#include <stdexcept>

#include "gps/io.hpp"
#include "gps/perm.hpp"

namespace gps {

DirectProduct direct_product(const Graph& gamma, const Graph& sigma) {
    if (gamma.order() < 1 || sigma.order() < 1)
        throw std::invalid_argument("direct_product: empty factor");
    int ng = gamma.order(), ns = sigma.order();
    std::vector<Edge> edges;
    for (const auto& [u, v] : gamma.edges())
        for (const auto& [i, j] : sigma.edges()) {
            edges.emplace_back(u * ns + i, v * ns + j);
            edges.emplace_back(u * ns + j, v * ns + i);
        }
    std::string label;
    if (!gamma.label().empty() && !sigma.label().empty())
        label = gamma.label() + " x " + sigma.label();
    return {gamma, sigma, Graph(ng * ns, edges, label), ng, ns};
}

Graph boolean_square(const Graph& g) {
    std::vector<Edge> edges;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.neighbors(u).intersects(g.neighbors(v))) edges.emplace_back(u, v);
    return Graph(g.order(), edges);
}

bool valency_coprime(const Graph& g, const Graph& h) {
    auto vg = regular_valency(g), vh = regular_valency(h);
    if (!vg || !vh) throw std::invalid_argument("valency_coprime: factor not regular");
    return std::gcd(*vg, *vh) == 1;
}

namespace {

// Does delta divide g, i.e. g ~ delta (trivial divisor) or g ~ delta x lambda
// for some graph lambda of order |g| / |delta|? Returns the cofactor when one
// exists; nullopt in .first when the test itself is out of enumeration range.
struct DivideResult {
    bool testable = true;
    bool divides = false;
    std::optional<Graph> cofactor;
};

DivideResult divides(const Graph& delta, const Graph& g) {
    if (g.order() % delta.order() != 0) return {true, false, std::nullopt};
    int q = g.order() / delta.order();
    if (q == 1) {
        if (isomorphic(delta, g)) return {true, true, std::nullopt};
        return {true, false, std::nullopt};
    }
    if (q > kEnumerateMaxOrder) return {false, false, std::nullopt};
    for (const Graph& lambda : enumerate_graphs(q)) {
        if (delta.edge_count() * lambda.edge_count() * 2 != g.edge_count()) continue;
        if (isomorphic(direct_product(delta, lambda).product, g)) return {true, true, lambda};
    }
    return {true, false, std::nullopt};
}

}  // namespace

CoprimeVerdict coprime_oracle(const Graph& g, const Graph& h, int max_factor_order) {
    if (max_factor_order < 2)
        throw std::invalid_argument("coprime_oracle: max_factor_order must be >= 2");
    if (g.order() < 1 || h.order() < 1)
        throw std::invalid_argument("coprime_oracle: empty graph");

    CoprimeVerdict out;
    bool bound_hit = false;
    std::string note;

    int max_common = std::min(g.order(), h.order());
    for (int d = 2; d <= max_common; ++d) {
        if (g.order() % d != 0 || h.order() % d != 0) continue;
        if (d > max_factor_order) {
            bound_hit = true;
            note = "common divisor " + std::to_string(d) + " exceeds max_factor_order " +
                   std::to_string(max_factor_order);
            continue;
        }
        if (d > kEnumerateMaxOrder) {
            bound_hit = true;
            note = "factor order " + std::to_string(d) + " exceeds the enumeration limit";
            continue;
        }
        for (const Graph& delta : enumerate_graphs(d)) {
            DivideResult dg = divides(delta, g);
            if (!dg.testable) {
                bound_hit = true;
                note = "cofactor order " + std::to_string(g.order() / d) +
                       " exceeds the enumeration limit";
                break;  // no delta of this order is testable against g
            }
            if (!dg.divides) continue;
            DivideResult dh = divides(delta, h);
            if (!dh.testable) {
                bound_hit = true;
                note = "cofactor order " + std::to_string(h.order() / d) +
                       " exceeds the enumeration limit";
                break;
            }
            if (!dh.divides) continue;
            out.kind = CoprimeVerdict::Kind::CommonFactor;
            out.factor = delta;
            out.gamma_cofactor = dg.cofactor;
            out.sigma_cofactor = dh.cofactor;
            return out;
        }
    }

    if (bound_hit) {
        out.kind = CoprimeVerdict::Kind::Inconclusive;
        out.note = note;
    } else {
        out.kind = CoprimeVerdict::Kind::Coprime;
    }
    return out;
}

}  // namespace gps
