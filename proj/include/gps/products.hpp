#pragma once

// Direct (tensor) products, Boolean squares, and coprimality of graphs with
// respect to the direct product.

#include <optional>
#include <string>

#include "gps/graph.hpp"

namespace gps {

// Direct product with the fixed index convention (u, i) -> u * n_sigma + i.
// The factors travel with the product so downstream analyses can project.
struct DirectProduct {
    Graph gamma, sigma, product;
    int n_gamma = 0, n_sigma = 0;

    int index(int u, int i) const { return u * n_sigma + i; }
    int pi_gamma(int p) const { return p / n_sigma; }
    int pi_sigma(int p) const { return p % n_sigma; }
};

// (u,i) ~ (v,j) iff u ~ v and i ~ j. Throws when either factor is empty.
DirectProduct direct_product(const Graph& gamma, const Graph& sigma);

// B(g): same vertex set, u ~ v iff u != v and they share a neighbour.
Graph boolean_square(const Graph& g);

// gcd(val(g), val(h)) == 1. Throws when either graph is not regular.
bool valency_coprime(const Graph& g, const Graph& h);

struct CoprimeVerdict {
    enum class Kind { Coprime, CommonFactor, Inconclusive };
    Kind kind = Kind::Inconclusive;
    // CommonFactor witnesses: g ~ factor x gamma_cofactor and
    // h ~ factor x sigma_cofactor. A missing cofactor means the factor is the
    // graph itself (the trivial divisor).
    std::optional<Graph> factor, gamma_cofactor, sigma_cofactor;
    std::string note;  // for Inconclusive: which bound was hit
};

// Exhaustive search for a common direct-product factor of order
// 2..max_factor_order. Divisor candidates and cofactors are drawn from
// enumerate_graphs (so cofactor orders are capped at 8); any common divisor
// of the two orders that the bounds leave untested yields Inconclusive, never
// a silent Coprime.
CoprimeVerdict coprime_oracle(const Graph& g, const Graph& h, int max_factor_order = 4);

}  // namespace gps
