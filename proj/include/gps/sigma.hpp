#pragma once

// Two-fold automorphisms and their generalisation indexed by a pattern graph
// S: tuples (a_0, ..., a_{n-1}) of permutations of V(G), one per vertex of S,
// such that u ~ v in G iff a_i(u) ~ a_j(v) for every edge {i, j} of S. These
// tuples form a group under componentwise composition; G-automorphisms embed
// diagonally.

#include <cstdint>
#include <optional>
#include <vector>

#include "gps/graph.hpp"
#include "gps/perm.hpp"

namespace gps {

struct TwoFoldPair {
    Permutation alpha, beta;

    bool nontrivial() const { return alpha != beta; }
    bool operator==(const TwoFoldPair& o) const { return alpha == o.alpha && beta == o.beta; }
    bool operator<(const TwoFoldPair& o) const {
        return alpha != o.alpha ? alpha < o.alpha : beta < o.beta;
    }
};

// u ~ v iff alpha(u) ~ beta(v), for all u, v.
bool is_two_fold(const Graph& g, const Permutation& alpha, const Permutation& beta);

// The unique beta completing alpha to a two-fold pair, via N(beta(v)) =
// alpha(N(v)). Requires g R-thin (uniqueness fails otherwise); absent when
// alpha does not map the neighbourhood family onto itself.
std::optional<Permutation> two_fold_partner(const Graph& g, const Permutation& alpha);

// All two-fold pairs, sorted by (alpha, beta). R-thin graphs go through
// two_fold_partner; thick ones through paired backtracking. Throws
// CapExceeded past `cap` pairs.
std::vector<TwoFoldPair> two_fold_pairs(const Graph& g, std::uint64_t cap = kDefaultAutCap);

struct SigmaAutomorphism {
    std::vector<Permutation> tuple;  // indexed by V(S)

    bool nondiagonal() const {
        for (std::size_t i = 1; i < tuple.size(); ++i)
            if (tuple[i] != tuple[0]) return true;
        return false;
    }
    bool operator==(const SigmaAutomorphism& o) const { return tuple == o.tuple; }
    bool operator<(const SigmaAutomorphism& o) const { return tuple < o.tuple; }
};

bool is_sigma_automorphism(const Graph& g, const Graph& s,
                           const std::vector<Permutation>& tuple);

struct SigmaAutGroup {
    int gamma_order = 0, sigma_order = 0;
    std::vector<SigmaAutomorphism> elements;  // sorted

    std::uint64_t order() const { return elements.size(); }
};

// Constraint search over two-fold pairs: domain = permutations occurring as a
// first coordinate, one constraint per S-edge. Requires |V(S)| >= 2 and no
// isolated S-vertex (an isolated index would be unconstrained). Throws
// CapExceeded past `cap` elements.
SigmaAutGroup sigma_automorphism_group(const Graph& g, const Graph& s,
                                       std::uint64_t cap = kDefaultAutCap);

// First nondiagonal element found, searching nondiagonal branches first;
// absent when the whole group is diagonal. Preconditions as above.
std::optional<SigmaAutomorphism> find_nondiagonal(const Graph& g, const Graph& s,
                                                  std::uint64_t cap = kDefaultAutCap);

}  // namespace gps
