#pragma once

// Permutations, explicit automorphism-group element lists, and graph
// isomorphism. Groups are kept as sorted element vectors: the library
// targets desk-scale graphs, and every consumer (fiber checks, subgroup
// filters) wants to walk the elements anyway. Searches that would produce
// more than `cap` elements abort with CapExceeded rather than truncate.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gps/graph.hpp"

namespace gps {

using Permutation = std::vector<int>;  // images; p[u] is where u goes

class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultAutCap = 20000;

// Hard ceiling for the factorial-search helpers below.
inline constexpr int kBruteForceMaxOrder = 8;

Permutation identity_permutation(int n);
bool is_permutation(const Permutation& p);

// compose(a, b): apply a first, then b; (u)^(ab) = ((u)^a)^b.
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& a);

// Image of a vertex set under p (same universe).
VertexSet apply(const Permutation& p, const VertexSet& s);

// New graph in which vertex u of g has been renamed p[u].
Graph relabel(const Graph& g, const Permutation& p);

struct GroupElements {
    int degree = 0;
    std::vector<Permutation> elements;  // sorted lexicographically

    std::uint64_t order() const { return elements.size(); }
    bool contains(const Permutation& p) const;
};

// All automorphisms of g by pruned backtracking. Refinement key per vertex:
// (degree, sorted multiset of neighbour degrees); candidate images are
// restricted to the same key class. Throws CapExceeded when more than `cap`
// elements exist.
GroupElements automorphisms(const Graph& g, std::uint64_t cap = kDefaultAutCap);

// Oracle path: filters all n! permutations. Requires n <= 8.
GroupElements automorphisms_bruteforce(const Graph& g);

// Lexicographically least isomorphism g -> h when one exists.
std::optional<Permutation> find_isomorphism(const Graph& g, const Graph& h);
bool isomorphic(const Graph& g, const Graph& h);

std::vector<std::vector<int>> orbits(const GroupElements& group);

bool is_vertex_transitive(const Graph& g, std::uint64_t cap = kDefaultAutCap);

}  // namespace gps
