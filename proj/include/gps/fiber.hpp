#pragma once

// Neighbourhood-ratio machinery on direct products: exact f-values, the
// derived X/Y vertex sets, common-neighbour profiles of the second factor,
// the level sets X_k/Y_k they induce, and executable checks of the named
// structural lemmas built from them.

#include <cstdint>
#include <string>
#include <vector>

#include "gps/graph.hpp"
#include "gps/perm.hpp"
#include "gps/products.hpp"

namespace gps {

// Exact rational, reduced, positive denominator. Arithmetic is confined to
// what the f-value machinery needs; comparisons cross-multiply.
struct RationalValue {
    long long num = 0;
    long long den = 1;

    RationalValue() = default;
    RationalValue(long long numerator, long long denominator);

    RationalValue scaled(long long k) const;  // k * (num/den), reduced
    bool is_positive_integer() const { return den == 1 && num > 0; }
    std::string to_string() const;

    friend bool operator==(const RationalValue&, const RationalValue&) = default;
    friend bool operator<(const RationalValue& a, const RationalValue& b) {
        return a.num * b.den < b.num * a.den;
    }
};

// f(a, b) = |N(a) n N(b)| / |N(a)| computed in the product graph. When both
// factors are regular the per-factor factorised form is computed as well and
// any disagreement raises std::logic_error (an index-convention tripwire).
// Throws std::invalid_argument when a has no neighbours or an index is out
// of range.
RationalValue f_value(const DirectProduct& prod, int a, int b);

// Common-neighbour profile of a vertex-transitive graph S around a centre i:
// the distinct values n_1 > ... > n_t of |N_S(i) n N_S(x)| over the Boolean-
// square neighbours x of i, each with its level set D_k. d_zero is {i};
// d_last collects the vertices sharing no neighbour with i. The levels,
// d_zero and d_last partition V(S).
struct CommonNeighborProfile {
    int center = 0;
    std::vector<int> level_values;    // n_1 > n_2 > ... > n_t >= 1
    std::vector<VertexSet> levels;    // levels[k-1] = D_k(center)
    VertexSet d_zero, d_last;
    // val(S) == sum_k |D_k| (equivalently |N_{B(S)}(i)| == val(S)). Holds for
    // many vertex-transitive graphs but not all, so it is recorded, never
    // assumed.
    bool valency_relation = false;

    int depth() const { return static_cast<int>(levels.size()); }
};

// Throws std::invalid_argument when S is not vertex-transitive, i is out of
// range, or i has no neighbours; throws std::domain_error when the level
// bound |N_{B(S)}(i)| > n_1 fails (the level machinery is undefined then:
// C4 is the smallest vertex-transitive example). The cap guards the
// vertex-transitivity check.
CommonNeighborProfile profile(const Graph& s, int i, std::uint64_t cap = kDefaultAutCap);

// X(u,i): vertices (v,j) != (u,i) with val(S) * f((u,i),(v,j)) a positive
// integer. Y(u,i): members of X(u,i) maximising f over the first coordinate
// at their own second coordinate. X_k slices X by the profile levels of i;
// Y_k takes the f-maximisers of X minus the earlier levels. Ties are kept:
// every set holds all qualifying vertices.
struct FiberSets {
    int base = 0;
    std::vector<int> x, y;                 // sorted product indices
    std::vector<std::vector<int>> xk, yk;  // levels 0..t; [0] = {base}
};

// Requires both factors regular with valency >= 1 and coprime valencies;
// profile() supplies the level structure and its errors propagate.
FiberSets fiber_sets(const DirectProduct& prod, int base, std::uint64_t cap = kDefaultAutCap);

enum class LemmaVerdict { Pass, Fail, HypothesesNotMet };

struct LemmaReport {
    LemmaVerdict verdict = LemmaVerdict::Pass;
    std::string detail;  // counterexample data, unmet hypothesis, or summary
};

std::string to_string(LemmaVerdict v);

// The recognised lemma ids, in canonical order:
//   "X"         (X(u,i))^s = X((u,i)^s) for every automorphism s
//   "ijneq"     members of X(u,i) never share the second coordinate i
//   "different" (u,i)^s and (u,j)^s differ in the second coordinate for
//               Boolean-square-adjacent i, j
//   "geqn"      common-neighbour counts in S never shrink under s
//   "Xk"        (X_k(u,i))^s = X_k((u,i)^s) levelwise
//   "vs2"       Y(u,i) = {u} x N_{B(S)}(i)
//   "XY"        Y_k(u,i) subset of X_k(u,i), and Y_k = Y n (V(G) x D_k(i))
//   "hom"       (Y(u,i))^s = Y((u,i)^s)
//   "add2"      (u,i)^s and (u,j)^s agree in the first coordinate when i, j
//               share a neighbour
//   "even"      (u,i)^s and (v,i)^s agree in the second coordinate when an
//               even-length walk joins u and v
//   "GammaBip"  Aut(G x S) = P(G, S) for bipartite G, non-bipartite S
//   "SigmaBip"  Aut(G x S) = P(G, S) for non-bipartite G, bipartite S
const std::vector<std::string>& lemma_names();

// Checks one lemma exhaustively over all base vertices and either every
// automorphism of G x S or `samples` of them chosen by the seeded generator
// (samples <= 0 means all). Hypotheses are tested first and reported as
// HypothesesNotMet rather than assumed. A Fail carries full counterexample
// data; since each statement is a theorem under its hypotheses, a Fail on
// hypothesis-satisfying input means the implementation is wrong somewhere.
// Throws CapExceeded when the automorphism search overruns the cap and
// std::invalid_argument for an unknown lemma id.
LemmaReport verify_lemma(const std::string& name, const Graph& g, const Graph& s,
                         int samples = 0, std::uint64_t cap = kDefaultAutCap,
                         std::uint64_t seed = 2026);

// As above, but sweeps a caller-supplied automorphism group of
// direct_product(g, s) instead of enumerating it inside the lemma — callers
// checking several lemmas against one pair pay for the enumeration once.
// Sampling is keyed on (order, samples, seed) only, so verdicts and details
// match the enumerating overload exactly. Throws std::invalid_argument when
// the group's degree is not |V(g)| * |V(s)|.
LemmaReport verify_lemma(const std::string& name, const Graph& g, const Graph& s,
                         const GroupElements& aut_product, int samples = 0,
                         std::uint64_t cap = kDefaultAutCap, std::uint64_t seed = 2026);

namespace detail {

// Lemma verdict when the product's automorphism group is already known to
// exceed `cap`: hypothesis screens run as usual, and a lemma that would sweep
// the group throws CapExceeded instead of repeating the over-cap enumeration.
LemmaReport verify_lemma_over_cap(const std::string& name, const Graph& g, const Graph& s,
                                  std::uint64_t cap);

}  // namespace detail

}  // namespace gps
