#pragma once

// Stability of a pair (G, S) under the direct product: the pair is stable
// when |Aut(G x S)| equals |Aut(G)| * |Aut(S)| (the componentwise action
// always embeds, so equality of orders settles it). Unstable pairs are
// nontrivially unstable when no cheap cause applies: both factors connected,
// both R-thin, the pair coprime, and at least one factor non-bipartite.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gps/perm.hpp"
#include "gps/products.hpp"
#include "gps/sigma.hpp"

namespace gps {

enum class PairClass { Stable, TriviallyUnstable, NontriviallyUnstable };

enum class UnstableReason {
    GammaDisconnected,
    SigmaDisconnected,
    GammaThick,
    SigmaThick,
    CommonFactor,
    CoprimalityUnverified,  // oracle Inconclusive: never guessed either way
    BothBipartite,
};

std::string to_string(PairClass c);
std::string to_string(UnstableReason r);

struct StabilityReport {
    std::uint64_t aut_gamma_order = 0;
    std::uint64_t aut_sigma_order = 0;
    std::uint64_t aut_product_order = 0;
    std::uint64_t q_order = 0;  // fiber-preserving subgroup
    std::uint64_t p_order = 0;  // fiber-permuting subgroup
    bool stable = false;
    std::optional<PairClass> classification;     // set by classify_pair
    std::vector<UnstableReason> reasons;         // all violated conditions
    std::optional<SigmaAutomorphism> witness;    // nondiagonal, when found
};

// Elements of aut_product fixing every fiber V(G) x {i} setwise. Throws on a
// degree mismatch with the product index convention.
GroupElements q_subgroup(const Graph& g, const Graph& s, const GroupElements& aut_product);

// Elements permuting the fibers among themselves.
GroupElements p_subgroup(const Graph& g, const Graph& s, const GroupElements& aut_product);

// Orders, Q, P and the stable flag. Requires both orders >= 2 (S = K2
// recovers plain graph stability). Throws CapExceeded when a group search
// overruns `cap`.
StabilityReport is_stable(const Graph& g, const Graph& s, std::uint64_t cap = kDefaultAutCap);

// is_stable plus the classification. Coprimality strategy: coprime orders or
// coprime valencies with a non-bipartite factor decide immediately; otherwise
// coprime_oracle, whose Inconclusive becomes a reason of its own. For
// unstable pairs a nondiagonal witness search runs best-effort (skipped when
// it would exceed caps or S has an isolated vertex).
StabilityReport classify_pair(const Graph& g, const Graph& s,
                              std::uint64_t cap = kDefaultAutCap,
                              int max_factor_order = 4);

struct Theorem1Report {
    enum class Verdict { Pass, Fail, Unchecked } verdict = Verdict::Pass;
    std::string clause;  // failed clause, or the one left unchecked
};

// Necessary conditions for stability: a stable pair is coprime and both
// factors are R-thin; when additionally both automorphism groups are
// nontrivial, both factors are connected and at least one is non-bipartite.
// Unstable input passes vacuously. Unverifiable coprimality -> Unchecked.
Theorem1Report check_theorem1(const Graph& g, const Graph& s,
                              std::uint64_t cap = kDefaultAutCap,
                              int max_factor_order = 4);

// As above with the stability work already done: `rep` must come from
// is_stable/classify_pair on the same pair.
Theorem1Report check_theorem1(const Graph& g, const Graph& s, const StabilityReport& rep,
                              int max_factor_order = 4);

struct Theorem2Report {
    enum class Verdict { Pass, Fail, NotApplicable } verdict = Verdict::NotApplicable;
    std::string detail;  // unmet hypothesis, or counterexample data on Fail
};

// Under the hypotheses (G connected regular, S connected vertex-transitive,
// coprime valencies, both R-thin, at least one factor non-bipartite) the pair
// is nontrivially unstable iff a nondiagonal tuple exists; this checks that
// biconditional. Anything else is NotApplicable.
Theorem2Report check_theorem2(const Graph& g, const Graph& s,
                              std::uint64_t cap = kDefaultAutCap);

// As above with the stability work already done: `rep` must come from
// is_stable/classify_pair on the same pair. The cap still guards the
// vertex-transitivity screen and the witness search.
Theorem2Report check_theorem2(const Graph& g, const Graph& s, std::uint64_t cap,
                              const StabilityReport& rep);

namespace detail {

// Shared coprimality decision. Fast paths (sound ones only): coprime orders;
// both regular with coprime valencies and at least one factor non-bipartite.
// Everything else goes to the oracle.
CoprimeVerdict decide_coprime(const Graph& g, const Graph& s, int max_factor_order);

// Order bookkeeping without the order >= 2 guard, for census rows over K1.
// The second form reuses a caller-supplied automorphism group of the product
// (degree-checked by q_subgroup) instead of enumerating it again.
StabilityReport stability_orders(const Graph& g, const Graph& s, std::uint64_t cap);
StabilityReport stability_orders(const Graph& g, const Graph& s, std::uint64_t cap,
                                 const GroupElements& aut_product);

// classify_pair against a caller-supplied product group.
StabilityReport classify_pair_with(const Graph& g, const Graph& s, std::uint64_t cap,
                                   int max_factor_order, const GroupElements& aut_product);

// Hypothesis screen of check_theorem2: NotApplicable with the unmet
// hypothesis, or a Pass-verdict placeholder when every hypothesis holds.
Theorem2Report theorem2_screen(const Graph& g, const Graph& s, std::uint64_t cap);

}  // namespace detail

}  // namespace gps
