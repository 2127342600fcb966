#pragma once

// Batch analysis. analyze_pair runs the full decision pipeline on one pair
// and returns a JSON-serialisable report; run_census sweeps every
// isomorphism class of Gamma up to a given order against a set of pattern
// graphs Sigma, cross-checking the structural invariants on each row.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gps/graph.hpp"
#include "gps/perm.hpp"

namespace gps {

struct GraphDescriptor {
    int order = 0;
    std::vector<Edge> edges;   // sorted, u < v
    std::string format;        // input format echo: "graph6", "edgelist", "builtin"
    std::string label;

    bool operator==(const GraphDescriptor&) const = default;
};

GraphDescriptor describe(const Graph& g, std::string format);

struct LemmaResult {
    std::string name;
    std::string verdict;  // "pass" | "fail" | "hypotheses-not-met" | "cap-exceeded"
    std::string detail;

    bool operator==(const LemmaResult&) const = default;
};

// Full single-pair report. All analysis outcomes are stored as plain strings
// so that a document survives a JSON round trip bit-for-bit.
struct ReportDocument {
    int schema_version = 1;
    GraphDescriptor gamma, sigma;
    std::uint64_t aut_gamma_order = 0, aut_sigma_order = 0, aut_product_order = 0;
    std::uint64_t q_order = 0, p_order = 0;
    std::string classification;  // "stable" | "trivially-unstable" | "nontrivially-unstable"
    std::vector<std::string> reasons;
    std::optional<std::vector<Permutation>> witness;  // nondiagonal tuple, indexed by V(S)
    std::string theorem1_verdict, theorem1_clause;    // "pass" | "fail" | "unchecked"
    std::string theorem2_verdict, theorem2_detail;    // "pass" | "fail" | "not-applicable"
    std::vector<LemmaResult> lemmas;                  // populated on request
    std::vector<std::pair<std::string, double>> timings_ms;  // per stage, in run order

    bool operator==(const ReportDocument&) const = default;

    std::string to_json() const;  // single line, keys in fixed order
    static ReportDocument from_json(const std::string& text);  // throws ParseError
};

struct AnalyzeOptions {
    std::uint64_t cap = kDefaultAutCap;
    int max_factor_order = 4;
    bool check_lemmas = false;
    int lemma_samples = 0;  // <= 0: exhaust the sigma sweep in each lemma check
    std::uint64_t lemma_seed = 2026;
};

// Orders, classification, theorem checks, and (optionally) the lemma sweep
// for one pair. Throws CapExceeded if the core order computation caps;
// theorem and lemma stages that cap are recorded in place instead.
ReportDocument analyze_pair(const Graph& gamma, const std::string& gamma_format,
                            const Graph& sigma, const std::string& sigma_format,
                            const AnalyzeOptions& opts = {});

// One census row. Canonical graph6 keys make rows stable under any
// relabeling of the inputs.
struct CensusRecord {
    std::string gamma_canonical, sigma_canonical;
    std::string classification;  // pair class, or "cap-exceeded"
    std::string theorem1;        // "pass" | "fail" | "unchecked"
    std::string theorem2;        // "pass" | "fail" | "not-applicable"

    bool operator==(const CensusRecord&) const = default;

    std::string to_json() const;  // single JSONL line
};

struct CensusOptions {
    int max_gamma = 5;           // sweep Gamma over all classes of order 1..max_gamma
    std::vector<Graph> sigmas;   // pattern set, in emission order
    int jobs = 1;
    std::uint64_t cap = kDefaultAutCap;
    int max_factor_order = 4;
    bool check_group_identities = false;  // |Q| and |P| against the tuple group
    bool check_lemmas = false;
    int lemma_samples = 256;
    std::uint64_t lemma_seed = 2026;
};

struct CensusSummary {
    std::uint64_t pairs = 0;
    std::uint64_t stable = 0, trivially_unstable = 0, nontrivially_unstable = 0, capped = 0;
    std::uint64_t theorem1_pass = 0, theorem1_fail = 0, theorem1_unchecked = 0;
    std::uint64_t theorem2_pass = 0, theorem2_fail = 0, theorem2_not_applicable = 0;
    std::uint64_t identities_checked = 0, identities_failed = 0, identities_capped = 0;
    std::uint64_t lemma_pass = 0, lemma_fail = 0, lemma_hypotheses_not_met = 0,
                  lemma_capped = 0;
    std::vector<std::string> failures;  // one line per theorem/identity/lemma failure

    bool operator==(const CensusSummary&) const = default;

    bool clean() const { return failures.empty(); }
    std::string to_json() const;  // single JSONL line, object under key "summary"
};

struct CensusResult {
    std::vector<CensusRecord> records;  // canonical pair order, independent of jobs
    CensusSummary summary;

    std::string to_jsonl() const;  // records then summary, one line each
};

// Enumerates Gamma classes of order 1..max_gamma (sorted canonical order
// within each order) against opts.sigmas. Rows are processed by opts.jobs
// worker threads but emitted in pair order, so output is byte-identical for
// any job count. Rows whose core order computation exceeds opts.cap are
// recorded as "cap-exceeded" / "unchecked" / "not-applicable".
CensusResult run_census(const CensusOptions& opts);

// Named pattern sets for the command line: "k2", "c3", "c5", "k4", or
// "all<=M" (every isomorphism class of order 1..M, M <= 6). Throws
// std::invalid_argument on anything else.
std::vector<Graph> sigma_set_from_name(const std::string& name);

}  // namespace gps
