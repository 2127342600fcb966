#include "gps/census.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string_view>
#include <thread>

#include "json.hpp"

#include "gps/fiber.hpp"
#include "gps/io.hpp"
#include "gps/products.hpp"
#include "gps/sigma.hpp"
#include "gps/stability.hpp"

namespace gps {

namespace {

using ordered_json = nlohmann::ordered_json;

class Stopwatch {
public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string classification_token(PairClass c) {
    switch (c) {
        case PairClass::Stable: return "stable";
        case PairClass::TriviallyUnstable: return "trivially-unstable";
        case PairClass::NontriviallyUnstable: return "nontrivially-unstable";
    }
    return "?";
}

std::string theorem1_token(Theorem1Report::Verdict v) {
    switch (v) {
        case Theorem1Report::Verdict::Pass: return "pass";
        case Theorem1Report::Verdict::Fail: return "fail";
        case Theorem1Report::Verdict::Unchecked: return "unchecked";
    }
    return "?";
}

std::string theorem2_token(Theorem2Report::Verdict v) {
    switch (v) {
        case Theorem2Report::Verdict::Pass: return "pass";
        case Theorem2Report::Verdict::Fail: return "fail";
        case Theorem2Report::Verdict::NotApplicable: return "not-applicable";
    }
    return "?";
}

ordered_json descriptor_json(const GraphDescriptor& d) {
    ordered_json j;
    j["order"] = d.order;
    j["edges"] = d.edges;
    j["format"] = d.format;
    j["label"] = d.label;
    return j;
}

GraphDescriptor descriptor_from_json(const ordered_json& j) {
    GraphDescriptor d;
    d.order = j.at("order").get<int>();
    d.edges = j.at("edges").get<std::vector<Edge>>();
    d.format = j.at("format").get<std::string>();
    d.label = j.at("label").get<std::string>();
    return d;
}

}  // namespace

GraphDescriptor describe(const Graph& g, std::string format) {
    return {g.order(), g.edges(), std::move(format), g.label()};
}

std::string ReportDocument::to_json() const {
    ordered_json j;
    j["schemaVersion"] = schema_version;
    j["gamma"] = descriptor_json(gamma);
    j["sigma"] = descriptor_json(sigma);
    j["orders"] = ordered_json{{"autGamma", aut_gamma_order},
                               {"autSigma", aut_sigma_order},
                               {"autProduct", aut_product_order},
                               {"q", q_order},
                               {"p", p_order}};
    j["classification"] = classification;
    j["reasons"] = reasons;
    if (witness)
        j["witness"] = *witness;
    else
        j["witness"] = nullptr;
    j["theorem1"] = ordered_json{{"verdict", theorem1_verdict}, {"clause", theorem1_clause}};
    j["theorem2"] = ordered_json{{"verdict", theorem2_verdict}, {"detail", theorem2_detail}};
    ordered_json lem = ordered_json::array();
    for (const auto& l : lemmas)
        lem.push_back(ordered_json{{"name", l.name}, {"verdict", l.verdict}, {"detail", l.detail}});
    j["lemmas"] = lem;
    ordered_json t = ordered_json::object();
    for (const auto& [stage, ms] : timings_ms) t[stage] = ms;
    j["timingsMs"] = t;
    return j.dump();
}

ReportDocument ReportDocument::from_json(const std::string& text) {
    try {
        ordered_json j = ordered_json::parse(text);
        ReportDocument doc;
        doc.schema_version = j.at("schemaVersion").get<int>();
        if (doc.schema_version != 1)
            throw ParseError("unsupported schemaVersion " + std::to_string(doc.schema_version));
        doc.gamma = descriptor_from_json(j.at("gamma"));
        doc.sigma = descriptor_from_json(j.at("sigma"));
        const auto& o = j.at("orders");
        doc.aut_gamma_order = o.at("autGamma").get<std::uint64_t>();
        doc.aut_sigma_order = o.at("autSigma").get<std::uint64_t>();
        doc.aut_product_order = o.at("autProduct").get<std::uint64_t>();
        doc.q_order = o.at("q").get<std::uint64_t>();
        doc.p_order = o.at("p").get<std::uint64_t>();
        doc.classification = j.at("classification").get<std::string>();
        doc.reasons = j.at("reasons").get<std::vector<std::string>>();
        if (!j.at("witness").is_null())
            doc.witness = j.at("witness").get<std::vector<Permutation>>();
        doc.theorem1_verdict = j.at("theorem1").at("verdict").get<std::string>();
        doc.theorem1_clause = j.at("theorem1").at("clause").get<std::string>();
        doc.theorem2_verdict = j.at("theorem2").at("verdict").get<std::string>();
        doc.theorem2_detail = j.at("theorem2").at("detail").get<std::string>();
        for (const auto& l : j.at("lemmas"))
            doc.lemmas.push_back({l.at("name").get<std::string>(),
                                  l.at("verdict").get<std::string>(),
                                  l.at("detail").get<std::string>()});
        for (const auto& [stage, ms] : j.at("timingsMs").items())
            doc.timings_ms.emplace_back(stage, ms.get<double>());
        return doc;
    } catch (const ParseError&) {
        throw;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("report document: ") + e.what());
    }
}

ReportDocument analyze_pair(const Graph& gamma, const std::string& gamma_format,
                            const Graph& sigma, const std::string& sigma_format,
                            const AnalyzeOptions& opts) {
    if (gamma.order() == 0 || sigma.order() == 0)
        throw std::invalid_argument("analyze_pair: factors must be nonempty");
    ReportDocument doc;
    doc.gamma = describe(gamma, gamma_format);
    doc.sigma = describe(sigma, sigma_format);

    bool degenerate = gamma.order() < 2 || sigma.order() < 2;
    Stopwatch stability_timer;
    // The product group feeds the stability orders, the theorem checks, and
    // the lemma sweeps; enumerate it once per pair.
    const GroupElements aut_product =
        automorphisms(direct_product(gamma, sigma).product, opts.cap);
    StabilityReport rep =
        degenerate ? detail::stability_orders(gamma, sigma, opts.cap, aut_product)
                   : detail::classify_pair_with(gamma, sigma, opts.cap,
                                                opts.max_factor_order, aut_product);
    doc.timings_ms.emplace_back("stability", stability_timer.ms());

    doc.aut_gamma_order = rep.aut_gamma_order;
    doc.aut_sigma_order = rep.aut_sigma_order;
    doc.aut_product_order = rep.aut_product_order;
    doc.q_order = rep.q_order;
    doc.p_order = rep.p_order;
    if (rep.classification) {
        doc.classification = classification_token(*rep.classification);
    } else {
        // Degenerate unstable rows: a factor of order one leaves nothing for
        // the nontrivial notion to say, so they are filed as trivial.
        doc.classification = "trivially-unstable";
        doc.reasons.push_back("degenerate factor (order < 2)");
    }
    for (auto r : rep.reasons) doc.reasons.push_back(to_string(r));
    if (rep.witness) doc.witness = rep.witness->tuple;

    Stopwatch theorem1_timer;
    if (degenerate) {
        // The tuple machinery behind the theorem needs both orders >= 2; a
        // one-vertex factor even breaks its thinness clause ((2K1, K1) is
        // stable with 2K1 R-thick), so these rows stay unchecked.
        doc.theorem1_verdict = "unchecked";
        doc.theorem1_clause = "factor of order < 2";
    } else {
        try {
            auto t1 = check_theorem1(gamma, sigma, rep, opts.max_factor_order);
            doc.theorem1_verdict = theorem1_token(t1.verdict);
            doc.theorem1_clause = t1.clause;
        } catch (const CapExceeded&) {
            doc.theorem1_verdict = "unchecked";
            doc.theorem1_clause = "automorphism cap exceeded";
        }
    }
    doc.timings_ms.emplace_back("theorem1", theorem1_timer.ms());

    Stopwatch theorem2_timer;
    try {
        auto t2 = check_theorem2(gamma, sigma, opts.cap, rep);
        doc.theorem2_verdict = theorem2_token(t2.verdict);
        doc.theorem2_detail = t2.detail;
    } catch (const CapExceeded&) {
        doc.theorem2_verdict = "not-applicable";
        doc.theorem2_detail = "automorphism cap exceeded";
    }
    doc.timings_ms.emplace_back("theorem2", theorem2_timer.ms());

    if (opts.check_lemmas) {
        Stopwatch lemma_timer;
        for (const auto& name : lemma_names()) {
            try {
                LemmaReport r = verify_lemma(name, gamma, sigma, aut_product,
                                             opts.lemma_samples, opts.cap, opts.lemma_seed);
                doc.lemmas.push_back({name, to_string(r.verdict), r.detail});
            } catch (const CapExceeded&) {
                doc.lemmas.push_back({name, "cap-exceeded", "automorphism cap exceeded"});
            }
        }
        doc.timings_ms.emplace_back("lemmas", lemma_timer.ms());
    }
    return doc;
}

std::string CensusRecord::to_json() const {
    ordered_json j;
    j["gamma"] = gamma_canonical;
    j["sigma"] = sigma_canonical;
    j["classification"] = classification;
    j["theorem1"] = theorem1;
    j["theorem2"] = theorem2;
    return j.dump();
}

std::string CensusSummary::to_json() const {
    ordered_json s;
    s["pairs"] = pairs;
    s["stable"] = stable;
    s["triviallyUnstable"] = trivially_unstable;
    s["nontriviallyUnstable"] = nontrivially_unstable;
    s["capExceeded"] = capped;
    s["theorem1"] =
        ordered_json{{"pass", theorem1_pass}, {"fail", theorem1_fail}, {"unchecked", theorem1_unchecked}};
    s["theorem2"] = ordered_json{{"pass", theorem2_pass},
                                 {"fail", theorem2_fail},
                                 {"notApplicable", theorem2_not_applicable}};
    s["identities"] = ordered_json{{"checked", identities_checked},
                                   {"failed", identities_failed},
                                   {"capped", identities_capped}};
    s["lemmas"] = ordered_json{{"pass", lemma_pass},
                               {"fail", lemma_fail},
                               {"hypothesesNotMet", lemma_hypotheses_not_met},
                               {"capped", lemma_capped}};
    s["failures"] = failures;
    ordered_json j;
    j["summary"] = s;
    return j.dump();
}

std::string CensusResult::to_jsonl() const {
    std::string out;
    for (const auto& r : records) {
        out += r.to_json();
        out += '\n';
    }
    out += summary.to_json();
    out += '\n';
    return out;
}

namespace {

struct RowStats {
    std::vector<std::string> failures;
    bool identity_checked = false, identity_failed = false, identity_capped = false;
    std::uint64_t lemma_pass = 0, lemma_fail = 0, lemma_not_met = 0, lemma_capped = 0;
};

void process_row(const Graph& g, const Graph& s, const std::string& gkey,
                 const std::string& skey, const CensusOptions& opts, CensusRecord& rec,
                 RowStats& stats) {
    rec.gamma_canonical = gkey;
    rec.sigma_canonical = skey;
    std::string where = "gamma=" + gkey + " sigma=" + skey;

    AnalyzeOptions aopts;
    aopts.cap = opts.cap;
    aopts.max_factor_order = opts.max_factor_order;
    aopts.check_lemmas = opts.check_lemmas;
    aopts.lemma_samples = opts.lemma_samples;
    aopts.lemma_seed = opts.lemma_seed;

    ReportDocument doc;
    try {
        doc = analyze_pair(g, "builtin", s, "builtin", aopts);
    } catch (const CapExceeded&) {
        rec.classification = "cap-exceeded";
        rec.theorem1 = "unchecked";
        rec.theorem2 = "not-applicable";
        return;
    }
    rec.classification = doc.classification;
    rec.theorem1 = doc.theorem1_verdict;
    rec.theorem2 = doc.theorem2_verdict;
    if (doc.theorem1_verdict == "fail")
        stats.failures.push_back("theorem1 fail: " + where + ": " + doc.theorem1_clause);
    if (doc.theorem2_verdict == "fail")
        stats.failures.push_back("theorem2 fail: " + where + ": " + doc.theorem2_detail);

    for (const auto& l : doc.lemmas) {
        if (l.verdict == "pass") ++stats.lemma_pass;
        else if (l.verdict == "hypotheses-not-met") ++stats.lemma_not_met;
        else if (l.verdict == "cap-exceeded") ++stats.lemma_capped;
        else {
            ++stats.lemma_fail;
            stats.failures.push_back("lemma " + l.name + " fail: " + where + ": " + l.detail);
        }
    }

    if (opts.check_group_identities && s.order() >= 2) {
        try {
            // |Q| and |P| are already in the report (computed from the one
            // product-group enumeration); only the tuple group and Aut(Sigma)
            // are needed on top.
            std::uint64_t q = doc.q_order;
            std::uint64_t p = doc.p_order;
            std::uint64_t tuples = sigma_automorphism_group(g, s, opts.cap).order();
            std::uint64_t aut_s = automorphisms(s, opts.cap).order();
            stats.identity_checked = true;
            bool ok_q = q == tuples;
            // With no Gamma-edge the product has no edges at all, so every
            // permutation preserves the fibre partition and P is the full
            // partition stabiliser; the semidirect-product identity for P is
            // asserted only for factors with at least one edge.
            bool ok_p = g.edge_count() == 0 || p == tuples * aut_s;
            if (!ok_q)
                stats.failures.push_back("identity |Q| fail: " + where + ": |Q| = " +
                                         std::to_string(q) + ", tuple group order = " +
                                         std::to_string(tuples));
            if (!ok_p)
                stats.failures.push_back("identity |P| fail: " + where + ": |P| = " +
                                         std::to_string(p) + ", expected " +
                                         std::to_string(tuples * aut_s));
            stats.identity_failed = !ok_q || !ok_p;
        } catch (const CapExceeded&) {
            stats.identity_capped = true;
        } catch (const std::invalid_argument&) {
            // Sigma with an isolated vertex: the tuple group is undefined,
            // so there is no identity to check on this row.
        }
    }
}

}  // namespace

CensusResult run_census(const CensusOptions& opts) {
    if (opts.max_gamma < 1 || opts.max_gamma > kEnumerateMaxOrder)
        throw std::invalid_argument("run_census: max_gamma must be in 1.." +
                                    std::to_string(kEnumerateMaxOrder));
    if (opts.sigmas.empty()) throw std::invalid_argument("run_census: empty sigma set");
    if (opts.jobs < 1) throw std::invalid_argument("run_census: jobs must be >= 1");

    std::vector<Graph> gammas;
    for (int n = 1; n <= opts.max_gamma; ++n)
        for (auto& g : enumerate_graphs(n)) gammas.push_back(std::move(g));
    // enumerate_graphs returns canonical labelings, so emitting directly
    // already yields the canonical string.
    std::vector<std::string> gamma_keys;
    gamma_keys.reserve(gammas.size());
    for (const auto& g : gammas) gamma_keys.push_back(emit_graph6(g));
    std::vector<std::string> sigma_keys;
    sigma_keys.reserve(opts.sigmas.size());
    for (const auto& s : opts.sigmas) sigma_keys.push_back(canonical_graph6(s));

    const std::size_t nsig = opts.sigmas.size();
    const std::size_t rows = gammas.size() * nsig;
    CensusResult result;
    result.records.resize(rows);
    std::vector<RowStats> stats(rows);

    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= rows) return;
            std::size_t gi = i / nsig, si = i % nsig;
            try {
                process_row(gammas[gi], opts.sigmas[si], gamma_keys[gi], sigma_keys[si], opts,
                            result.records[i], stats[i]);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };

    unsigned jobs = static_cast<unsigned>(std::min<std::size_t>(opts.jobs, rows));
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    CensusSummary& sum = result.summary;
    sum.pairs = rows;
    for (std::size_t i = 0; i < rows; ++i) {
        const auto& rec = result.records[i];
        if (rec.classification == "stable") ++sum.stable;
        else if (rec.classification == "trivially-unstable") ++sum.trivially_unstable;
        else if (rec.classification == "nontrivially-unstable") ++sum.nontrivially_unstable;
        else ++sum.capped;
        if (rec.theorem1 == "pass") ++sum.theorem1_pass;
        else if (rec.theorem1 == "fail") ++sum.theorem1_fail;
        else ++sum.theorem1_unchecked;
        if (rec.theorem2 == "pass") ++sum.theorem2_pass;
        else if (rec.theorem2 == "fail") ++sum.theorem2_fail;
        else ++sum.theorem2_not_applicable;
        const auto& st = stats[i];
        sum.identities_checked += st.identity_checked ? 1 : 0;
        sum.identities_failed += st.identity_failed ? 1 : 0;
        sum.identities_capped += st.identity_capped ? 1 : 0;
        sum.lemma_pass += st.lemma_pass;
        sum.lemma_fail += st.lemma_fail;
        sum.lemma_hypotheses_not_met += st.lemma_not_met;
        sum.lemma_capped += st.lemma_capped;
        for (const auto& f : st.failures) sum.failures.push_back(f);
    }
    return result;
}

std::vector<Graph> sigma_set_from_name(const std::string& name) {
    if (name == "k2") return {build_graph(2, {{0, 1}}, "K2")};
    if (name == "c3") return {build_graph(3, {{0, 1}, {1, 2}, {0, 2}}, "C3")};
    if (name == "c5")
        return {build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}, "C5")};
    if (name == "k4")
        return {build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, "K4")};
    constexpr std::string_view kAllPrefix = "all<=";
    if (name.rfind(kAllPrefix, 0) == 0) {
        int m = 0;
        try {
            std::size_t used = 0;
            m = std::stoi(name.substr(kAllPrefix.size()), &used);
            if (used != name.size() - kAllPrefix.size()) m = 0;
        } catch (const std::exception&) {
            m = 0;
        }
        if (m < 1 || m > 6)
            throw std::invalid_argument("sigma_set_from_name: order bound must be 1..6 in '" +
                                        name + "'");
        std::vector<Graph> out;
        for (int n = 1; n <= m; ++n)
            for (auto& g : enumerate_graphs(n)) out.push_back(std::move(g));
        return out;
    }
    throw std::invalid_argument("sigma_set_from_name: unknown set '" + name +
                                "' (expected k2, c3, c5, k4, or all<=M)");
}

}  // namespace gps
