// gps: stability analysis for direct products of graphs.
//
//   gps analyze --gamma F --sigma F --format {graph6|edgelist} [--json]
//               [--max-aut N] [--check-lemmas]
//   gps census  --max-gamma N --sigma-set {k2|c3|c5|k4|all<=M} [--jobs J] [--out F]
//   gps verify  --lemma NAME|all (--gamma F --sigma F [--format F] | --builtin-suite)
//
// Exit codes: 0 success, 1 input error or verification failure, 2 automorphism
// cap exceeded. GPS_MAX_AUT overrides the default cap; --max-aut overrides both.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gps/census.hpp"
#include "gps/fiber.hpp"
#include "gps/graph.hpp"
#include "gps/io.hpp"
#include "gps/perm.hpp"
#include "gps/products.hpp"
#include "gps/sigma.hpp"
#include "gps/stability.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitCapExceeded = 2;

std::uint64_t default_cap() {
    const char* env = std::getenv("GPS_MAX_AUT");
    if (!env) return gps::kDefaultAutCap;
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0)
        throw std::invalid_argument("GPS_MAX_AUT must be a positive integer, got '" +
                                    std::string(env) + "'");
    return static_cast<std::uint64_t>(v);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

gps::Graph load_graph(const std::string& path, const std::string& format) {
    std::string text = read_file(path);
    if (format == "graph6") {
        // A graph6 file is a single line; tolerate a trailing newline.
        while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
        return gps::parse_graph6(text);
    }
    return gps::parse_edgelist(text);
}

gps::Graph cycle(int n, const std::string& label) {
    std::vector<gps::Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(std::min(i, (i + 1) % n),
                                                   std::max(i, (i + 1) % n));
    return gps::build_graph(n, edges, label);
}

gps::Graph complete(int n, const std::string& label) {
    std::vector<gps::Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return gps::build_graph(n, edges, label);
}

int run_analyze(const std::string& gamma_path, const std::string& sigma_path,
                const std::string& format, bool json, std::uint64_t cap, bool check_lemmas) {
    gps::Graph gamma = load_graph(gamma_path, format);
    gps::Graph sigma = load_graph(sigma_path, format);
    gps::AnalyzeOptions opts;
    opts.cap = cap;
    opts.check_lemmas = check_lemmas;
    gps::ReportDocument doc;
    try {
        doc = gps::analyze_pair(gamma, format, sigma, format, opts);
    } catch (const gps::CapExceeded& e) {
        std::cerr << "gps: " << e.what() << "\n";
        return kExitCapExceeded;
    }
    if (json) {
        std::cout << doc.to_json() << "\n";
        return kExitOk;
    }
    std::cout << "gamma: order " << doc.gamma.order << ", " << doc.gamma.edges.size()
              << " edges (" << gamma_path << ")\n";
    std::cout << "sigma: order " << doc.sigma.order << ", " << doc.sigma.edges.size()
              << " edges (" << sigma_path << ")\n";
    std::cout << "|Aut(gamma)|   = " << doc.aut_gamma_order << "\n";
    std::cout << "|Aut(sigma)|   = " << doc.aut_sigma_order << "\n";
    std::cout << "|Aut(product)| = " << doc.aut_product_order << "\n";
    std::cout << "|Q| = " << doc.q_order << ", |P| = " << doc.p_order << "\n";
    std::cout << "classification: " << doc.classification;
    if (!doc.reasons.empty()) {
        std::cout << " (";
        for (std::size_t i = 0; i < doc.reasons.size(); ++i)
            std::cout << (i ? "; " : "") << doc.reasons[i];
        std::cout << ")";
    }
    std::cout << "\n";
    if (doc.witness) {
        std::cout << "nondiagonal witness:";
        for (const auto& perm : *doc.witness) {
            std::cout << " [";
            for (std::size_t i = 0; i < perm.size(); ++i) std::cout << (i ? " " : "") << perm[i];
            std::cout << "]";
        }
        std::cout << "\n";
    }
    std::cout << "theorem1: " << doc.theorem1_verdict;
    if (!doc.theorem1_clause.empty()) std::cout << " (" << doc.theorem1_clause << ")";
    std::cout << "\n";
    std::cout << "theorem2: " << doc.theorem2_verdict;
    if (!doc.theorem2_detail.empty()) std::cout << " (" << doc.theorem2_detail << ")";
    std::cout << "\n";
    for (const auto& l : doc.lemmas) {
        std::cout << "lemma " << l.name << ": " << l.verdict;
        if (!l.detail.empty()) std::cout << " (" << l.detail << ")";
        std::cout << "\n";
    }
    return kExitOk;
}

int run_census(int max_gamma, const std::string& sigma_set, int jobs,
               const std::string& out_path, std::uint64_t cap) {
    if (max_gamma < 1 || max_gamma > gps::kEnumerateMaxOrder)
        throw std::invalid_argument("--max-gamma must be in 1.." +
                                    std::to_string(gps::kEnumerateMaxOrder) +
                                    " (enumeration limit)");
    gps::CensusOptions opts;
    opts.max_gamma = max_gamma;
    opts.sigmas = gps::sigma_set_from_name(sigma_set);
    opts.jobs = jobs;
    opts.cap = cap;
    opts.check_group_identities = true;
    gps::CensusResult result = gps::run_census(opts);

    std::string text = result.to_jsonl();
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot write '" + out_path + "'");
        out << text;
    }
    if (!result.summary.clean()) {
        for (const auto& f : result.summary.failures) std::cerr << "gps: " << f << "\n";
        return kExitInputError;
    }
    return kExitOk;
}

struct SuitePair {
    std::string name;
    gps::Graph gamma, sigma;
};

std::vector<SuitePair> builtin_suite() {
    gps::Graph k2 = complete(2, "K2"), c3 = cycle(3, "C3"), c4 = cycle(4, "C4"),
               c5 = cycle(5, "C5"), k4 = complete(4, "K4");
    // (C4,C3)/(C3,C4) exercise the hypothesis screens (shared valency, thick
    // factor) while keeping every product group under the default cap.
    return {
        {"(K4,C5)", k4, c5}, {"(C5,K4)", c5, k4}, {"(C3,K4)", c3, k4},
        {"(K4,C3)", k4, c3}, {"(K2,C3)", k2, c3}, {"(C3,K2)", c3, k2},
        {"(C4,C3)", c4, c3}, {"(C3,C4)", c3, c4},
    };
}

int run_verify(const std::string& lemma, const std::string& gamma_path,
               const std::string& sigma_path, const std::string& format, bool suite,
               std::uint64_t cap) {
    std::vector<std::string> names;
    if (lemma == "all") {
        names = gps::lemma_names();
    } else {
        auto all = gps::lemma_names();
        if (std::find(all.begin(), all.end(), lemma) == all.end())
            throw std::invalid_argument("unknown lemma '" + lemma + "'");
        names = {lemma};
    }

    std::vector<SuitePair> pairs;
    if (suite) {
        pairs = builtin_suite();
    } else {
        if (gamma_path.empty() || sigma_path.empty())
            throw std::invalid_argument(
                "verify needs --gamma and --sigma, or --builtin-suite");
        pairs.push_back({"(" + gamma_path + "," + sigma_path + ")",
                         load_graph(gamma_path, format), load_graph(sigma_path, format)});
    }

    bool any_fail = false, any_cap = false;
    for (const auto& p : pairs) {
        for (const auto& name : names) {
            std::string verdict, detail;
            try {
                gps::LemmaReport r = gps::verify_lemma(name, p.gamma, p.sigma, 0, cap);
                verdict = gps::to_string(r.verdict);
                detail = r.detail;
                if (r.verdict == gps::LemmaVerdict::Fail) any_fail = true;
            } catch (const gps::CapExceeded& e) {
                verdict = "cap-exceeded";
                detail = e.what();
                any_cap = true;
            }
            std::cout << p.name << " " << name << ": " << verdict;
            if (!detail.empty()) std::cout << " — " << detail;
            std::cout << "\n";
        }
        if (suite) {
            // Group-structure identities: |Q| equals the tuple group order,
            // and |P| factors through it, on every suite pair.
            try {
                auto prod = gps::direct_product(p.gamma, p.sigma);
                auto aut = gps::automorphisms(prod.product, cap);
                std::uint64_t q = gps::q_subgroup(p.gamma, p.sigma, aut).order();
                std::uint64_t pp = gps::p_subgroup(p.gamma, p.sigma, aut).order();
                std::uint64_t tuples =
                    gps::sigma_automorphism_group(p.gamma, p.sigma, cap).order();
                std::uint64_t aut_s = gps::automorphisms(p.sigma, cap).order();
                bool ok = q == tuples && pp == tuples * aut_s;
                if (!ok) any_fail = true;
                std::cout << p.name << " identities: " << (ok ? "pass" : "fail") << " (|Q| = "
                          << q << ", |P| = " << pp << ", tuple group = " << tuples << ")\n";
            } catch (const gps::CapExceeded& e) {
                std::cout << p.name << " identities: cap-exceeded — " << e.what() << "\n";
                any_cap = true;
            }
        }
    }
    if (any_fail) {
        std::cerr << "gps: verification failures found\n";
        return kExitInputError;
    }
    if (any_cap) return kExitCapExceeded;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"stability analysis for direct products of graphs"};
    app.require_subcommand(1);

    std::string gamma_path, sigma_path, format = "edgelist", sigma_set, out_path, lemma;
    bool json = false, check_lemmas = false, suite = false;
    std::uint64_t max_aut = 0;  // 0: use GPS_MAX_AUT or the library default
    int max_gamma = 5, jobs = 1;

    CLI::App* analyze = app.add_subcommand("analyze", "analyze one (gamma, sigma) pair");
    analyze->add_option("--gamma", gamma_path, "gamma input file")->required();
    analyze->add_option("--sigma", sigma_path, "sigma input file")->required();
    analyze->add_option("--format", format, "input format")
        ->required()
        ->check(CLI::IsMember({"graph6", "edgelist"}));
    analyze->add_flag("--json", json, "emit the JSON report document");
    analyze->add_option("--max-aut", max_aut, "automorphism enumeration cap");
    analyze->add_flag("--check-lemmas", check_lemmas, "run the lemma suite on the pair");

    CLI::App* census = app.add_subcommand("census", "sweep all gamma classes against a sigma set");
    census->add_option("--max-gamma", max_gamma, "largest gamma order")->required();
    census->add_option("--sigma-set", sigma_set, "k2, c3, c5, k4, or all<=M")->required();
    census->add_option("--jobs", jobs, "worker threads");
    census->add_option("--out", out_path, "write JSONL here instead of stdout");
    census->add_option("--max-aut", max_aut, "automorphism enumeration cap");

    CLI::App* verify = app.add_subcommand("verify", "check lemmas on a pair or the builtin suite");
    verify->add_option("--lemma", lemma, "lemma id or 'all'")->required();
    verify->add_option("--gamma", gamma_path, "gamma input file");
    verify->add_option("--sigma", sigma_path, "sigma input file");
    verify->add_option("--format", format, "input format")
        ->check(CLI::IsMember({"graph6", "edgelist"}));
    verify->add_flag("--builtin-suite", suite, "run on the builtin pair suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        std::uint64_t cap = max_aut > 0 ? max_aut : default_cap();
        if (analyze->parsed())
            return run_analyze(gamma_path, sigma_path, format, json, cap, check_lemmas);
        if (census->parsed()) return run_census(max_gamma, sigma_set, jobs, out_path, cap);
        return run_verify(lemma, gamma_path, sigma_path, format, suite, cap);
    } catch (const gps::CapExceeded& e) {
        std::cerr << "gps: " << e.what() << "\n";
        return kExitCapExceeded;
    } catch (const std::exception& e) {
        std::cerr << "gps: " << e.what() << "\n";
        return kExitInputError;
    }
}
