#include "schubfact/cache.hpp"
#include "schubfact/factorization.hpp"
#include "schubfact/permutation.hpp"
#include "schubfact/pipe_dream.hpp"
#include "schubfact/polynomial.hpp"
#include "schubfact/report.hpp"
#include "schubfact/schubert.hpp"
#include "schubfact/sweep.hpp"
#include "schubfact/version.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace schubfact;

constexpr int kFullSweepCap = 8;
constexpr int kOracleSweepCap = 9;

struct CacheHolder {
    std::optional<PolynomialCache> cache;

    explicit CacheHolder(bool enabled) {
        if (enabled) {
            cache = PolynomialCache::open(PolynomialCache::default_directory());
        }
    }
    PolynomialCache* get() { return cache.has_value() ? &*cache : nullptr; }
    void commit() {
        if (cache.has_value()) {
            cache->commit();
        }
    }
};

struct PipeDreamData {
    Polynomial polynomial;
    std::int64_t count = 0;
    bool all_separated = true;
};

PipeDreamData compute_via_pipe_dreams(const Permutation& w) {
    PipeDreamData data;
    for (const PipeDream& dream : all_pipe_dreams(w)) {
        data.polynomial.add_term(dream.weight(), 1);
        ++data.count;
        if (!diagonal_separation(dream)) {
            data.all_separated = false;
        }
    }
    return data;
}

int cmd_schubert(const std::string& word, bool oracle, bool check, bool use_cache) {
    const Permutation w = Permutation::from_string(word);
    CacheHolder holder(use_cache);
    PolynomialCache* cache = holder.get();
    const std::string key = w.to_string();
    const PolynomialCache::Entry* hit = cache != nullptr ? cache->find(key) : nullptr;

    Polynomial poly;
    std::optional<std::int64_t> pipe_dreams;
    if (oracle) {
        if (hit != nullptr) {
            poly = hit->polynomial;
        } else {
            poly = schubert_via_divided_differences(w);
            if (cache != nullptr) {
                cache->insert(key, {poly, std::nullopt, std::nullopt});
            }
        }
    } else {
        if (hit != nullptr && hit->pipe_dream_count.has_value()) {
            poly = hit->polynomial;
            pipe_dreams = *hit->pipe_dream_count;
        } else {
            const PipeDreamData data = compute_via_pipe_dreams(w);
            poly = data.polynomial;
            pipe_dreams = data.count;
            if (cache != nullptr) {
                cache->insert(key, {poly, data.count, data.all_separated});
            }
        }
    }

    if (check) {
        const Polynomial other =
            oracle ? compute_via_pipe_dreams(w).polynomial : schubert_via_divided_differences(w);
        if (!(poly == other)) {
            std::cerr << "schubfact: pipe-dream and divided-difference results disagree for "
                      << key << "\n";
            return 1;
        }
    }

    const std::optional<int> degree = poly.homogeneous_degree();
    std::cout << poly.to_string() << "\n";
    std::cout << "degree: " << (degree.has_value() ? *degree : -1) << "\n";
    std::cout << "terms: " << poly.term_count() << "\n";
    if (pipe_dreams.has_value()) {
        std::cout << "pipe dreams: " << *pipe_dreams << "\n";
    }
    if (check) {
        std::cout << "check: ok\n";
    }
    holder.commit();
    return 0;
}

int cmd_factor(const std::string& word, bool use_cache) {
    const Permutation w = Permutation::from_string(word);
    CacheHolder holder(use_cache);
    PolynomialCache* cache = holder.get();
    const std::string key = w.to_string();
    const PolynomialCache::Entry* hit = cache != nullptr ? cache->find(key) : nullptr;

    Polynomial poly;
    if (hit != nullptr) {
        poly = hit->polynomial;
    } else {
        poly = schubert_via_divided_differences(w);
        if (cache != nullptr) {
            cache->insert(key, {poly, std::nullopt, std::nullopt});
        }
    }

    const FactorizationSearch search = factorize_with_details(w, poly);
    if (search.result.has_value()) {
        std::cout << search.result->to_string() << "\n";
    } else {
        std::cout << "not factorizable\n";
    }
    std::cout << "decompositions tried: " << search.decompositions_tried << "\n";
    holder.commit();
    return 0;
}

int cmd_render(const std::string& word, const std::string& which) {
    const Permutation w = Permutation::from_string(word);
    if (which == "bottom") {
        std::cout << bottom_pipe_dream(lehmer_code(w)).render();
    } else if (which == "top") {
        std::cout << top_pipe_dream(w).render();
    } else if (which == "all") {
        bool first = true;
        for (const PipeDream& dream : all_pipe_dreams(w)) {
            if (!first) {
                std::cout << "\n";
            }
            first = false;
            std::cout << dream.render();
        }
    } else {
        std::cerr << "schubfact: --which must be bottom, top, or all\n";
        return 2;
    }
    return 0;
}

struct SweepArgs {
    int n_min = 1;
    int n_max = -1;
    bool oracle_only = false;
    int threads = 0;
    int max_n = 0;
    bool no_cache = false;
    std::string json_path;
    std::string csv_path;
};

int run_sweeps(const SweepArgs& args, std::vector<SweepReport>& reports) {
    const int n_max = args.n_max > 0 ? args.n_max : args.n_min;
    if (args.n_min < 1 || n_max < args.n_min) {
        std::cerr << "schubfact: sweep range must satisfy 1 <= n_min <= n_max\n";
        return 2;
    }
    const int cap = args.max_n > 0 ? args.max_n
                                   : (args.oracle_only ? kOracleSweepCap : kFullSweepCap);
    if (n_max > cap) {
        std::cerr << "schubfact: refusing to sweep n=" << n_max << " (cap " << cap
                  << "); pass --max-n to override\n";
        return 2;
    }
    CacheHolder holder(!args.no_cache);
    SweepOptions options;
    options.oracle_only = args.oracle_only;
    options.threads = args.threads;
    options.cache = holder.get();
    for (int n = args.n_min; n <= n_max; ++n) {
        reports.push_back(run_sweep(n, options));
    }
    holder.commit();
    return 0;
}

int write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out.is_open()) {
        std::cerr << "schubfact: cannot write " << path << "\n";
        return 1;
    }
    out << content;
    return 0;
}

int cmd_verify(const SweepArgs& args) {
    std::vector<SweepReport> reports;
    if (const int rc = run_sweeps(args, reports); rc != 0) {
        return rc;
    }
    std::cout << render_text(reports);
    if (!args.json_path.empty()) {
        if (const int rc = write_file(args.json_path, render_json(reports)); rc != 0) {
            return rc;
        }
    }
    if (!args.csv_path.empty()) {
        if (const int rc = write_file(args.csv_path, render_csv(reports)); rc != 0) {
            return rc;
        }
    }
    bool clean = true;
    for (const SweepReport& report : reports) {
        clean = clean && conjecture_clean(report) && lemmas_clean(report);
    }
    std::cout << (clean ? "result: clean\n" : "result: violations found\n");
    return clean ? 0 : 1;
}

int cmd_lemmas(const SweepArgs& args) {
    std::vector<SweepReport> reports;
    if (const int rc = run_sweeps(args, reports); rc != 0) {
        return rc;
    }
    std::cout << render_lemmas_text(reports);
    bool clean = true;
    for (const SweepReport& report : reports) {
        clean = clean && lemmas_clean(report);
    }
    std::cout << (clean ? "result: clean\n" : "result: violations found\n");
    return clean ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Schubert polynomials, pipe dreams, and factorization into elementary "
        "symmetric polynomials"};
    app.set_version_flag("--version", schubfact::kToolVersion);
    app.require_subcommand(1);

    std::string schubert_word;
    bool schubert_oracle = false;
    bool schubert_check = false;
    bool schubert_no_cache = false;
    CLI::App* schubert_cmd =
        app.add_subcommand("schubert", "Print the Schubert polynomial of a permutation");
    schubert_cmd->add_option("word", schubert_word, "Permutation, e.g. 2143 or 2,1,4,3")
        ->required();
    schubert_cmd->add_flag("--oracle", schubert_oracle,
                           "Compute by divided differences instead of pipe dreams");
    schubert_cmd->add_flag("--check", schubert_check,
                           "Compute both ways and verify they agree");
    schubert_cmd->add_flag("--no-cache", schubert_no_cache, "Do not read or write the cache");

    std::string factor_word;
    bool factor_no_cache = false;
    CLI::App* factor_cmd = app.add_subcommand(
        "factor", "Factor the Schubert polynomial into elementary symmetric polynomials");
    factor_cmd->add_option("word", factor_word, "Permutation, e.g. 2143 or 2,1,4,3")->required();
    factor_cmd->add_flag("--no-cache", factor_no_cache, "Do not read or write the cache");

    std::string render_word;
    std::string render_which = "bottom";
    CLI::App* render_cmd = app.add_subcommand("render", "Draw pipe dreams as ASCII grids");
    render_cmd->add_option("word", render_word, "Permutation, e.g. 2143 or 2,1,4,3")->required();
    render_cmd->add_option("--which", render_which, "bottom (default), top, or all");

    SweepArgs verify_args;
    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "Classify every permutation in a size range and check all claims");
    verify_cmd->add_option("n_min", verify_args.n_min, "Smallest n to sweep")->required();
    verify_cmd->add_option("n_max", verify_args.n_max, "Largest n to sweep (default: n_min)");
    verify_cmd->add_flag("--oracle-only", verify_args.oracle_only,
                         "Divided differences only; skip pipe-dream statistics");
    verify_cmd->add_option("--threads", verify_args.threads, "Worker threads (0: auto)");
    verify_cmd->add_option("--max-n", verify_args.max_n, "Override the sweep size cap");
    verify_cmd->add_flag("--no-cache", verify_args.no_cache, "Do not read or write the cache");
    verify_cmd->add_option("--json", verify_args.json_path, "Write the JSON report here");
    verify_cmd->add_option("--csv", verify_args.csv_path, "Write the CSV table here");

    SweepArgs lemmas_args;
    CLI::App* lemmas_cmd =
        app.add_subcommand("lemmas", "Run only the per-claim checks over a size range");
    lemmas_cmd->add_option("n_min", lemmas_args.n_min, "Smallest n to sweep")->required();
    lemmas_cmd->add_option("n_max", lemmas_args.n_max, "Largest n to sweep (default: n_min)");
    lemmas_cmd->add_flag("--oracle-only", lemmas_args.oracle_only,
                         "Divided differences only; skip pipe-dream statistics");
    lemmas_cmd->add_option("--threads", lemmas_args.threads, "Worker threads (0: auto)");
    lemmas_cmd->add_option("--max-n", lemmas_args.max_n, "Override the sweep size cap");
    lemmas_cmd->add_flag("--no-cache", lemmas_args.no_cache, "Do not read or write the cache");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(schubert_cmd)) {
            return cmd_schubert(schubert_word, schubert_oracle, schubert_check,
                                !schubert_no_cache);
        }
        if (app.got_subcommand(factor_cmd)) {
            return cmd_factor(factor_word, !factor_no_cache);
        }
        if (app.got_subcommand(render_cmd)) {
            return cmd_render(render_word, render_which);
        }
        if (app.got_subcommand(verify_cmd)) {
            return cmd_verify(verify_args);
        }
        if (app.got_subcommand(lemmas_cmd)) {
            return cmd_lemmas(lemmas_args);
        }
    } catch (const std::invalid_argument& error) {
        std::cerr << "schubfact: " << error.what() << "\n";
        return 2;
    } catch (const std::exception& error) {
        std::cerr << "schubfact: " << error.what() << "\n";
        return 1;
    }
    return 0;
}
