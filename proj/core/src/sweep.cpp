#include "schubfact/sweep.hpp"

#include "schubfact/cache.hpp"
#include "schubfact/factorization.hpp"
#include "schubfact/pipe_dream.hpp"
#include "schubfact/schubert.hpp"

#include <atomic>
#include <exception>
#include <stdexcept>
#include <thread>
#include <utility>

namespace schubfact {

namespace {

struct WorkerResult {
    ClassificationRecord record;
    bool avoids_increment_patterns = false;
    bool bounded = false;
    bool avoids_separation_patterns = false;
    bool separation_bottom = false;
    std::optional<bool> separation_all;
    bool candidate_used = false;
    bool is_rectangle = false;
    bool is_boundary = false;
    std::optional<std::pair<std::string, PolynomialCache::Entry>> cache_insert;
};

WorkerResult classify(const Permutation& w, const SweepOptions& options) {
    WorkerResult out;
    const LehmerCode code = lehmer_code(w);
    const std::string word = w.to_string();

    const auto& patterns = obstruction_patterns();  // 1432, 1423, 4132, 3142
    const bool has_1432 = contains_pattern(w, patterns[0]);
    const bool has_1423 = contains_pattern(w, patterns[1]);
    const bool has_4132 = contains_pattern(w, patterns[2]);
    const bool has_3142 = contains_pattern(w, patterns[3]);

    out.avoids_increment_patterns = !has_1423 && !has_1432;
    out.avoids_separation_patterns = !has_3142 && !has_4132;
    out.bounded = increments_bounded(code);
    out.separation_bottom = diagonal_separation(bottom_pipe_dream(code));

    Polynomial poly;
    std::optional<std::int64_t> pipe_dream_count;
    const PolynomialCache::Entry* hit =
        options.cache != nullptr ? options.cache->find(word) : nullptr;
    if (options.oracle_only) {
        if (hit != nullptr) {
            poly = hit->polynomial;
        } else {
            poly = schubert_via_divided_differences(w);
            if (options.cache != nullptr) {
                out.cache_insert.emplace(
                    word, PolynomialCache::Entry{poly, std::nullopt, std::nullopt});
            }
        }
    } else {
        if (hit != nullptr && hit->pipe_dream_count.has_value() &&
            hit->separation_all_dreams.has_value()) {
            poly = hit->polynomial;
            pipe_dream_count = *hit->pipe_dream_count;
            out.separation_all = *hit->separation_all_dreams;
        } else {
            const std::vector<PipeDream> dreams = all_pipe_dreams(w);
            bool all_separated = true;
            for (const PipeDream& dream : dreams) {
                poly.add_term(dream.weight(), 1);
                if (!diagonal_separation(dream)) {
                    all_separated = false;
                }
            }
            pipe_dream_count = static_cast<std::int64_t>(dreams.size());
            out.separation_all = all_separated;
            if (options.cache != nullptr) {
                out.cache_insert.emplace(
                    word, PolynomialCache::Entry{poly, pipe_dream_count, all_separated});
            }
        }
    }

    const std::optional<int> degree = poly.homogeneous_degree();
    if (!degree.has_value() || *degree != inversion_count(w)) {
        throw std::logic_error("Schubert polynomial of " + word +
                               " is not homogeneous of the expected degree");
    }

    FactorizationSearch search = factorize_with_details(w, poly);
    out.candidate_used = search.candidate_used;

    out.is_rectangle = rectangle_shape(code).has_value();
    out.is_boundary = !out.is_rectangle && uniform_block_shape(code).has_value();

    out.record.word = word;
    out.record.code = code.entries();
    out.record.avoids = !has_1432 && !has_1423 && !has_4132 && !has_3142;
    out.record.factors = search.result.has_value();
    if (search.result.has_value()) {
        out.record.factorization = search.result->to_string();
    }
    out.record.pipe_dream_count = pipe_dream_count;
    out.record.degree = *degree;
    return out;
}

}  // namespace

SweepReport run_sweep(int n, const SweepOptions& options) {
    const std::vector<Permutation> permutations = all_permutations(n);
    const std::size_t count = permutations.size();
    std::vector<WorkerResult> results(count);

    unsigned int thread_count =
        options.threads > 0 ? static_cast<unsigned int>(options.threads)
                            : std::max(1u, std::thread::hardware_concurrency());
    thread_count = static_cast<unsigned int>(
        std::min<std::size_t>(thread_count, count));

    if (thread_count <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            results[i] = classify(permutations[i], options);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::exception_ptr> errors(thread_count);
        std::vector<std::thread> workers;
        workers.reserve(thread_count);
        for (unsigned int t = 0; t < thread_count; ++t) {
            workers.emplace_back([&, t]() {
                try {
                    while (true) {
                        const std::size_t i = next.fetch_add(1);
                        if (i >= count) {
                            break;
                        }
                        results[i] = classify(permutations[i], options);
                    }
                } catch (...) {
                    errors[t] = std::current_exception();
                    next.store(count);  // wind the other workers down
                }
            });
        }
        for (std::thread& worker : workers) {
            worker.join();
        }
        for (const std::exception_ptr& error : errors) {
            if (error) {
                std::rethrow_exception(error);
            }
        }
    }

    SweepReport report;
    report.n = n;
    report.records.reserve(count);
    SweepSummary& summary = report.summary;
    if (!options.oracle_only) {
        summary.separation_all_dreams = CheckTally{};
    }

    for (WorkerResult& result : results) {
        ++summary.total;
        const bool avoids = result.record.avoids;
        const bool factors = result.record.factors;
        if (avoids && factors) {
            ++summary.quadrants.avoids_and_factors;
        } else if (avoids && !factors) {
            ++summary.quadrants.avoids_and_not_factors;
            summary.counterexamples.push_back(result.record.word);
        } else if (!avoids && factors) {
            ++summary.quadrants.contains_and_factors;
            summary.counterexamples.push_back(result.record.word);
        } else {
            ++summary.quadrants.contains_and_not_factors;
        }

        if (result.avoids_increment_patterns) {
            ++summary.increment_bound.checked;
            if (!result.bounded) {
                ++summary.increment_bound.violations;
            }
        } else if (result.bounded) {
            ++summary.increment_converse_exceptions;
        }

        if (result.avoids_separation_patterns) {
            ++summary.separation_bottom.checked;
            if (!result.separation_bottom) {
                ++summary.separation_bottom.violations;
            }
            if (summary.separation_all_dreams.has_value() && result.separation_all.has_value()) {
                ++summary.separation_all_dreams->checked;
                if (!*result.separation_all) {
                    ++summary.separation_all_dreams->violations;
                }
            }
        }

        if (avoids) {
            ++summary.column_candidate.checked;
            if (!result.candidate_used) {
                ++summary.column_candidate.violations;
            }
        }
        if (factors && !result.candidate_used) {
            ++summary.noncolumn_factorizations;
        }

        if (result.is_rectangle) {
            ++summary.rectangle.checked;
            if (factors) {
                ++summary.rectangle.violations;
            }
        } else if (result.is_boundary) {
            ++summary.boundary_total;
            if (factors) {
                ++summary.boundary_factored;
            }
        }

        if (result.cache_insert.has_value() && options.cache != nullptr) {
            options.cache->insert(result.cache_insert->first,
                                  std::move(result.cache_insert->second));
        }
        report.records.push_back(std::move(result.record));
    }
    return report;
}

bool conjecture_clean(const SweepReport& report) {
    return report.summary.counterexamples.empty();
}

bool lemmas_clean(const SweepReport& report) {
    const SweepSummary& summary = report.summary;
    return summary.increment_bound.violations == 0 &&
           summary.separation_bottom.violations == 0 &&
           summary.column_candidate.violations == 0 &&
           summary.rectangle.violations == 0;
}

}  // namespace schubfact
