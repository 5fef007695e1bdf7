#include "schubfact/report.hpp"

#include "schubfact/version.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace schubfact {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json tally_json(const CheckTally& tally, const char* violation_key = "violations") {
    ordered_json out;
    out["status"] = tally.violations == 0 ? "pass" : "fail";
    out["checked"] = tally.checked;
    out[violation_key] = tally.violations;
    return out;
}

ordered_json summary_json(const SweepSummary& summary) {
    ordered_json out;
    out["total"] = summary.total;

    ordered_json quadrants;
    quadrants["avoids_and_factors"] = summary.quadrants.avoids_and_factors;
    quadrants["avoids_and_not_factors"] = summary.quadrants.avoids_and_not_factors;
    quadrants["contains_and_factors"] = summary.quadrants.contains_and_factors;
    quadrants["contains_and_not_factors"] = summary.quadrants.contains_and_not_factors;
    out["quadrants"] = quadrants;

    out["counterexamples"] = summary.counterexamples;

    ordered_json lemmas;

    ordered_json conjecture;
    conjecture["avoiders_factor"] = ordered_json{
        {"status", summary.quadrants.avoids_and_not_factors == 0 ? "pass" : "fail"},
        {"violations", summary.quadrants.avoids_and_not_factors},
    };
    conjecture["factorizers_avoid"] = ordered_json{
        {"status", "observed"},
        {"counterexamples", summary.quadrants.contains_and_factors},
    };
    lemmas["conjecture"] = conjecture;

    ordered_json increment = tally_json(summary.increment_bound);
    increment["converse_exceptions"] = summary.increment_converse_exceptions;
    lemmas["increment_bound"] = increment;

    lemmas["diagonal_separation_bottom"] = tally_json(summary.separation_bottom);

    if (summary.separation_all_dreams.has_value()) {
        ordered_json all_dreams;
        all_dreams["status"] = "observed";
        all_dreams["checked"] = summary.separation_all_dreams->checked;
        all_dreams["exceptions"] = summary.separation_all_dreams->violations;
        lemmas["diagonal_separation_all_dreams"] = all_dreams;
    } else {
        lemmas["diagonal_separation_all_dreams"] = ordered_json{{"status", "skipped"}};
    }

    ordered_json candidate = tally_json(summary.column_candidate);
    candidate["noncolumn_factorizations"] = summary.noncolumn_factorizations;
    lemmas["column_candidate"] = candidate;

    ordered_json rectangle = tally_json(summary.rectangle);
    rectangle["boundary_total"] = summary.boundary_total;
    rectangle["boundary_factored"] = summary.boundary_factored;
    lemmas["rectangle_obstruction"] = rectangle;

    out["lemma_statuses"] = lemmas;
    return out;
}

ordered_json record_json(const ClassificationRecord& record) {
    ordered_json out;
    out["word"] = record.word;
    out["code"] = record.code;
    out["avoids"] = record.avoids;
    out["factors"] = record.factors;
    if (record.factorization.has_value()) {
        out["factorization"] = *record.factorization;
    } else {
        out["factorization"] = nullptr;
    }
    if (record.pipe_dream_count.has_value()) {
        out["pipe_dreams"] = *record.pipe_dream_count;
    } else {
        out["pipe_dreams"] = nullptr;
    }
    out["degree"] = record.degree;
    return out;
}

ordered_json sweep_json(const SweepReport& report) {
    ordered_json out;
    out["n"] = report.n;
    out["summary"] = summary_json(report.summary);
    ordered_json records = ordered_json::array();
    for (const ClassificationRecord& record : report.records) {
        records.push_back(record_json(record));
    }
    out["records"] = records;
    return out;
}

struct AggregateTallies {
    int n_min = 0;
    int n_max = 0;
    std::int64_t avoids_and_not_factors = 0;
    std::int64_t contains_and_factors = 0;
    CheckTally increment_bound;
    std::int64_t increment_converse_exceptions = 0;
    CheckTally separation_bottom;
    bool separation_all_present = false;
    CheckTally separation_all;
    CheckTally column_candidate;
    std::int64_t noncolumn_factorizations = 0;
    CheckTally rectangle;
    std::int64_t boundary_total = 0;
    std::int64_t boundary_factored = 0;
    std::vector<std::string> counterexamples;
};

AggregateTallies aggregate(const std::vector<SweepReport>& reports) {
    if (reports.empty()) {
        throw std::invalid_argument("no sweep reports to render");
    }
    AggregateTallies agg;
    agg.n_min = reports.front().n;
    agg.n_max = reports.front().n;
    for (const SweepReport& report : reports) {
        agg.n_min = std::min(agg.n_min, report.n);
        agg.n_max = std::max(agg.n_max, report.n);
        const SweepSummary& s = report.summary;
        agg.avoids_and_not_factors += s.quadrants.avoids_and_not_factors;
        agg.contains_and_factors += s.quadrants.contains_and_factors;
        agg.increment_bound.checked += s.increment_bound.checked;
        agg.increment_bound.violations += s.increment_bound.violations;
        agg.increment_converse_exceptions += s.increment_converse_exceptions;
        agg.separation_bottom.checked += s.separation_bottom.checked;
        agg.separation_bottom.violations += s.separation_bottom.violations;
        if (s.separation_all_dreams.has_value()) {
            agg.separation_all_present = true;
            agg.separation_all.checked += s.separation_all_dreams->checked;
            agg.separation_all.violations += s.separation_all_dreams->violations;
        }
        agg.column_candidate.checked += s.column_candidate.checked;
        agg.column_candidate.violations += s.column_candidate.violations;
        agg.noncolumn_factorizations += s.noncolumn_factorizations;
        agg.rectangle.checked += s.rectangle.checked;
        agg.rectangle.violations += s.rectangle.violations;
        agg.boundary_total += s.boundary_total;
        agg.boundary_factored += s.boundary_factored;
        for (const std::string& word : s.counterexamples) {
            agg.counterexamples.push_back(word);
        }
    }
    return agg;
}

void append_lemma_lines(std::ostringstream& out, const AggregateTallies& agg) {
    const auto pass_fail = [](const CheckTally& tally) {
        return tally.violations == 0 ? "pass" : "FAIL";
    };
    out << "  avoiders factor (asserted): "
        << (agg.avoids_and_not_factors == 0 ? "pass" : "FAIL") << " ("
        << agg.avoids_and_not_factors << " violations)\n";
    out << "  factorizers avoid (conjectured): observed (" << agg.contains_and_factors
        << " counterexamples)\n";
    out << "  code increments bounded for {1423,1432}-avoiders (asserted): "
        << pass_fail(agg.increment_bound) << " (" << agg.increment_bound.checked
        << " checked, " << agg.increment_bound.violations << " violations; converse observed with "
        << agg.increment_converse_exceptions << " exceptions)\n";
    out << "  diagonal separation of bottom dreams for {3142,4132}-avoiders (asserted): "
        << pass_fail(agg.separation_bottom) << " (" << agg.separation_bottom.checked
        << " checked, " << agg.separation_bottom.violations << " violations)\n";
    if (agg.separation_all_present) {
        out << "  diagonal separation across all dreams: observed ("
            << agg.separation_all.checked << " checked, " << agg.separation_all.violations
            << " exceptions)\n";
    } else {
        out << "  diagonal separation across all dreams: skipped\n";
    }
    out << "  column candidate witnesses for pattern avoiders (asserted): "
        << pass_fail(agg.column_candidate) << " (" << agg.column_candidate.checked
        << " checked, " << agg.column_candidate.violations << " failures; "
        << agg.noncolumn_factorizations << " noncolumn factorizations observed)\n";
    out << "  rectangle codes never factor (asserted): " << pass_fail(agg.rectangle) << " ("
        << agg.rectangle.checked << " checked, " << agg.rectangle.violations
        << " violations; near-rectangle boundary observed " << agg.boundary_factored << "/"
        << agg.boundary_total << " factored)\n";
}

}  // namespace

std::string render_json(const std::vector<SweepReport>& reports) {
    if (reports.empty()) {
        throw std::invalid_argument("no sweep reports to render");
    }
    ordered_json out;
    if (reports.size() == 1) {
        const SweepReport& report = reports.front();
        ordered_json meta;
        meta["n"] = report.n;
        meta["tool_version"] = kToolVersion;
        out["meta"] = meta;
        out["summary"] = summary_json(report.summary);
        ordered_json records = ordered_json::array();
        for (const ClassificationRecord& record : report.records) {
            records.push_back(record_json(record));
        }
        out["records"] = records;
    } else {
        const AggregateTallies agg = aggregate(reports);
        ordered_json meta;
        meta["n_min"] = agg.n_min;
        meta["n_max"] = agg.n_max;
        meta["tool_version"] = kToolVersion;
        out["meta"] = meta;
        ordered_json sweeps = ordered_json::array();
        for (const SweepReport& report : reports) {
            sweeps.push_back(sweep_json(report));
        }
        out["sweeps"] = sweeps;
    }
    return out.dump(2) + "\n";
}

std::string render_csv(const std::vector<SweepReport>& reports) {
    std::ostringstream out;
    out << "word,code,avoids,factors,factorization,pipe_dreams,degree\n";
    for (const SweepReport& report : reports) {
        for (const ClassificationRecord& record : report.records) {
            out << record.word << ",\"(";
            for (std::size_t i = 0; i < record.code.size(); ++i) {
                if (i > 0) {
                    out << ',';
                }
                out << record.code[i];
            }
            out << ")\"," << (record.avoids ? "true" : "false") << ','
                << (record.factors ? "true" : "false") << ',';
            if (record.factorization.has_value()) {
                out << *record.factorization;
            }
            out << ',';
            if (record.pipe_dream_count.has_value()) {
                out << *record.pipe_dream_count;
            }
            out << ',' << record.degree << '\n';
        }
    }
    return out.str();
}

std::string render_text(const std::vector<SweepReport>& reports) {
    const AggregateTallies agg = aggregate(reports);
    std::ostringstream out;
    for (const SweepReport& report : reports) {
        const QuadrantCounts& q = report.summary.quadrants;
        out << "n=" << report.n << ": total=" << report.summary.total
            << " avoids_and_factors=" << q.avoids_and_factors
            << " avoids_and_not_factors=" << q.avoids_and_not_factors
            << " contains_and_factors=" << q.contains_and_factors
            << " contains_and_not_factors=" << q.contains_and_not_factors << '\n';
    }
    if (agg.n_min == agg.n_max) {
        out << "summary for n=" << agg.n_min << ":\n";
    } else {
        out << "summary for n=" << agg.n_min << ".." << agg.n_max << ":\n";
    }
    append_lemma_lines(out, agg);
    if (agg.counterexamples.empty()) {
        out << "counterexamples: none\n";
    } else {
        out << "counterexamples:";
        std::size_t shown = 0;
        for (const std::string& word : agg.counterexamples) {
            if (shown == 20) {
                out << " ... (" << agg.counterexamples.size() << " total)";
                break;
            }
            out << ' ' << word;
            ++shown;
        }
        out << '\n';
    }
    return out.str();
}

std::string render_lemmas_text(const std::vector<SweepReport>& reports) {
    const AggregateTallies agg = aggregate(reports);
    std::ostringstream out;
    if (agg.n_min == agg.n_max) {
        out << "checks for n=" << agg.n_min << ":\n";
    } else {
        out << "checks for n=" << agg.n_min << ".." << agg.n_max << ":\n";
    }
    append_lemma_lines(out, agg);
    return out.str();
}

}  // namespace schubfact
