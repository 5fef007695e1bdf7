#pragma once

#include "schubfact/permutation.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace schubfact {

class PolynomialCache;

// Per-permutation classification row.
struct ClassificationRecord {
    std::string word;
    std::vector<int> code;
    bool avoids = false;   // avoids all four obstruction patterns
    bool factors = false;  // Schubert polynomial factors into elementary pieces
    std::optional<std::string> factorization;        // rendered witness when factors
    std::optional<std::int64_t> pipe_dream_count;    // absent in oracle-only mode
    int degree = 0;
};

struct QuadrantCounts {
    std::int64_t avoids_and_factors = 0;
    std::int64_t avoids_and_not_factors = 0;
    std::int64_t contains_and_factors = 0;
    std::int64_t contains_and_not_factors = 0;
};

struct CheckTally {
    std::int64_t checked = 0;
    std::int64_t violations = 0;
};

struct SweepSummary {
    std::int64_t total = 0;
    QuadrantCounts quadrants;
    // Words landing in either off quadrant (avoids-but-not-factors or
    // contains-but-factors), in word order.
    std::vector<std::string> counterexamples;

    // Asserted: every {1423,1432}-avoider has code increments bounded by 1.
    CheckTally increment_bound;
    // Observed: words with bounded increments that contain 1423 or 1432.
    std::int64_t increment_converse_exceptions = 0;

    // Asserted: every {3142,4132}-avoider's bottom dream satisfies
    // diagonal separation.
    CheckTally separation_bottom;
    // Observed over the same avoiders: some dream violating separation counts
    // as a violation here.  Absent in oracle-only mode.
    std::optional<CheckTally> separation_all_dreams;

    // Asserted: for every four-pattern avoider the column candidate is a
    // valid factorization witness.
    CheckTally column_candidate;
    // Observed: factorizable words whose witness is not the column candidate.
    std::int64_t noncolumn_factorizations = 0;

    // Asserted: strict rectangle codes never factor.
    CheckTally rectangle;
    // Observed: uniform-run codes that miss strictness (near-rectangles).
    std::int64_t boundary_total = 0;
    std::int64_t boundary_factored = 0;
};

struct SweepOptions {
    // Compute polynomials by divided differences only and skip every
    // pipe-dream statistic (counts and all-dreams separation).
    bool oracle_only = false;
    // 0 the hardware concurrency.  Results are identical for any value.
    int threads = 0;
    // Optional shared cache; new entries are inserted (not committed).
    PolynomialCache* cache = nullptr;
};

struct SweepReport {
    int n = 0;
    SweepSummary summary;
    std::vector<ClassificationRecord> records;  // in word order
};

// Classifies every element of S_n and tallies all checks.
SweepReport run_sweep(int n, const SweepOptions& options = {});

// Both off quadrants empty.
bool conjecture_clean(const SweepReport& report);

// Every asserted check has zero violations.
bool lemmas_clean(const SweepReport& report);

}  // namespace schubfact
