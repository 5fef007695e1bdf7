#pragma once

#include "schubfact/sweep.hpp"

#include <string>
#include <vector>

namespace schubfact {

// JSON document for one sweep ({meta, summary, records}) or, for several
// sweeps, {meta{n_min, n_max, tool_version}, sweeps: [...]}.  Deterministic:
// fixed key order, records in word order, no timestamps.
std::string render_json(const std::vector<SweepReport>& reports);

// One CSV table with header
// word,code,avoids,factors,factorization,pipe_dreams,degree
// covering all sweeps in order.
std::string render_csv(const std::vector<SweepReport>& reports);

// Human-readable summary: one quadrant line per n, then the aggregated check
// results over the whole range.
std::string render_text(const std::vector<SweepReport>& reports);

// Only the aggregated check block of render_text.
std::string render_lemmas_text(const std::vector<SweepReport>& reports);

}  // namespace schubfact
