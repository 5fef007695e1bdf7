#pragma once

#include "schubfact/permutation.hpp"
#include "schubfact/polynomial.hpp"

#include <compare>
#include <string>
#include <vector>

namespace schubfact {

// A lattice cell, 1-indexed: row counted from the top, column from the left.
struct Cell {
    int row = 0;
    int col = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

// A pipe dream of size n: a set of crossing tiles placed strictly inside the
// staircase region {(r, c) : r + c <= n}; every other staircase cell (and in
// particular the whole boundary antidiagonal r + c = n + 1) carries an elbow
// tile.  Wire i enters row i from the west and exits through the top edge.
class PipeDream {
public:
    PipeDream(int grid_size, std::vector<Cell> crosses);

    int grid_size() const { return n_; }
    const std::vector<Cell>& crosses() const { return crosses_; }  // sorted by (row, col)
    int cross_count() const { return static_cast<int>(crosses_.size()); }
    bool has_cross(int row, int col) const;

    // Product over crossing tiles of x_row.
    Monomial weight() const;

    // ASCII picture: row r holds n + 1 - r cells, '+' for a crossing tile and
    // '.' for an elbow; every row ends with '\n'.
    std::string render() const;

    friend bool operator==(const PipeDream&, const PipeDream&) = default;
    friend auto operator<=>(const PipeDream&, const PipeDream&) = default;

private:
    int n_;
    std::vector<Cell> crosses_;
};

// The dream whose row i is the cross prefix (i, 1), ..., (i, l_i).
PipeDream bottom_pipe_dream(const LehmerCode& code);

struct TraceResult {
    Permutation permutation;  // wire i exits at column permutation(i)
    bool reduced;             // no two wires cross more than once
};

// Follows every wire through the tile grid.
TraceResult trace_wires(const PipeDream& dream);

// The permutation realized by the dream's wires.
Permutation permutation_of(const PipeDream& dream);

// True when the dream's wires realize w and no pair of wires crosses twice.
bool is_valid_for(const PipeDream& dream, const Permutation& w);

// All dreams reachable by one generalized ladder move: a cross at (i, j) with
// (i, j+1) empty climbs to (i-m, j+1), m >= 1, provided rows strictly between
// hold crosses in both columns j and j+1, the destination row is empty in both
// columns, and the destination stays inside the staircase.  Each cross admits
// at most one such move; results are ordered by the moved cross.
std::vector<PipeDream> ladder_moves(const PipeDream& dream);

// Every pipe dream of w: the closure of the bottom dream under ladder moves,
// deduplicated and sorted by cross list.
std::vector<PipeDream> all_pipe_dreams(const Permutation& w);

// The unique dream of w whose crosses form a top-justified prefix of every
// column; throws std::logic_error if no such dream or several exist.
PipeDream top_pipe_dream(const Permutation& w);

// A maximal contiguous vertical run of crosses within one column.
struct ColumnBlock {
    int col = 0;
    int top_row = 0;
    int bottom_row = 0;
    friend bool operator==(const ColumnBlock&, const ColumnBlock&) = default;
};

// Blocks ordered by (column, top row).
std::vector<ColumnBlock> column_blocks(const PipeDream& dream);

// For every pair of blocks B in column c and B' in column c' with c < c' and
// B' lying strictly above B (bottom_row(B') < top_row(B)), the northeast
// diagonal through B's top cross must pass strictly below the northeast
// diagonal through B''s bottom cross: top_row(B) + c > bottom_row(B') + c'.
// Pairs within one column, and pairs without that strictly-above relation,
// impose no constraint.
bool diagonal_separation(const PipeDream& dream);

}  // namespace schubfact
