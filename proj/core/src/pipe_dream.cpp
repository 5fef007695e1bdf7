#include "schubfact/pipe_dream.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace schubfact {

PipeDream::PipeDream(int grid_size, std::vector<Cell> crosses)
    : n_(grid_size), crosses_(std::move(crosses)) {
    if (n_ < 1) {
        throw std::invalid_argument("pipe dream grid size must be at least 1");
    }
    for (const Cell& cell : crosses_) {
        if (cell.row < 1 || cell.col < 1 || cell.row + cell.col > n_) {
            throw std::invalid_argument("crossing tile outside the staircase region");
        }
    }
    std::sort(crosses_.begin(), crosses_.end());
    if (std::adjacent_find(crosses_.begin(), crosses_.end()) != crosses_.end()) {
        throw std::invalid_argument("duplicate crossing tile");
    }
}

bool PipeDream::has_cross(int row, int col) const {
    return std::binary_search(crosses_.begin(), crosses_.end(), Cell{row, col});
}

Monomial PipeDream::weight() const {
    std::vector<int> exponents(static_cast<std::size_t>(n_), 0);
    for (const Cell& cell : crosses_) {
        ++exponents[static_cast<std::size_t>(cell.row - 1)];
    }
    return Monomial::from_exponents(std::move(exponents));
}

std::string PipeDream::render() const {
    std::string out;
    for (int row = 1; row <= n_; ++row) {
        for (int col = 1; col <= n_ + 1 - row; ++col) {
            out += has_cross(row, col) ? '+' : '.';
        }
        out += '\n';
    }
    return out;
}

PipeDream bottom_pipe_dream(const LehmerCode& code) {
    std::vector<Cell> crosses;
    const int n = code.size();
    for (int row = 1; row <= n; ++row) {
        for (int col = 1; col <= code.entry(row); ++col) {
            crosses.push_back({row, col});
        }
    }
    return PipeDream(n, std::move(crosses));
}

TraceResult trace_wires(const PipeDream& dream) {
    const int n = dream.grid_size();
    const std::size_t stride = static_cast<std::size_t>(n) + 2;
    std::vector<char> cross(stride * stride, 0);
    for (const Cell& cell : dream.crosses()) {
        cross[static_cast<std::size_t>(cell.row) * stride + static_cast<std::size_t>(cell.col)] = 1;
    }
    // For the double-crossing test, remember which wire traverses each
    // crossing tile horizontally and which vertically.
    std::vector<int> horizontal(stride * stride, 0);
    std::vector<int> vertical(stride * stride, 0);

    std::vector<int> word(static_cast<std::size_t>(n), 0);
    for (int wire = 1; wire <= n; ++wire) {
        int row = wire;
        int col = 1;
        bool heading_east = true;
        while (row >= 1) {
            const std::size_t at = static_cast<std::size_t>(row) * stride + static_cast<std::size_t>(col);
            if (row + col <= n && cross[at]) {
                // Crossing tile: pass straight through.
                (heading_east ? horizontal : vertical)[at] = wire;
            } else {
                // Elbow tile: west turns north, south turns east.
                heading_east = !heading_east;
            }
            if (heading_east) {
                ++col;
            } else {
                --row;
            }
        }
        word[static_cast<std::size_t>(wire - 1)] = col;
    }

    std::vector<std::pair<int, int>> crossings;
    crossings.reserve(dream.crosses().size());
    for (const Cell& cell : dream.crosses()) {
        const std::size_t at = static_cast<std::size_t>(cell.row) * stride + static_cast<std::size_t>(cell.col);
        const int h = horizontal[at];
        const int v = vertical[at];
        crossings.emplace_back(std::min(h, v), std::max(h, v));
    }
    std::sort(crossings.begin(), crossings.end());
    const bool reduced =
        std::adjacent_find(crossings.begin(), crossings.end()) == crossings.end();

    return TraceResult{Permutation::from_one_line(std::move(word)), reduced};
}

Permutation permutation_of(const PipeDream& dream) {
    return trace_wires(dream).permutation;
}

bool is_valid_for(const PipeDream& dream, const Permutation& w) {
    if (dream.grid_size() != w.size()) {
        return false;
    }
    const TraceResult traced = trace_wires(dream);
    return traced.reduced && traced.permutation == w;
}

std::vector<PipeDream> ladder_moves(const PipeDream& dream) {
    const int n = dream.grid_size();
    std::vector<PipeDream> out;
    for (const Cell& cell : dream.crosses()) {
        const int i = cell.row;
        const int j = cell.col;
        if (dream.has_cross(i, j + 1)) {
            continue;  // the column to the right is blocked at this row
        }
        for (int target = i - 1; target >= 1; --target) {
            const bool left = dream.has_cross(target, j);
            const bool right = dream.has_cross(target, j + 1);
            if (left && right) {
                continue;  // a full rung; the cross may climb past it
            }
            if (!left && !right) {
                if (target + j + 1 <= n) {
                    std::vector<Cell> crosses = dream.crosses();
                    crosses.erase(std::find(crosses.begin(), crosses.end(), cell));
                    crosses.push_back({target, j + 1});
                    out.emplace_back(n, std::move(crosses));
                }
            }
            break;  // first incomplete rung ends the climb either way
        }
    }
    return out;
}

std::vector<PipeDream> all_pipe_dreams(const Permutation& w) {
    PipeDream bottom = bottom_pipe_dream(lehmer_code(w));
    std::set<PipeDream> seen;
    std::deque<const PipeDream*> queue;
    queue.push_back(&*seen.insert(std::move(bottom)).first);
    while (!queue.empty()) {
        const PipeDream* current = queue.front();
        queue.pop_front();
        for (PipeDream& next : ladder_moves(*current)) {
            const auto [it, inserted] = seen.insert(std::move(next));
            if (inserted) {
                queue.push_back(&*it);
            }
        }
    }
    return {seen.begin(), seen.end()};
}

namespace {

bool top_justified(const PipeDream& dream) {
    for (const Cell& cell : dream.crosses()) {
        if (cell.row > 1 && !dream.has_cross(cell.row - 1, cell.col)) {
            return false;
        }
    }
    return true;
}

}  // namespace

PipeDream top_pipe_dream(const Permutation& w) {
    const std::vector<PipeDream> dreams = all_pipe_dreams(w);
    const PipeDream* found = nullptr;
    for (const PipeDream& dream : dreams) {
        if (top_justified(dream)) {
            if (found != nullptr) {
                throw std::logic_error("multiple top-justified pipe dreams for " + w.to_string());
            }
            found = &dream;
        }
    }
    if (found == nullptr) {
        throw std::logic_error("no top-justified pipe dream for " + w.to_string());
    }
    return *found;
}

std::vector<ColumnBlock> column_blocks(const PipeDream& dream) {
    std::map<int, std::vector<int>> columns;
    for (const Cell& cell : dream.crosses()) {
        columns[cell.col].push_back(cell.row);
    }
    std::vector<ColumnBlock> out;
    for (auto& [col, rows] : columns) {
        std::sort(rows.begin(), rows.end());
        int top = rows.front();
        int bottom = rows.front();
        for (std::size_t k = 1; k <= rows.size(); ++k) {
            if (k < rows.size() && rows[k] == bottom + 1) {
                bottom = rows[k];
                continue;
            }
            out.push_back({col, top, bottom});
            if (k < rows.size()) {
                top = bottom = rows[k];
            }
        }
    }
    return out;
}

bool diagonal_separation(const PipeDream& dream) {
    const std::vector<ColumnBlock> blocks = column_blocks(dream);
    for (const ColumnBlock& lower : blocks) {
        for (const ColumnBlock& upper : blocks) {
            if (lower.col < upper.col && upper.bottom_row < lower.top_row &&
                lower.top_row + lower.col <= upper.bottom_row + upper.col) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace schubfact
