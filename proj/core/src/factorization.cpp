#include "schubfact/factorization.hpp"

#include "schubfact/pipe_dream.hpp"
#include "schubfact/schubert.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace schubfact {

std::string IntervalFactor::to_string() const {
    std::ostringstream out;
    out << "e_" << degree << "(x1";
    if (var_count > 1) {
        out << "..x" << var_count;
    }
    out << ')';
    return out.str();
}

std::ostream& operator<<(std::ostream& os, const IntervalFactor& f) {
    return os << f.to_string();
}

Factorization Factorization::from_factors(std::vector<IntervalFactor> factors) {
    for (const IntervalFactor& factor : factors) {
        if (factor.degree < 1 || factor.degree > factor.var_count) {
            throw std::invalid_argument("factor requires 1 <= degree <= var_count");
        }
    }
    std::sort(factors.begin(), factors.end());
    Factorization out;
    out.factors_ = std::move(factors);
    return out;
}

Polynomial Factorization::product() const {
    Polynomial out = Polynomial::constant(1);
    for (const IntervalFactor& factor : factors_) {
        out = out * elementary(factor.degree, factor.var_count);
    }
    return out;
}

std::string Factorization::to_string() const {
    if (factors_.empty()) {
        return "1";
    }
    std::ostringstream out;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i > 0) {
            out << " * ";
        }
        out << factors_[i].to_string();
    }
    return out.str();
}

std::ostream& operator<<(std::ostream& os, const Factorization& f) {
    return os << f.to_string();
}

std::vector<Factorization> interval_decompositions(const LehmerCode& code) {
    const int n = code.size();
    std::vector<int> remaining = code.entries();
    std::vector<std::pair<int, int>> acc;  // 0-based [start, end] intervals
    std::vector<Factorization> out;

    // Peel intervals off the first position still carrying a nonzero entry;
    // ends at a shared start are taken in non-increasing order, which walks
    // each multiset of intervals exactly once.
    const std::function<void(int, int)> recurse = [&](int last_start, int last_end) {
        int start = 0;
        while (start < n && remaining[static_cast<std::size_t>(start)] == 0) {
            ++start;
        }
        if (start == n) {
            std::vector<IntervalFactor> factors;
            factors.reserve(acc.size());
            for (const auto& [s, e] : acc) {
                factors.push_back({e + 1, e - s + 1});
            }
            out.push_back(Factorization::from_factors(std::move(factors)));
            return;
        }
        int max_end = start;
        while (max_end + 1 < n && remaining[static_cast<std::size_t>(max_end + 1)] > 0) {
            ++max_end;
        }
        if (last_start == start) {
            max_end = std::min(max_end, last_end);
        }
        for (int end = max_end; end >= start; --end) {
            for (int r = start; r <= end; ++r) {
                --remaining[static_cast<std::size_t>(r)];
            }
            acc.emplace_back(start, end);
            recurse(start, end);
            acc.pop_back();
            for (int r = start; r <= end; ++r) {
                ++remaining[static_cast<std::size_t>(r)];
            }
        }
    };
    recurse(-1, -1);

    std::stable_sort(out.begin(), out.end(),
                     [](const Factorization& a, const Factorization& b) {
                         return a.factor_count() < b.factor_count();
                     });
    return out;
}

Factorization candidate_from_columns(const Permutation& w) {
    const PipeDream bottom = bottom_pipe_dream(lehmer_code(w));
    std::vector<IntervalFactor> factors;
    for (const ColumnBlock& block : column_blocks(bottom)) {
        factors.push_back({block.bottom_row, block.bottom_row - block.top_row + 1});
    }
    return Factorization::from_factors(std::move(factors));
}

FactorizationSearch factorize_with_details(const Permutation& w, const Polynomial& schubert) {
    FactorizationSearch search;

    const Factorization candidate = candidate_from_columns(w);
    ++search.decompositions_tried;
    if (candidate.product() == schubert) {
        search.result = candidate;
        search.candidate_used = true;
        return search;
    }

    const std::int64_t target_sum = schubert.coefficient_sum();
    const LehmerCode code = lehmer_code(w);
    for (Factorization& decomposition : interval_decompositions(code)) {
        if (decomposition == candidate) {
            continue;  // already tried above
        }
        ++search.decompositions_tried;
        // The product of positive polynomials evaluates at (1,...,1) to the
        // product of the factors' binomial coefficients; mismatch rules the
        // decomposition out before any multiplication.  The accumulator is
        // wide enough that one factor past the target cannot wrap.
        unsigned __int128 product_sum = 1;
        bool sum_matches = true;
        for (const IntervalFactor& factor : decomposition.factors()) {
            product_sum *= static_cast<unsigned __int128>(binomial(factor.var_count, factor.degree));
            if (product_sum > static_cast<unsigned __int128>(target_sum)) {
                sum_matches = false;
                break;
            }
        }
        if (!sum_matches || product_sum != static_cast<unsigned __int128>(target_sum)) {
            continue;
        }
        if (decomposition.product() == schubert) {
            search.result = std::move(decomposition);
            return search;
        }
    }
    return search;
}

std::optional<Factorization> factorize(const Permutation& w, const Polynomial& schubert) {
    return factorize_with_details(w, schubert).result;
}

std::optional<Factorization> factorize(const Permutation& w) {
    return factorize(w, schubert_via_divided_differences(w));
}

std::optional<RectangleShape> uniform_block_shape(const LehmerCode& code) {
    const auto& entries = code.entries();
    std::size_t i = 0;
    while (i < entries.size() && entries[i] == 0) {
        ++i;
    }
    if (i == entries.size()) {
        return std::nullopt;
    }
    const int value = entries[i];
    std::size_t j = i;
    while (j < entries.size() && entries[j] == value) {
        ++j;
    }
    for (std::size_t k = j; k < entries.size(); ++k) {
        if (entries[k] != 0) {
            return std::nullopt;
        }
    }
    return RectangleShape{static_cast<int>(i), value, static_cast<int>(j - i)};
}

std::optional<RectangleShape> rectangle_shape(const LehmerCode& code) {
    const auto shape = uniform_block_shape(code);
    if (shape && shape->leading_zeros >= 1 && shape->entry >= 2 && shape->run_length >= 2) {
        return shape;
    }
    return std::nullopt;
}

}  // namespace schubfact
