#pragma once

#include "schubfact/permutation.hpp"
#include "schubfact/polynomial.hpp"

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace schubfact {

// One factor e_degree(x_1, ..., x_var_count) with 1 <= degree <= var_count.
// Corresponds to the row interval [var_count - degree + 1, var_count].
struct IntervalFactor {
    int var_count = 0;  // a in e_b(x_1..x_a)
    int degree = 0;     // b

    std::string to_string() const;  // "e_2(x1..x3)"; "e_1(x1)" when a == 1

    friend bool operator==(const IntervalFactor&, const IntervalFactor&) = default;
    friend auto operator<=>(const IntervalFactor&, const IntervalFactor&) = default;
};

std::ostream& operator<<(std::ostream& os, const IntervalFactor& f);

// A multiset of elementary factors, kept sorted by (var_count, degree).
// The empty factorization is the empty product 1.
class Factorization {
public:
    Factorization() = default;
    static Factorization from_factors(std::vector<IntervalFactor> factors);

    const std::vector<IntervalFactor>& factors() const { return factors_; }
    std::size_t factor_count() const { return factors_.size(); }
    bool empty() const { return factors_.empty(); }

    Polynomial product() const;

    std::string to_string() const;  // "e_1(x1) * e_2(x1..x3)"; "1" when empty

    friend bool operator==(const Factorization&, const Factorization&) = default;

private:
    std::vector<IntervalFactor> factors_;
};

std::ostream& operator<<(std::ostream& os, const Factorization& f);

// Every multiset of row intervals whose indicator vectors sum to the code,
// returned as factorizations, fewest factors first (stable within equal
// counts).  Each interval [s, e] becomes the factor e_{e-s+1}(x_1..x_e).
std::vector<Factorization> interval_decompositions(const LehmerCode& code);

// The factorization read off the column blocks of w's bottom pipe dream:
// a block occupying rows [t, b] (in any column) contributes the factor
// e_{b-t+1}(x_1..x_b).  Empty for the identity.
Factorization candidate_from_columns(const Permutation& w);

struct FactorizationSearch {
    std::optional<Factorization> result;
    // Candidates examined: the column candidate counts once, then every
    // further interval decomposition examined (pruned or multiplied out).
    std::int64_t decompositions_tried = 0;
    // True when the column candidate itself is the returned witness.
    bool candidate_used = false;
};

// Decides whether schubert equals a product of elementary symmetric
// polynomials in leading variable intervals.  Tries the column candidate
// first, then all interval decompositions of the code, fewest factors first,
// pruning decompositions whose coefficient sum (the product of binomials
// C(a, b)) cannot match.  All prunes are exact.
FactorizationSearch factorize_with_details(const Permutation& w, const Polynomial& schubert);

std::optional<Factorization> factorize(const Permutation& w, const Polynomial& schubert);

// Convenience overload computing the Schubert polynomial itself.
std::optional<Factorization> factorize(const Permutation& w);

// A code of the form 0^A N^B 0^* (A leading zeros, then a constant run).
struct RectangleShape {
    int leading_zeros = 0;  // A
    int entry = 0;          // N
    int run_length = 0;     // B
    friend bool operator==(const RectangleShape&, const RectangleShape&) = default;
};

// The shape of any code consisting of one constant nonzero run padded by
// zeros; nullopt otherwise.
std::optional<RectangleShape> uniform_block_shape(const LehmerCode& code);

// Strict rectangles only: A >= 1, N >= 2, B >= 2.  These never factor.
std::optional<RectangleShape> rectangle_shape(const LehmerCode& code);

}  // namespace schubfact
