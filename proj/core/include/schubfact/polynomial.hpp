#pragma once

#include "schubfact/permutation.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace schubfact {

// int64 arithmetic that throws std::overflow_error instead of wrapping.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

// Binomial coefficient C(n, k) with checked arithmetic; 0 when k < 0 or k > n.
std::int64_t binomial(int n, int k);

// A monomial in variables x1, x2, ...: an exponent vector with trailing zeros
// trimmed, so equal monomials have equal representations.
class Monomial {
public:
    Monomial() = default;  // the constant monomial 1
    static Monomial one();
    static Monomial variable(int i, int power = 1);
    static Monomial from_exponents(std::vector<int> exponents);

    // 1-indexed exponent of x_i; 0 beyond the stored length.
    int exponent(int i) const;
    const std::vector<int>& exponents() const { return exponents_; }
    int degree() const;
    bool is_one() const { return exponents_.empty(); }

    Monomial times(const Monomial& other) const;

    std::string to_string() const;  // "x1^2*x3"; "1" for the constant

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<int> exponents_;
};

std::ostream& operator<<(std::ostream& os, const Monomial& m);

// Reverse-lexicographic comparison: of two distinct monomials, the larger is
// the one with the larger exponent at the LARGEST index where they differ.
struct RevlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse multivariate polynomial with int64 coefficients.  Terms are kept in
// ascending reverse-lexicographic order; zero coefficients are never stored.
// All coefficient arithmetic is overflow-checked.
class Polynomial {
public:
    using TermMap = std::map<Monomial, std::int64_t, RevlexLess>;

    Polynomial() = default;  // zero
    static Polynomial zero();
    static Polynomial constant(std::int64_t value);
    static Polynomial from_monomial(Monomial m, std::int64_t coefficient = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t term_count() const { return terms_.size(); }
    std::int64_t coefficient(const Monomial& m) const;
    const TermMap& terms() const { return terms_; }

    // Largest term in reverse-lexicographic order; nullopt for zero.
    std::optional<std::pair<Monomial, std::int64_t>> leading_term() const;

    // Common degree of all terms when the polynomial is homogeneous
    // (0 for the zero polynomial), nullopt otherwise.
    std::optional<int> homogeneous_degree() const;

    // Value at x1 = x2 = ... = 1.
    std::int64_t coefficient_sum() const;

    // The polynomial with x_i and x_{i+1} exchanged (i >= 1).
    Polynomial swap_variables(int i) const;

    // Adds coefficient*m, erasing the term if the total cancels to zero.
    void add_term(const Monomial& m, std::int64_t coefficient);

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    // Terms in descending reverse-lexicographic order, e.g.
    // "x2^2*x3 + x1*x2*x3 + x1^2*x3"; "0" for the zero polynomial.
    std::string to_string() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

// Elementary symmetric polynomial e_b(x_1, ..., x_a): the sum of all C(a, b)
// squarefree monomials of degree b in the first a variables (1 <= b <= a).
Polynomial elementary(int b, int a);

// x^code: the monomial whose i-th exponent is the i-th code entry.
Monomial code_monomial(const LehmerCode& code);

}  // namespace schubfact
