#include "schubfact/schubert.hpp"

#include "schubfact/pipe_dream.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace schubfact {

Polynomial divided_difference(const Polynomial& f, int i) {
    if (i < 1) {
        throw std::invalid_argument("divided difference index must be at least 1");
    }
    Polynomial out;
    for (const auto& [monomial, coefficient] : f.terms()) {
        const int a = monomial.exponent(i);
        const int b = monomial.exponent(i + 1);
        if (a == b) {
            continue;  // the term is symmetric in x_i, x_{i+1}
        }
        // x_i^a x_{i+1}^b - x_i^b x_{i+1}^a over x_i - x_{i+1} expands to the
        // full geometric block between the two exponent pairs.
        std::vector<int> exponents = monomial.exponents();
        if (exponents.size() < static_cast<std::size_t>(i + 1)) {
            exponents.resize(static_cast<std::size_t>(i + 1), 0);
        }
        const std::size_t xi = static_cast<std::size_t>(i - 1);
        const std::size_t xj = static_cast<std::size_t>(i);
        if (a > b) {
            for (int s = 0; s < a - b; ++s) {
                exponents[xi] = a - 1 - s;
                exponents[xj] = b + s;
                out.add_term(Monomial::from_exponents(exponents), coefficient);
            }
        } else {
            for (int s = 0; s < b - a; ++s) {
                exponents[xi] = a + s;
                exponents[xj] = b - 1 - s;
                out.add_term(Monomial::from_exponents(exponents), -coefficient);
            }
        }
    }
    return out;
}

Monomial staircase_monomial(int n) {
    if (n < 1) {
        throw std::invalid_argument("staircase monomial requires n >= 1");
    }
    std::vector<int> exponents(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        exponents[static_cast<std::size_t>(i)] = n - 1 - i;
    }
    return Monomial::from_exponents(std::move(exponents));
}

Polynomial schubert_via_pipe_dreams(const Permutation& w) {
    Polynomial out;
    for (const PipeDream& dream : all_pipe_dreams(w)) {
        out.add_term(dream.weight(), 1);
    }
    return out;
}

namespace {

// u = v with positions i, i+1 exchanged (right multiplication by the simple
// transposition s_i).
Permutation swap_positions(const Permutation& v, int i) {
    std::vector<int> word = v.word();
    std::swap(word[static_cast<std::size_t>(i - 1)], word[static_cast<std::size_t>(i)]);
    return Permutation::from_one_line(std::move(word));
}

// w lies weakly below u on the right: every reduced word for w extends to one
// for u, i.e. inversions(u) == inversions(w) + inversions(w^{-1} u).
bool right_weak_below(const Permutation& w, const Permutation& w_inverse, const Permutation& u) {
    std::vector<int> product(static_cast<std::size_t>(u.size()), 0);
    for (int j = 1; j <= u.size(); ++j) {
        product[static_cast<std::size_t>(j - 1)] = w_inverse(u(j));
    }
    const Permutation w_inverse_u = Permutation::from_one_line(std::move(product));
    return inversion_count(u) == inversion_count(w) + inversion_count(w_inverse_u);
}

}  // namespace

Polynomial schubert_via_divided_differences(const Permutation& w) {
    const int n = w.size();
    Permutation v = Permutation::longest_element(n);
    Polynomial f = Polynomial::from_monomial(staircase_monomial(n));
    const Permutation w_inverse = w.inverse();
    while (v != w) {
        bool stepped = false;
        for (int i = 1; i < n; ++i) {
            if (v(i) <= v(i + 1)) {
                continue;  // not a descent; s_i would increase the length
            }
            const Permutation u = swap_positions(v, i);
            if (!right_weak_below(w, w_inverse, u)) {
                continue;  // stepping here would leave w unreachable
            }
            f = divided_difference(f, i);
            v = u;
            stepped = true;
            break;
        }
        if (!stepped) {
            throw std::logic_error("no admissible descent from " + v.to_string() +
                                   " toward " + w.to_string());
        }
    }
    return f;
}

}  // namespace schubfact
