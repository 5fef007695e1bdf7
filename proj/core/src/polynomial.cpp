#include "schubfact/polynomial.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace schubfact {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t result = 0;
    if (__builtin_add_overflow(a, b, &result)) {
        throw std::overflow_error("integer overflow in addition");
    }
    return result;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t result = 0;
    if (__builtin_mul_overflow(a, b, &result)) {
        throw std::overflow_error("integer overflow in multiplication");
    }
    return result;
}

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    std::int64_t result = 1;
    for (int i = 1; i <= k; ++i) {
        result = checked_mul(result, n - k + i) / i;
    }
    return result;
}

Monomial Monomial::one() {
    return Monomial{};
}

Monomial Monomial::variable(int i, int power) {
    if (i < 1) {
        throw std::invalid_argument("variable index must be at least 1");
    }
    if (power < 0) {
        throw std::invalid_argument("monomial exponents must be nonnegative");
    }
    if (power == 0) {
        return Monomial{};
    }
    std::vector<int> exponents(static_cast<std::size_t>(i), 0);
    exponents.back() = power;
    Monomial m;
    m.exponents_ = std::move(exponents);
    return m;
}

Monomial Monomial::from_exponents(std::vector<int> exponents) {
    for (int e : exponents) {
        if (e < 0) {
            throw std::invalid_argument("monomial exponents must be nonnegative");
        }
    }
    while (!exponents.empty() && exponents.back() == 0) {
        exponents.pop_back();
    }
    Monomial m;
    m.exponents_ = std::move(exponents);
    return m;
}

int Monomial::exponent(int i) const {
    if (i < 1) {
        throw std::invalid_argument("variable index must be at least 1");
    }
    const auto idx = static_cast<std::size_t>(i - 1);
    return idx < exponents_.size() ? exponents_[idx] : 0;
}

int Monomial::degree() const {
    int total = 0;
    for (int e : exponents_) {
        total += e;
    }
    return total;
}

Monomial Monomial::times(const Monomial& other) const {
    std::vector<int> exponents(std::max(exponents_.size(), other.exponents_.size()), 0);
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        const long long a = i < exponents_.size() ? exponents_[i] : 0;
        const long long b = i < other.exponents_.size() ? other.exponents_[i] : 0;
        const long long sum = a + b;
        if (sum > std::numeric_limits<int>::max()) {
            throw std::overflow_error("monomial exponent overflow");
        }
        exponents[i] = static_cast<int>(sum);
    }
    return from_exponents(std::move(exponents));
}

std::string Monomial::to_string() const {
    if (exponents_.empty()) {
        return "1";
    }
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        if (exponents_[i] == 0) {
            continue;
        }
        if (!first) {
            out << '*';
        }
        first = false;
        out << 'x' << (i + 1);
        if (exponents_[i] > 1) {
            out << '^' << exponents_[i];
        }
    }
    return out.str();
}

std::ostream& operator<<(std::ostream& os, const Monomial& m) {
    return os << m.to_string();
}

bool RevlexLess::operator()(const Monomial& a, const Monomial& b) const {
    const auto& ea = a.exponents();
    const auto& eb = b.exponents();
    const std::size_t len = std::max(ea.size(), eb.size());
    for (std::size_t i = len; i-- > 0;) {
        const int xa = i < ea.size() ? ea[i] : 0;
        const int xb = i < eb.size() ? eb[i] : 0;
        if (xa != xb) {
            return xa < xb;
        }
    }
    return false;
}

Polynomial Polynomial::zero() {
    return Polynomial{};
}

Polynomial Polynomial::constant(std::int64_t value) {
    Polynomial p;
    p.add_term(Monomial::one(), value);
    return p;
}

Polynomial Polynomial::from_monomial(Monomial m, std::int64_t coefficient) {
    Polynomial p;
    p.add_term(m, coefficient);
    return p;
}

std::int64_t Polynomial::coefficient(const Monomial& m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
}

std::optional<std::pair<Monomial, std::int64_t>> Polynomial::leading_term() const {
    if (terms_.empty()) {
        return std::nullopt;
    }
    const auto& last = *terms_.rbegin();
    return std::make_pair(last.first, last.second);
}

std::optional<int> Polynomial::homogeneous_degree() const {
    if (terms_.empty()) {
        return 0;
    }
    const int degree = terms_.begin()->first.degree();
    for (const auto& [monomial, coefficient] : terms_) {
        (void)coefficient;
        if (monomial.degree() != degree) {
            return std::nullopt;
        }
    }
    return degree;
}

std::int64_t Polynomial::coefficient_sum() const {
    std::int64_t total = 0;
    for (const auto& [monomial, coefficient] : terms_) {
        (void)monomial;
        total = checked_add(total, coefficient);
    }
    return total;
}

Polynomial Polynomial::swap_variables(int i) const {
    if (i < 1) {
        throw std::invalid_argument("variable index must be at least 1");
    }
    Polynomial out;
    for (const auto& [monomial, coefficient] : terms_) {
        std::vector<int> exponents = monomial.exponents();
        if (exponents.size() < static_cast<std::size_t>(i + 1)) {
            exponents.resize(static_cast<std::size_t>(i + 1), 0);
        }
        std::swap(exponents[static_cast<std::size_t>(i - 1)], exponents[static_cast<std::size_t>(i)]);
        out.add_term(Monomial::from_exponents(std::move(exponents)), coefficient);
    }
    return out;
}

void Polynomial::add_term(const Monomial& m, std::int64_t coefficient) {
    if (coefficient == 0) {
        return;
    }
    const auto [it, inserted] = terms_.try_emplace(m, 0);
    it->second = checked_add(it->second, coefficient);
    if (it->second == 0) {
        terms_.erase(it);
    }
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial out = a;
    for (const auto& [monomial, coefficient] : b.terms_) {
        out.add_term(monomial, coefficient);
    }
    return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    Polynomial out = a;
    for (const auto& [monomial, coefficient] : b.terms_) {
        if (coefficient == std::numeric_limits<std::int64_t>::min()) {
            throw std::overflow_error("integer overflow in negation");
        }
        out.add_term(monomial, -coefficient);
    }
    return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            out.add_term(ma.times(mb), checked_mul(ca, cb));
        }
    }
    return out;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [monomial, coefficient] = *it;
        const bool negative = coefficient < 0;
        const std::uint64_t magnitude =
            negative ? ~static_cast<std::uint64_t>(coefficient) + 1
                     : static_cast<std::uint64_t>(coefficient);
        if (first) {
            if (negative) {
                out << '-';
            }
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        if (monomial.is_one()) {
            out << magnitude;
        } else if (magnitude == 1) {
            out << monomial.to_string();
        } else {
            out << magnitude << '*' << monomial.to_string();
        }
    }
    return out.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    return os << p.to_string();
}

Polynomial elementary(int b, int a) {
    if (b < 1 || b > a) {
        throw std::invalid_argument("elementary symmetric polynomial requires 1 <= b <= a");
    }
    Polynomial out;
    // Walk all b-subsets of {0, ..., a-1} in lexicographic order.
    std::vector<int> chosen(static_cast<std::size_t>(b));
    for (int i = 0; i < b; ++i) {
        chosen[static_cast<std::size_t>(i)] = i;
    }
    while (true) {
        std::vector<int> exponents(static_cast<std::size_t>(a), 0);
        for (int index : chosen) {
            exponents[static_cast<std::size_t>(index)] = 1;
        }
        out.add_term(Monomial::from_exponents(std::move(exponents)), 1);
        int t = b - 1;
        while (t >= 0 && chosen[static_cast<std::size_t>(t)] == a - b + t) {
            --t;
        }
        if (t < 0) {
            break;
        }
        ++chosen[static_cast<std::size_t>(t)];
        for (int s = t + 1; s < b; ++s) {
            chosen[static_cast<std::size_t>(s)] = chosen[static_cast<std::size_t>(s - 1)] + 1;
        }
    }
    return out;
}

Monomial code_monomial(const LehmerCode& code) {
    return Monomial::from_exponents(code.entries());
}

}  // namespace schubfact
