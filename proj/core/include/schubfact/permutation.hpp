#pragma once

#include <array>
#include <compare>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace schubfact {

// A permutation of {1, ..., n}, n >= 1, stored in one-line notation.
// Immutable value type; all factory functions validate their input and throw
// std::invalid_argument on malformed data.
class Permutation {
public:
    static Permutation identity(int n);
    static Permutation longest_element(int n);  // n, n-1, ..., 1
    static Permutation from_one_line(std::vector<int> word);
    // Accepts the compact digit form "2143" (entries 1..9) or the
    // comma-separated form "2,1,4,3" (arbitrary size).
    static Permutation from_string(const std::string& text);

    int size() const { return static_cast<int>(word_.size()); }
    const std::vector<int>& word() const { return word_; }
    // 1-indexed image: w(i).
    int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }

    Permutation inverse() const;

    // Compact digit form when n <= 9, comma-separated otherwise.
    std::string to_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    explicit Permutation(std::vector<int> word) : word_(std::move(word)) {}
    std::vector<int> word_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& w);

// The exponent sequence (l_1, ..., l_n) with l_i = #{j > i : w(j) < w(i)}.
// Entry bounds 0 <= l_i <= n - i are enforced on construction.
class LehmerCode {
public:
    static LehmerCode from_entries(std::vector<int> entries);

    int size() const { return static_cast<int>(entries_.size()); }
    // 1-indexed entry l_i.
    int entry(int i) const { return entries_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& entries() const { return entries_; }
    int sum() const;

    std::string to_string() const;  // "(0,2,1,0)"

    friend bool operator==(const LehmerCode&, const LehmerCode&) = default;

private:
    explicit LehmerCode(std::vector<int> entries) : entries_(std::move(entries)) {}
    std::vector<int> entries_;
    friend LehmerCode lehmer_code(const Permutation&);
};

std::ostream& operator<<(std::ostream& os, const LehmerCode& code);

LehmerCode lehmer_code(const Permutation& w);

// Inverse of lehmer_code: the i-th entry picks the (l_i + 1)-th smallest value
// not used by earlier positions.
Permutation permutation_from_code(const LehmerCode& code);

// Number of pairs i < j with w(i) > w(j); equals lehmer_code(w).sum().
int inversion_count(const Permutation& w);

// True when l_{i+1} <= l_i + 1 for every consecutive pair of entries.
bool increments_bounded(const LehmerCode& code);

// True when some subsequence of w's word is order-isomorphic to the pattern.
bool contains_pattern(const Permutation& w, const Permutation& pattern);

// The four patterns whose simultaneous avoidance is tested against
// factorizability: 1432, 1423, 4132, 3142.
const std::array<Permutation, 4>& obstruction_patterns();
bool avoids_obstructions(const Permutation& w);

// Calls fn for every element of S_n in lexicographic one-line order.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn);

// Materializes S_n in lexicographic one-line order (n <= 10).
std::vector<Permutation> all_permutations(int n);

}  // namespace schubfact
