#include "schubfact/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace schubfact {

namespace {

std::vector<int> validated_word(std::vector<int> word) {
    if (word.empty()) {
        throw std::invalid_argument("permutation must have at least one entry");
    }
    const int n = static_cast<int>(word.size());
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int v : word) {
        if (v < 1 || v > n) {
            throw std::invalid_argument("permutation entries must lie in 1..n");
        }
        if (seen[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("permutation entries must be distinct");
        }
        seen[static_cast<std::size_t>(v)] = 1;
    }
    return word;
}

}  // namespace

Permutation Permutation::identity(int n) {
    if (n < 1) {
        throw std::invalid_argument("permutation size must be at least 1");
    }
    std::vector<int> word(static_cast<std::size_t>(n));
    std::iota(word.begin(), word.end(), 1);
    return Permutation(std::move(word));
}

Permutation Permutation::longest_element(int n) {
    if (n < 1) {
        throw std::invalid_argument("permutation size must be at least 1");
    }
    std::vector<int> word(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        word[static_cast<std::size_t>(i)] = n - i;
    }
    return Permutation(std::move(word));
}

Permutation Permutation::from_one_line(std::vector<int> word) {
    return Permutation(validated_word(std::move(word)));
}

Permutation Permutation::from_string(const std::string& text) {
    if (text.empty()) {
        throw std::invalid_argument("empty permutation string");
    }
    std::vector<int> word;
    if (text.find(',') != std::string::npos) {
        std::stringstream stream(text);
        std::string token;
        while (std::getline(stream, token, ',')) {
            const auto first = token.find_first_not_of(" \t");
            if (first == std::string::npos) {
                throw std::invalid_argument("empty entry in permutation string");
            }
            const auto last = token.find_last_not_of(" \t");
            token = token.substr(first, last - first + 1);
            std::size_t used = 0;
            int value = 0;
            try {
                value = std::stoi(token, &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("bad permutation entry: " + token);
            }
            if (used != token.size()) {
                throw std::invalid_argument("bad permutation entry: " + token);
            }
            word.push_back(value);
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9') {
                throw std::invalid_argument(
                    "compact permutation strings use digits 1-9; "
                    "use the comma-separated form for larger entries");
            }
            word.push_back(c - '0');
        }
    }
    return from_one_line(std::move(word));
}

Permutation Permutation::inverse() const {
    const int n = size();
    std::vector<int> inv(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        inv[static_cast<std::size_t>((*this)(i) - 1)] = i;
    }
    return Permutation(std::move(inv));
}

std::string Permutation::to_string() const {
    std::ostringstream out;
    if (size() <= 9) {
        for (int v : word_) {
            out << v;
        }
    } else {
        for (std::size_t i = 0; i < word_.size(); ++i) {
            if (i > 0) {
                out << ',';
            }
            out << word_[i];
        }
    }
    return out.str();
}

std::ostream& operator<<(std::ostream& os, const Permutation& w) {
    return os << w.to_string();
}

LehmerCode LehmerCode::from_entries(std::vector<int> entries) {
    if (entries.empty()) {
        throw std::invalid_argument("code must have at least one entry");
    }
    const int n = static_cast<int>(entries.size());
    for (int i = 0; i < n; ++i) {
        const int e = entries[static_cast<std::size_t>(i)];
        if (e < 0 || e > n - 1 - i) {
            throw std::invalid_argument("code entry out of range: position " +
                                        std::to_string(i + 1) + " holds " + std::to_string(e));
        }
    }
    return LehmerCode(std::move(entries));
}

int LehmerCode::sum() const {
    int total = 0;
    for (int e : entries_) {
        total += e;
    }
    return total;
}

std::string LehmerCode::to_string() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i > 0) {
            out << ',';
        }
        out << entries_[i];
    }
    out << ')';
    return out.str();
}

std::ostream& operator<<(std::ostream& os, const LehmerCode& code) {
    return os << code.to_string();
}

LehmerCode lehmer_code(const Permutation& w) {
    const int n = w.size();
    std::vector<int> entries(static_cast<std::size_t>(n), 0);
    const auto& word = w.word();
    for (int i = 0; i < n; ++i) {
        int count = 0;
        for (int j = i + 1; j < n; ++j) {
            if (word[static_cast<std::size_t>(j)] < word[static_cast<std::size_t>(i)]) {
                ++count;
            }
        }
        entries[static_cast<std::size_t>(i)] = count;
    }
    return LehmerCode(std::move(entries));
}

Permutation permutation_from_code(const LehmerCode& code) {
    const int n = code.size();
    std::vector<int> unused(static_cast<std::size_t>(n));
    std::iota(unused.begin(), unused.end(), 1);
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const auto pick = static_cast<std::size_t>(code.entry(i));
        word.push_back(unused[pick]);
        unused.erase(unused.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return Permutation::from_one_line(std::move(word));
}

int inversion_count(const Permutation& w) {
    const auto& word = w.word();
    const int n = w.size();
    int count = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (word[static_cast<std::size_t>(i)] > word[static_cast<std::size_t>(j)]) {
                ++count;
            }
        }
    }
    return count;
}

bool increments_bounded(const LehmerCode& code) {
    const auto& entries = code.entries();
    for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
        if (entries[i + 1] > entries[i] + 1) {
            return false;
        }
    }
    return true;
}

bool contains_pattern(const Permutation& w, const Permutation& pattern) {
    const int n = w.size();
    const int k = pattern.size();
    if (k > n) {
        return false;
    }
    const auto& ww = w.word();
    const auto& pw = pattern.word();
    std::vector<int> chosen;
    chosen.reserve(static_cast<std::size_t>(k));
    const std::function<bool(int)> dfs = [&](int start) -> bool {
        const int t = static_cast<int>(chosen.size());
        if (t == k) {
            return true;
        }
        for (int i = start; i + (k - t) <= n; ++i) {
            const int v = ww[static_cast<std::size_t>(i)];
            bool consistent = true;
            for (int s = 0; s < t; ++s) {
                const bool value_below = chosen[static_cast<std::size_t>(s)] < v;
                const bool pattern_below = pw[static_cast<std::size_t>(s)] < pw[static_cast<std::size_t>(t)];
                if (value_below != pattern_below) {
                    consistent = false;
                    break;
                }
            }
            if (consistent) {
                chosen.push_back(v);
                if (dfs(i + 1)) {
                    return true;
                }
                chosen.pop_back();
            }
        }
        return false;
    };
    return dfs(0);
}

const std::array<Permutation, 4>& obstruction_patterns() {
    static const std::array<Permutation, 4> patterns = {
        Permutation::from_string("1432"),
        Permutation::from_string("1423"),
        Permutation::from_string("4132"),
        Permutation::from_string("3142"),
    };
    return patterns;
}

bool avoids_obstructions(const Permutation& w) {
    for (const Permutation& pattern : obstruction_patterns()) {
        if (contains_pattern(w, pattern)) {
            return false;
        }
    }
    return true;
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn) {
    if (n < 1 || n > 12) {
        throw std::invalid_argument("permutation enumeration supports 1 <= n <= 12");
    }
    std::vector<int> word(static_cast<std::size_t>(n));
    std::iota(word.begin(), word.end(), 1);
    do {
        fn(Permutation::from_one_line(word));
    } while (std::next_permutation(word.begin(), word.end()));
}

std::vector<Permutation> all_permutations(int n) {
    if (n < 1 || n > 10) {
        throw std::invalid_argument("materializing S_n supports 1 <= n <= 10");
    }
    std::size_t count = 1;
    for (int i = 2; i <= n; ++i) {
        count *= static_cast<std::size_t>(i);
    }
    std::vector<Permutation> out;
    out.reserve(count);
    for_each_permutation(n, [&](const Permutation& w) { out.push_back(w); });
    return out;
}

}  // namespace schubfact
