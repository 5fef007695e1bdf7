#pragma once

#include "schubfact/polynomial.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>

namespace schubfact {

// Persistent store of computed Schubert data, keyed by the permutation's
// word string.  Backed by one JSON file; unreadable or incompatible files are
// ignored (with a warning on stderr) rather than failing the run.
//
// Thread-safety: find() is safe to call concurrently as long as no insert()
// runs at the same time; the sweep buffers new entries per worker and inserts
// them after the workers join.
class PolynomialCache {
public:
    struct Entry {
        Polynomial polynomial;
        // Absent when the entry was produced without enumerating pipe dreams.
        std::optional<std::int64_t> pipe_dream_count;
        std::optional<bool> separation_all_dreams;
    };

    // $SCHUBFACT_CACHE_DIR, else $XDG_CACHE_HOME/schubfact,
    // else $HOME/.cache/schubfact, else ./.schubfact-cache.
    static std::filesystem::path default_directory();

    // Creates the directory if needed and loads the backing file if present.
    // On filesystem errors the cache degrades to memory-only.
    static PolynomialCache open(const std::filesystem::path& directory);

    const Entry* find(const std::string& word) const;
    void insert(const std::string& word, Entry entry);
    std::size_t size() const { return entries_.size(); }

    // Rewrites the backing file when entries were added or replaced.
    void commit();

private:
    std::filesystem::path file_;
    std::map<std::string, Entry> entries_;
    bool dirty_ = false;
};

}  // namespace schubfact
