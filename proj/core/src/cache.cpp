#include "schubfact/cache.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <utility>

namespace schubfact {

namespace {

constexpr int kCacheFormatVersion = 1;
constexpr const char* kCacheFileName = "schubert-cache.json";

using ordered_json = nlohmann::ordered_json;

ordered_json entry_to_json(const PolynomialCache::Entry& entry) {
    ordered_json terms = ordered_json::array();
    for (const auto& [monomial, coefficient] : entry.polynomial.terms()) {
        terms.push_back(ordered_json::array({monomial.exponents(), coefficient}));
    }
    ordered_json out;
    out["terms"] = terms;
    if (entry.pipe_dream_count.has_value()) {
        out["pipe_dreams"] = *entry.pipe_dream_count;
    } else {
        out["pipe_dreams"] = nullptr;
    }
    if (entry.separation_all_dreams.has_value()) {
        out["separation_all_dreams"] = *entry.separation_all_dreams;
    } else {
        out["separation_all_dreams"] = nullptr;
    }
    return out;
}

PolynomialCache::Entry entry_from_json(const ordered_json& data) {
    PolynomialCache::Entry entry;
    for (const auto& term : data.at("terms")) {
        const std::vector<int> exponents = term.at(0).get<std::vector<int>>();
        const std::int64_t coefficient = term.at(1).get<std::int64_t>();
        entry.polynomial.add_term(Monomial::from_exponents(exponents), coefficient);
    }
    const auto& pipe_dreams = data.at("pipe_dreams");
    if (!pipe_dreams.is_null()) {
        entry.pipe_dream_count = pipe_dreams.get<std::int64_t>();
    }
    const auto& separation = data.at("separation_all_dreams");
    if (!separation.is_null()) {
        entry.separation_all_dreams = separation.get<bool>();
    }
    return entry;
}

}  // namespace

std::filesystem::path PolynomialCache::default_directory() {
    if (const char* dir = std::getenv("SCHUBFACT_CACHE_DIR"); dir != nullptr && *dir != '\0') {
        return std::filesystem::path(dir);
    }
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg != nullptr && *xdg != '\0') {
        return std::filesystem::path(xdg) / "schubfact";
    }
    if (const char* home = std::getenv("HOME"); home != nullptr && *home != '\0') {
        return std::filesystem::path(home) / ".cache" / "schubfact";
    }
    return std::filesystem::path(".schubfact-cache");
}

PolynomialCache PolynomialCache::open(const std::filesystem::path& directory) {
    PolynomialCache cache;
    std::error_code ec;
    std::filesystem::create_directories(directory, ec);
    if (ec) {
        std::cerr << "schubfact: cannot create cache directory " << directory
                  << " (" << ec.message() << "); continuing without a cache file\n";
        return cache;
    }
    cache.file_ = directory / kCacheFileName;
    std::ifstream in(cache.file_);
    if (!in.is_open()) {
        return cache;
    }
    try {
        const ordered_json data = ordered_json::parse(in);
        if (data.at("version").get<int>() != kCacheFormatVersion) {
            std::cerr << "schubfact: ignoring cache file with unsupported version: "
                      << cache.file_ << "\n";
            return cache;
        }
        for (const auto& [word, entry] : data.at("entries").items()) {
            cache.entries_.emplace(word, entry_from_json(entry));
        }
    } catch (const std::exception& error) {
        std::cerr << "schubfact: ignoring unreadable cache file " << cache.file_ << " ("
                  << error.what() << ")\n";
        cache.entries_.clear();
    }
    return cache;
}

const PolynomialCache::Entry* PolynomialCache::find(const std::string& word) const {
    const auto it = entries_.find(word);
    return it == entries_.end() ? nullptr : &it->second;
}

void PolynomialCache::insert(const std::string& word, Entry entry) {
    entries_.insert_or_assign(word, std::move(entry));
    dirty_ = true;
}

void PolynomialCache::commit() {
    if (!dirty_ || file_.empty()) {
        return;
    }
    ordered_json entries = ordered_json::object();
    for (const auto& [word, entry] : entries_) {
        entries[word] = entry_to_json(entry);
    }
    ordered_json data;
    data["version"] = kCacheFormatVersion;
    data["entries"] = entries;

    const std::filesystem::path temp = file_.string() + ".tmp";
    {
        std::ofstream out(temp);
        if (!out.is_open()) {
            std::cerr << "schubfact: cannot write cache file " << temp << "\n";
            return;
        }
        out << data.dump(2) << "\n";
    }
    std::error_code ec;
    std::filesystem::rename(temp, file_, ec);
    if (ec) {
        std::cerr << "schubfact: cannot update cache file " << file_ << " (" << ec.message()
                  << ")\n";
        std::filesystem::remove(temp, ec);
        return;
    }
    dirty_ = false;
}

}  // namespace schubfact
