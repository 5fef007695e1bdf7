#include "doctest.h"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "schubfact/permutation.hpp"

using namespace schubfact;
using schubfact::testing::naive_contains;
using schubfact::testing::naive_inversion_count;

namespace {

Permutation perm(const std::string& text) { return Permutation::from_string(text); }

LehmerCode code_of(std::vector<int> entries) {
    return LehmerCode::from_entries(std::move(entries));
}

}  // namespace

TEST_CASE("one-line construction validates its input") {
    CHECK(Permutation::from_one_line({2, 1, 4, 3}).size() == 4);
    CHECK(Permutation::from_one_line({1}).size() == 1);
    CHECK_THROWS_AS(Permutation::from_one_line({}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::from_one_line({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::from_one_line({1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::from_one_line({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::from_one_line({2, 1, 2}), std::invalid_argument);
}

TEST_CASE("string parsing accepts digit and comma forms") {
    CHECK(perm("2143").word() == std::vector<int>{2, 1, 4, 3});
    CHECK(perm("2,1,4,3").word() == std::vector<int>{2, 1, 4, 3});
    CHECK(perm("2, 1, 4, 3").word() == std::vector<int>{2, 1, 4, 3});
    CHECK(perm("2,1,10,3,4,5,6,7,8,9").size() == 10);
    CHECK_THROWS_AS(perm(""), std::invalid_argument);
    CHECK_THROWS_AS(perm("21a3"), std::invalid_argument);
    CHECK_THROWS_AS(perm("2,,3"), std::invalid_argument);
    CHECK_THROWS_AS(perm("0"), std::invalid_argument);
    CHECK_THROWS_AS(perm("2,1,4"), std::invalid_argument);
}

TEST_CASE("rendering uses digits up to nine letters and commas beyond") {
    CHECK(perm("2143").to_string() == "2143");
    Permutation big = Permutation::longest_element(10);
    CHECK(big.to_string() == "10,9,8,7,6,5,4,3,2,1");
    CHECK(Permutation::from_string(big.to_string()) == big);
}

TEST_CASE("identity and longest element") {
    CHECK(Permutation::identity(4).word() == std::vector<int>{1, 2, 3, 4});
    CHECK(Permutation::longest_element(4).word() == std::vector<int>{4, 3, 2, 1});
    CHECK(Permutation::identity(1) == Permutation::longest_element(1));
    CHECK_THROWS_AS(Permutation::identity(0), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::longest_element(0), std::invalid_argument);
}

TEST_CASE("inverse") {
    CHECK(perm("2413").inverse() == perm("3142"));
    CHECK(Permutation::identity(5).inverse() == Permutation::identity(5));
    for (const auto& w : all_permutations(5)) CHECK(w.inverse().inverse() == w);
}

TEST_CASE("Lehmer codes of fixed words") {
    CHECK(lehmer_code(perm("23541")) == code_of({1, 1, 2, 1, 0}));
    CHECK(lehmer_code(perm("1432")) == code_of({0, 2, 1, 0}));
    CHECK(lehmer_code(perm("2143")) == code_of({1, 0, 1, 0}));
    CHECK(lehmer_code(perm("321")) == code_of({2, 1, 0}));
    CHECK(lehmer_code(perm("431265")) == code_of({3, 2, 0, 0, 1, 0}));
    CHECK(lehmer_code(Permutation::identity(5)) == code_of({0, 0, 0, 0, 0}));
    CHECK(lehmer_code(Permutation::longest_element(5)) == code_of({4, 3, 2, 1, 0}));
    CHECK(code_of({0, 2, 1, 0}).to_string() == "(0,2,1,0)");
    CHECK(code_of({0, 2, 1, 0}).sum() == 3);
    CHECK(code_of({0, 2, 1, 0}).entry(2) == 2);
}

TEST_CASE("Lehmer code construction validates entry bounds") {
    CHECK_THROWS_AS(code_of({}), std::invalid_argument);
    CHECK_THROWS_AS(code_of({1}), std::invalid_argument);
    CHECK_THROWS_AS(code_of({0, 2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(code_of({-1, 0}), std::invalid_argument);
    CHECK(code_of({2, 1, 0}).size() == 3);
}

TEST_CASE("codes and permutations are inverse constructions") {
    CHECK(permutation_from_code(code_of({0, 2, 2, 0, 0})) == perm("14523"));
    for (const auto& w : all_permutations(6)) CHECK(permutation_from_code(lehmer_code(w)) == w);
}

TEST_CASE("inversion count matches the pairwise definition and the code sum") {
    for (const auto& w : all_permutations(5)) {
        CHECK(inversion_count(w) == naive_inversion_count(w));
        CHECK(inversion_count(w) == lehmer_code(w).sum());
    }
    CHECK(inversion_count(Permutation::longest_element(6)) == 15);
}

TEST_CASE("bounded increments means each entry rises by at most one") {
    CHECK(increments_bounded(code_of({1, 1, 2, 1, 0})));
    CHECK(increments_bounded(code_of({0, 1, 2, 0, 0})));
    CHECK(increments_bounded(code_of({0})));
    CHECK_FALSE(increments_bounded(code_of({0, 2, 1, 0})));
    CHECK_FALSE(increments_bounded(code_of({1, 0, 2, 1, 0})));
}

TEST_CASE("pattern containment on fixed words") {
    CHECK(contains_pattern(perm("25413"), perm("231")));
    CHECK_FALSE(contains_pattern(perm("25413"), perm("4321")));
    CHECK(contains_pattern(perm("1432"), perm("1432")));
    CHECK_FALSE(contains_pattern(perm("123456"), perm("21")));
    CHECK_FALSE(contains_pattern(perm("21"), perm("321")));
    CHECK(contains_pattern(perm("25413"), perm("1")));
}

TEST_CASE("pattern containment agrees with the subsequence scan") {
    const auto patterns3 = all_permutations(3);
    const auto patterns4 = all_permutations(4);
    for (const auto& w : all_permutations(5)) {
        for (const auto& p : patterns3) CHECK(contains_pattern(w, p) == naive_contains(w, p));
        for (const auto& p : patterns4) CHECK(contains_pattern(w, p) == naive_contains(w, p));
    }
}

TEST_CASE("the four obstruction patterns") {
    const auto& patterns = obstruction_patterns();
    REQUIRE(patterns.size() == 4);
    CHECK(patterns[0] == perm("1432"));
    CHECK(patterns[1] == perm("1423"));
    CHECK(patterns[2] == perm("4132"));
    CHECK(patterns[3] == perm("3142"));
    CHECK(avoids_obstructions(Permutation::identity(6)));
    for (const auto& p : patterns) CHECK_FALSE(avoids_obstructions(p));
}

TEST_CASE("avoider counts for small symmetric groups") {
    const std::vector<std::int64_t> expected = {1, 2, 6, 20, 69, 243};
    for (int n = 1; n <= 6; ++n) {
        std::int64_t count = 0;
        for (const auto& w : all_permutations(n))
            if (avoids_obstructions(w)) ++count;
        CHECK(count == expected[static_cast<std::size_t>(n - 1)]);
    }
}

TEST_CASE("1423- and 1432-avoiders have bounded code increments") {
    const Permutation p1423 = perm("1423");
    const Permutation p1432 = perm("1432");
    std::vector<std::string> exceptions;
    for (const auto& w : all_permutations(5)) {
        const bool contains_either = contains_pattern(w, p1423) || contains_pattern(w, p1432);
        if (!contains_either) CHECK(increments_bounded(lehmer_code(w)));
        if (contains_either && increments_bounded(lehmer_code(w)))
            exceptions.push_back(w.to_string());
    }
    // The converse fails: these words contain a blocking pattern yet keep
    // bounded increments.
    CHECK(exceptions == std::vector<std::string>{"13524", "13542"});

    std::int64_t exceptions6 = 0;
    for (const auto& w : all_permutations(6)) {
        const bool contains_either = contains_pattern(w, p1423) || contains_pattern(w, p1432);
        if (!contains_either) CHECK(increments_bounded(lehmer_code(w)));
        if (contains_either && increments_bounded(lehmer_code(w))) ++exceptions6;
    }
    CHECK(exceptions6 == 26);
}

TEST_CASE("permutation enumeration is lexicographic and complete") {
    const auto s3 = all_permutations(3);
    REQUIRE(s3.size() == 6);
    CHECK(s3[0] == perm("123"));
    CHECK(s3[1] == perm("132"));
    CHECK(s3[2] == perm("213"));
    CHECK(s3[3] == perm("231"));
    CHECK(s3[4] == perm("312"));
    CHECK(s3[5] == perm("321"));
    CHECK(std::is_sorted(s3.begin(), s3.end()));

    CHECK(all_permutations(6).size() == 720);

    std::vector<Permutation> seen;
    for_each_permutation(4, [&](const Permutation& w) { seen.push_back(w); });
    CHECK(seen == all_permutations(4));

    CHECK_THROWS_AS(all_permutations(0), std::invalid_argument);
    CHECK_THROWS_AS(all_permutations(11), std::invalid_argument);
    CHECK_THROWS_AS(for_each_permutation(13, [](const Permutation&) {}), std::invalid_argument);
}
