#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "debruijn.hpp"
#include "error.hpp"
#include "latin.hpp"
#include "search.hpp"

using namespace moca;

TEST_CASE("orthogonal pairs of diameter 3") {
    auto pairs = enumerate_oca_pairs(3, 1);
    std::vector<std::array<uint64_t, 2>> expected = {
        {90, 105}, {90, 150}, {105, 165}, {150, 165}};
    CHECK(pairs == expected);
}

TEST_CASE("orthogonal pairs of diameter 4 against brute force") {
    auto pairs = enumerate_oca_pairs(4, 1);
    CHECK(pairs.size() == 36);

    std::set<std::array<uint64_t, 2>> brute;
    auto rules = enumerate_bipermutive(4);
    for (size_t i = 0; i < rules.size(); ++i) {
        LatinSquare a = square_from_ca(rules[i]);
        for (size_t j = i + 1; j < rules.size(); ++j) {
            LatinSquare b = square_from_ca(rules[j]);
            if (are_orthogonal(a, b))
                brute.insert({rules[i].wolfram, rules[j].wolfram});
        }
    }
    CHECK(std::set<std::array<uint64_t, 2>>(pairs.begin(), pairs.end()) ==
          brute);

    // Both orthogonality oracles agree on every enumerated pair.
    for (const auto &p : pairs) {
        LocalRule f = LocalRule::from_wolfram(p[0], 4);
        LocalRule g = LocalRule::from_wolfram(p[1], 4);
        CHECK(labelings_orthogonal(f, g));
    }
}

TEST_CASE("family enumeration") {
    CHECK(enumerate_moca(3, 3, 1).empty());
    CHECK(enumerate_moca(4, 2, 1).size() == 36);

    auto fams = enumerate_moca(4, 3, 1);
    CHECK(fams.size() == 16);
    bool sorted = std::is_sorted(
        fams.begin(), fams.end(),
        [](const MocaFamily &a, const MocaFamily &b) {
            return a.rules < b.rules;
        });
    CHECK(sorted);

    // Every enumerated triple survives the checked constructor.
    for (const MocaFamily &f : fams)
        CHECK_NOTHROW(MocaFamily::create(f.d, f.rules));

    CHECK_THROWS_AS(enumerate_moca(4, 1, 1), error);
}

TEST_CASE("worker count does not change results") {
    CHECK(enumerate_oca_pairs(4, 1) == enumerate_oca_pairs(4, 4));
    auto one = enumerate_moca(4, 3, 1);
    auto four = enumerate_moca(4, 3, 4);
    CHECK(one == four);
}

TEST_CASE("complementation acts freely on families") {
    auto fams = enumerate_moca(4, 3, 1);
    std::set<std::vector<uint64_t>> all;
    for (const MocaFamily &f : fams)
        all.insert(f.rules);

    for (const MocaFamily &f : fams) {
        for (size_t i = 0; i < f.rules.size(); ++i) {
            std::vector<uint64_t> flipped = f.rules;
            flipped[i] =
                LocalRule::from_wolfram(flipped[i], 4).complement().wolfram;
            std::sort(flipped.begin(), flipped.end());
            CHECK(flipped != f.rules);
            CHECK(all.count(flipped) == 1);
        }
    }

    auto reps = reduce_up_to_complement(fams, 4);
    CHECK(reps.size() == 2);
    CHECK(reps[0].rules == std::vector<uint64_t>{21930, 39270, 42330});
    CHECK(reps[1].rules == std::vector<uint64_t>{27030, 39270, 42330});
    for (const MocaFamily &r : reps)
        for (uint64_t w : r.rules)
            CHECK(w % 2 == 0);
}

TEST_CASE("diameter 4 classification") {
    Classification c = classify_families(4, 3, 1);
    CHECK(c.raw_unordered == 16);
    CHECK(c.ordered == 96);
    CHECK(c.up_to_complement == 2);
    CHECK(c.families.size() == 16);
    CHECK(c.ci_histogram_raw == std::map<int, uint64_t>{{3, 16}});
    CHECK(c.ci_histogram_up_to_complement ==
          std::map<int, uint64_t>{{3, 2}});

    int canonical = 0;
    for (const FamilyReport &r : c.families) {
        CHECK(r.n == 9);
        CHECK(r.weight == 64);
        CHECK(r.ci == 3);
        CHECK(r.nl == 64);
        CHECK(r.degree == 3);
        CHECK(!r.degenerate);
        canonical += r.canonical;
    }
    CHECK(canonical == 2);
}

TEST_CASE("diameter 5 classification") {
    CHECK(enumerate_oca_pairs(5, 1).size() == 852);

    Classification c = classify_families(5, 3, 1);
    CHECK(c.raw_unordered == 264);
    CHECK(c.ordered == 1584);
    CHECK(c.up_to_complement == 33);
    CHECK(c.families.front().family.rules ==
          std::vector<uint64_t>{1431677610, 1437248085, 1515890085});
    CHECK(c.ci_histogram_raw ==
          std::map<int, uint64_t>{{3, 192}, {4, 72}});
    CHECK(c.ci_histogram_up_to_complement ==
          std::map<int, uint64_t>{{3, 24}, {4, 9}});

    for (const FamilyReport &r : c.families) {
        CHECK(r.n == 12);
        CHECK(r.weight == 256);
        CHECK(r.ci >= 3);
        CHECK(!r.degenerate);
    }
}
