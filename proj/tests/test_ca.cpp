#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "ca.hpp"
#include "error.hpp"

using namespace moca;

TEST_CASE("wolfram numbering") {
    LocalRule r90 = LocalRule::from_wolfram(90, 3);
    CHECK(r90.table() == std::vector<uint8_t>{0, 1, 0, 1, 1, 0, 1, 0});
    LocalRule r150 = LocalRule::from_wolfram(150, 3);
    CHECK(r150.table() == std::vector<uint8_t>{0, 1, 1, 0, 1, 0, 0, 1});

    // 90 is x1 xor x3 and 150 is x1 xor x2 xor x3 under this bit order.
    for (uint32_t x = 0; x < 8; ++x) {
        int x1 = (x >> 2) & 1, x2 = (x >> 1) & 1, x3 = x & 1;
        CHECK(int(r90.eval(x)) == (x1 ^ x3));
        CHECK(int(r150.eval(x)) == (x1 ^ x2 ^ x3));
    }

    CHECK_THROWS_AS(LocalRule::from_wolfram(0, 1), error);
    CHECK_THROWS_AS(LocalRule::from_wolfram(0, 7), error);
    CHECK_THROWS_AS(LocalRule::from_wolfram(256, 3), error);
    CHECK_NOTHROW(LocalRule::from_wolfram(255, 3));
}

TEST_CASE("bipermutivity") {
    CHECK(LocalRule::from_wolfram(90, 3).is_bipermutive());
    CHECK(LocalRule::from_wolfram(150, 3).is_bipermutive());
    CHECK(!LocalRule::from_wolfram(30, 3).is_bipermutive());
    CHECK(!LocalRule::from_wolfram(110, 3).is_bipermutive());
    CHECK(LocalRule::from_wolfram(6, 2).is_bipermutive()); // x1 xor x2
    CHECK(LocalRule::from_wolfram(9, 2).is_bipermutive());
    CHECK(!LocalRule::from_wolfram(5, 2).is_bipermutive());
}

TEST_CASE("bipermutive enumeration") {
    auto d3 = enumerate_bipermutive(3);
    std::vector<uint64_t> got;
    for (const LocalRule &r : d3)
        got.push_back(r.wolfram);
    CHECK(got == std::vector<uint64_t>{90, 105, 150, 165});

    CHECK(enumerate_bipermutive(4).size() == 16);
    CHECK(enumerate_bipermutive(5).size() == 256);
    CHECK(enumerate_bipermutive(6).size() == 65536);

    for (int d = 3; d <= 5; ++d) {
        auto rules = enumerate_bipermutive(d);
        bool sorted_and_bipermutive = true;
        for (size_t i = 0; i < rules.size(); ++i) {
            if (!rules[i].is_bipermutive())
                sorted_and_bipermutive = false;
            if (i > 0 && rules[i - 1].wolfram >= rules[i].wolfram)
                sorted_and_bipermutive = false;
        }
        CHECK(sorted_and_bipermutive);
    }

    // Cross-check d=4 against a direct filter of all 2^16 rules.
    std::set<uint64_t> filtered;
    for (uint64_t w = 0; w < 65536; ++w)
        if (LocalRule::from_wolfram(w, 4).is_bipermutive())
            filtered.insert(w);
    std::set<uint64_t> enumerated;
    for (const LocalRule &r : enumerate_bipermutive(4))
        enumerated.insert(r.wolfram);
    CHECK(filtered == enumerated);

    CHECK_THROWS_AS(enumerate_bipermutive(2), error);
}

TEST_CASE("complement rule") {
    LocalRule r90 = LocalRule::from_wolfram(90, 3);
    CHECK(r90.complement().wolfram == 165);
    CHECK(LocalRule::from_wolfram(105, 3).complement().wolfram == 150);
    CHECK(r90.complement().complement() == r90);

    // Complementing preserves bipermutivity.
    for (const LocalRule &r : enumerate_bipermutive(4))
        CHECK(r.complement().is_bipermutive());
}

TEST_CASE("no-boundary application") {
    LocalRule r90 = LocalRule::from_wolfram(90, 3);
    CHECK(apply_ca(r90, {0, 1, 0, 1}) == std::vector<uint8_t>{0, 0});
    LocalRule r150 = LocalRule::from_wolfram(150, 3);
    CHECK(apply_ca(r150, {1, 1, 0}) == std::vector<uint8_t>{0});

    // Packed form matches the byte form on every d=3 input of width 6.
    for (uint64_t z = 0; z < 64; ++z) {
        std::vector<uint8_t> input(6);
        for (int j = 0; j < 6; ++j)
            input[size_t(j)] = (z >> (5 - j)) & 1;
        auto out = apply_ca(r90, input);
        uint64_t packed = 0;
        for (uint8_t bit : out)
            packed = (packed << 1) | bit;
        CHECK(apply_ca_packed(r90, z, 6) == packed);
    }

    CHECK_THROWS_AS(apply_ca(r90, {1, 0}), error);
    CHECK_THROWS_AS(apply_ca(r90, {1, 0, 2}), error);
}

TEST_CASE("bipermutive maps are balanced") {
    // Every output word of width n-d+1 has exactly 2^(d-1) preimages.
    for (int d : {3, 4}) {
        for (const LocalRule &r : enumerate_bipermutive(d)) {
            const int n = 2 * (d - 1);
            std::map<uint64_t, int> preimages;
            for (uint64_t z = 0; z < (uint64_t(1) << n); ++z)
                ++preimages[apply_ca_packed(r, z, n)];
            CHECK(preimages.size() == (uint64_t(1) << (n - d + 1)));
            bool balanced = true;
            for (const auto &[out, count] : preimages)
                if (count != (1 << (d - 1)))
                    balanced = false;
            CHECK(balanced);
        }
    }
}

TEST_CASE("rule text form") {
    LocalRule r = LocalRule::from_wolfram(90, 3);
    CHECK(r.format() == "d=3 w=90");
    CHECK(LocalRule::parse("d=3 w=90") == r);
    CHECK(LocalRule::parse(" d=5 w=123456 ") ==
          LocalRule::from_wolfram(123456, 5));

    CHECK_THROWS_AS(LocalRule::parse("d=3"), error);
    CHECK_THROWS_AS(LocalRule::parse("w=90 d=3"), error);
    CHECK_THROWS_AS(LocalRule::parse("d=3 w=90 junk"), error);
    CHECK_THROWS_AS(LocalRule::parse("d=9 w=0"), error);
    CHECK_THROWS_AS(LocalRule::parse(""), error);
}
