#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace moca {

constexpr int min_diameter = 2;
constexpr int max_diameter = 6; // a d=6 truth table is exactly 64 bits

// Diameter-d local rule. Bit int(x_1..x_d) of the Wolfram number is the
// rule's value on that neighborhood, so the all-ones neighborhood sits at
// the most significant bit (rule 90 reads x_1 xor x_3, rule 150 reads
// x_1 xor x_2 xor x_3).
struct LocalRule {
    int d = 0;
    uint64_t wolfram = 0;

    static LocalRule from_wolfram(uint64_t w, int d);

    bool eval(uint32_t neighborhood) const {
        return (wolfram >> neighborhood) & 1;
    }
    std::vector<uint8_t> table() const;
    bool is_bipermutive() const;

    // Complement rule: every table bit flipped.
    LocalRule complement() const;

    std::string format() const; // "d=3 w=90"
    static LocalRule parse(const std::string &text);

    bool operator==(const LocalRule &o) const = default;
};

// All 2^(2^(d-2)) bipermutive rules of diameter d, ascending by Wolfram
// number (3 <= d <= 6).
std::vector<LocalRule> enumerate_bipermutive(int d);

// No-boundary cellular automaton: the rule applied to every window of a
// length-n input, producing n-d+1 cells.
std::vector<uint8_t> apply_ca(const LocalRule &rule,
                              const std::vector<uint8_t> &input);

// Same map on packed words: input z holds bits x_1..x_nbits with x_1 most
// significant; the result packs the n-d+1 output bits the same way.
uint64_t apply_ca_packed(const LocalRule &rule, uint64_t z, int nbits);

} // namespace moca
