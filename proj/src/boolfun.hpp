#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace moca {

// n-variable Boolean function as a packed truth table. Bit i of the table
// holds f(x) for the input x with int(x) = sum x_j 2^(n-j) = i, so x_1 is
// the most significant input bit and index 0 is the all-zeros input.
struct BooleanFunction {
    int n = 0;
    std::vector<uint64_t> table; // 2^n bits packed little-endian per word

    static BooleanFunction zero(int n);
    static BooleanFunction from_support(int n,
                                        const std::vector<uint64_t> &rows);
    static BooleanFunction from_table_bits(int n,
                                           const std::vector<uint8_t> &bits);

    uint64_t size() const { return uint64_t(1) << n; }
    bool bit(uint64_t x) const {
        return (table[x >> 6] >> (x & 63)) & 1;
    }
    void set_bit(uint64_t x, bool v);
    uint64_t weight() const;
    std::vector<uint64_t> support() const;

    bool operator==(const BooleanFunction &o) const = default;
};

constexpr int max_variables = 16;

// Walsh transform values W(a) = sum_x (-1)^(f(x) xor a.x), index int(a).
std::vector<int32_t> walsh_transform(const BooleanFunction &f);
// Literal reference evaluation of the defining sum, O(4^n).
std::vector<int32_t> walsh_transform_naive(const BooleanFunction &f);

uint32_t nonlinearity(const BooleanFunction &f);

// ANF coefficients a_u as a bit table indexed by int(u) (binary Moebius
// transform; applying it twice restores the truth table).
BooleanFunction anf(const BooleanFunction &f);
int algebraic_degree(const BooleanFunction &f);

// Largest t with W(a) = 0 for every a of Hamming weight 1..t; n for
// constant functions.
int correlation_immunity_order(const BooleanFunction &f);

// Serialization: binary form is 2^n chars '0'/'1'; hex form packs 4 table
// bits per digit, index 0 as the most significant bit of the first digit.
std::string to_binary_string(const BooleanFunction &f);
std::string to_hex_string(const BooleanFunction &f);
BooleanFunction parse_binary_string(const std::string &text);
BooleanFunction parse_hex_string(const std::string &text);

} // namespace moca
