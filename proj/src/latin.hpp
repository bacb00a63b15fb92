#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ca.hpp"
#include "oa.hpp"

namespace moca {

// Order-N Latin square over symbols 1..N.
struct LatinSquare {
    int order = 0;
    std::vector<uint16_t> cells; // row-major, values 1..order

    int at(int row, int col) const { // 1-based row/col
        return cells[size_t(row - 1) * order + (col - 1)];
    }
    bool is_latin() const;

    bool operator==(const LatinSquare &o) const = default;
};

// Bit vector of length b -> {1..2^b}: int(v)+1, and its inverse.
uint32_t index_bijection(const std::vector<uint8_t> &v);
std::vector<uint8_t> index_bijection_inverse(uint32_t index, size_t b);

// Square of order 2^(d-1) from a bipermutive rule: run the CA on all
// inputs of length 2(d-1); the left half indexes the row, the right half
// the column, and the output indexes the entry.
LatinSquare square_from_ca(const LocalRule &rule);

// True iff the superposition (L1(i,j), L2(i,j)) covers all N^2 ordered
// symbol pairs, i.e. never repeats one.
bool are_orthogonal(const LatinSquare &a, const LatinSquare &b);

// N lines of N space-separated entries.
std::string square_format(const LatinSquare &s);

// Stack k pairwise-orthogonal order-N squares into an OA(N^2, k, N, 2) of
// index 1: one row per cell in row-major order, column i holding square
// i's entries shifted to symbols 0..N-1. Orthogonality is re-verified.
OrthogonalArray mols_to_oa(const std::vector<const LatinSquare *> &squares);

} // namespace moca
