#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "boolfun.hpp"
#include "ca.hpp"

namespace moca {

// N x k matrix over {0..s-1} with its verified maximal strength: for that
// t, every choice of t columns contains each t-tuple exactly N/s^t times.
struct OrthogonalArray {
    size_t runs = 0;    // N
    size_t factors = 0; // k
    int levels = 0;     // s
    int strength = 0;   // verified maximal t
    std::vector<int32_t> entries; // row-major N*k

    int32_t at(size_t row, size_t col) const {
        return entries[row * factors + col];
    }
    uint64_t index() const; // lambda = N / s^strength
};

// Largest t <= k for which every t-column projection is balanced, by exact
// counting over all C(k,t) column subsets; 0 if single columns already
// fail. Entries must lie in {0..s-1}.
int strength_of(const std::vector<int32_t> &entries, size_t runs,
                size_t factors, int levels);

// Validates entries and records the verified maximal strength.
OrthogonalArray oa_from_rows(size_t runs, size_t factors, int levels,
                             const std::vector<int32_t> &entries);

// Text format: header "N k s t" then N rows of k space-separated symbols.
// The parser recomputes the strength and rejects a header that does not
// carry the verified maximum.
std::string oa_format(const OrthogonalArray &a);
OrthogonalArray oa_parse(const std::string &text);

// k >= 2 distinct bipermutive rules of one diameter, kept sorted by
// Wolfram number; pairwise orthogonality of the induced Latin squares is
// verified on construction.
struct MocaFamily {
    int d = 0;
    std::vector<uint64_t> rules;

    static MocaFamily create(int d, std::vector<uint64_t> wolframs);
    // Same shape without the orthogonality check (for enumeration output
    // whose pairs were already verified).
    static MocaFamily trusted(int d, std::vector<uint64_t> wolframs);

    size_t k() const { return rules.size(); }
    bool operator==(const MocaFamily &o) const = default;
};

// Binary expansion: N = 2^(2(d-1)) rows, n = k(d-1) binary columns; the
// row for input (x,y), ascending by int(x,y), juxtaposes the k CA outputs.
// Verified to strength >= 2.
OrthogonalArray binary_expansion(const MocaFamily &family);

// Boolean function of n = k(d-1) variables whose support is the expansion's
// row set; its weight is always 2^(2(d-1)).
BooleanFunction ci_function(const MocaFamily &family);

// Strength-preserving row removal. Repeatedly finds (by deterministic
// depth-first search) a group of exactly 2^target_t rows whose own
// t-column projections are index-1 balanced -- precisely the condition for
// the remaining rows to stay balanced -- removes it, and repeats until the
// array reaches index 1, no group exists, or the node budget runs out.
// Never grows the array; the result is re-verified before returning.
OrthogonalArray expurgate(const OrthogonalArray &a, int target_t,
                          uint64_t budget);

} // namespace moca
