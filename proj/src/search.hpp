#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "oa.hpp"

namespace moca {

// All unordered pairs {f,g} of distinct bipermutive diameter-d rules whose
// Latin squares are orthogonal, sorted by (min,max) Wolfram number. jobs
// <= 0 or 1 means a single worker; any worker count yields identical
// output.
std::vector<std::array<uint64_t, 2>> enumerate_oca_pairs(int d, int jobs);

// All unordered k-sets of bipermutive rules that are pairwise orthogonal,
// grown by extending (k-1)-sets with candidate rules of larger Wolfram
// number; sorted ascending by rule tuple.
std::vector<MocaFamily> enumerate_moca(int d, int k, int jobs);

// Complementing any single member of a family yields another family (the
// complemented rule's square is a symbol relabeling of the original, which
// superposition distinctness survives), and never the same one, so
// per-member complementation acts freely on families. Each orbit contains
// exactly one family whose members all have even Wolfram numbers; this
// returns those canonical representatives, sorted.
std::vector<MocaFamily>
reduce_up_to_complement(const std::vector<MocaFamily> &families, int d);

struct FamilyReport {
    MocaFamily family;
    int n = 0;
    uint64_t weight = 0;
    int ci = 0;
    uint32_t nl = 0;
    int degree = 0;
    bool degenerate = false; // constant function (full support)
    bool canonical = false;  // all members even: the orbit representative
};

struct Classification {
    int d = 0;
    int k = 0;
    uint64_t raw_unordered = 0;
    uint64_t ordered = 0;
    uint64_t up_to_complement = 0;
    std::vector<FamilyReport> families; // one per raw unordered family
    std::map<int, uint64_t> ci_histogram_raw;
    std::map<int, uint64_t> ci_histogram_up_to_complement;
};

Classification classify_families(int d, int k, int jobs);

} // namespace moca
