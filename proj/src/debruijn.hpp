#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ca.hpp"

namespace moca {

// Binary de Bruijn graph on 2^b vertices (b = d-1), every edge labeled
// with the tuple of the k rules' values on the edge's fusion word. Edge
// (u,v) exists iff u's last b-1 bits equal v's first b-1 bits; the fusion
// u (.) v appends v's last bit to u.
struct CoupledLabeling {
    int d = 0;
    int b = 0;
    std::vector<LocalRule> rules;

    size_t k() const { return rules.size(); }
    uint32_t vertex_count() const { return uint32_t(1) << b; }

    // Successor vertex and fusion for edge (u, last bit).
    uint32_t step(uint32_t u, uint32_t last) const {
        return ((u << 1) & (vertex_count() - 1)) | last;
    }
    uint32_t edge_fusion(uint32_t u, uint32_t last) const {
        return (u << 1) | last;
    }
};

uint32_t fusion(uint32_t u, uint32_t v, int b);

CoupledLabeling build_labeling(const std::vector<LocalRule> &rules);

// One line per edge, "uu -> vv : l_1,...,l_k", ascending by (u, last bit).
std::string labeling_format(const CoupledLabeling &lab);

// Number of directed b-edge paths whose per-rule label sequences match the
// patterns (k strings of length b over '0','1','*'), by dynamic
// programming over path prefixes.
uint64_t count_paths_with_label(const CoupledLabeling &lab,
                                const std::vector<std::string> &patterns);

// Path-counting orthogonality: every fully-fixed pattern pair matches
// exactly one path. Rules must be bipermutive and share a diameter.
bool labelings_orthogonal(const LocalRule &f, const LocalRule &g);

} // namespace moca
