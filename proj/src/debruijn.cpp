#include "debruijn.hpp"

#include "error.hpp"

namespace moca {

uint32_t fusion(uint32_t u, uint32_t v, int b) {
    if (b < 1 || b > 31)
        fail(errc::range, "vertex word length must be 1..31");
    const uint32_t mask = (uint32_t(1) << b) - 1;
    if (u > mask || v > mask)
        fail(errc::range, "vertex does not fit " + std::to_string(b) +
                              " bits");
    if (b > 1 && (u & (mask >> 1)) != (v >> 1))
        fail(errc::not_an_edge,
             "words do not overlap on their shared " + std::to_string(b - 1) +
                 " bits");
    return (u << 1) | (v & 1);
}

CoupledLabeling build_labeling(const std::vector<LocalRule> &rules) {
    if (rules.empty())
        fail(errc::invalid_argument, "need at least one rule");
    const int d = rules[0].d;
    for (const LocalRule &r : rules)
        if (r.d != d)
            fail(errc::dimension, "rules have mixed diameters");
    CoupledLabeling lab;
    lab.d = d;
    lab.b = d - 1;
    lab.rules = rules;
    return lab;
}

std::string labeling_format(const CoupledLabeling &lab) {
    std::string out;
    auto word = [&](uint32_t v) {
        std::string s(size_t(lab.b), '0');
        for (int j = 0; j < lab.b; ++j)
            if ((v >> (lab.b - 1 - j)) & 1)
                s[size_t(j)] = '1';
        return s;
    };
    for (uint32_t u = 0; u < lab.vertex_count(); ++u) {
        for (uint32_t last = 0; last < 2; ++last) {
            uint32_t v = lab.step(u, last);
            uint32_t fus = lab.edge_fusion(u, last);
            out += word(u) + " -> " + word(v) + " : ";
            for (size_t i = 0; i < lab.k(); ++i) {
                if (i > 0)
                    out += ',';
                out += lab.rules[i].eval(fus) ? '1' : '0';
            }
            out += '\n';
        }
    }
    return out;
}

uint64_t count_paths_with_label(const CoupledLabeling &lab,
                                const std::vector<std::string> &patterns) {
    if (patterns.size() != lab.k())
        fail(errc::dimension, "expected " + std::to_string(lab.k()) +
                                  " patterns, got " +
                                  std::to_string(patterns.size()));
    for (const std::string &p : patterns) {
        if (p.size() != size_t(lab.b))
            fail(errc::dimension, "patterns must have length " +
                                      std::to_string(lab.b));
        for (char c : p)
            if (c != '0' && c != '1' && c != '*')
                fail(errc::invalid_argument,
                     std::string("pattern characters must be 0, 1 or *, "
                                 "got '") +
                         c + "'");
    }

    const uint32_t nv = lab.vertex_count();
    std::vector<uint64_t> count(nv, 1), next(nv);
    for (int step = 0; step < lab.b; ++step) {
        std::fill(next.begin(), next.end(), 0);
        for (uint32_t u = 0; u < nv; ++u) {
            if (count[u] == 0)
                continue;
            for (uint32_t last = 0; last < 2; ++last) {
                uint32_t fus = lab.edge_fusion(u, last);
                bool ok = true;
                for (size_t i = 0; i < lab.k(); ++i) {
                    char want = patterns[i][size_t(step)];
                    if (want == '*')
                        continue;
                    if (lab.rules[i].eval(fus) != (want == '1')) {
                        ok = false;
                        break;
                    }
                }
                if (ok)
                    next[lab.step(u, last)] += count[u];
            }
        }
        count.swap(next);
    }
    uint64_t total = 0;
    for (uint64_t c : count)
        total += c;
    return total;
}

bool labelings_orthogonal(const LocalRule &f, const LocalRule &g) {
    if (f.d != g.d)
        fail(errc::dimension, "rules have different diameters");
    if (!f.is_bipermutive() || !g.is_bipermutive())
        fail(errc::precondition,
             "path-counting orthogonality is defined for bipermutive rules");
    CoupledLabeling lab = build_labeling({f, g});
    const int b = lab.b;
    std::vector<std::string> patterns(2, std::string(size_t(b), '0'));
    const uint32_t space = uint32_t(1) << b;
    for (uint32_t x = 0; x < space; ++x) {
        for (int j = 0; j < b; ++j)
            patterns[0][size_t(j)] = ((x >> (b - 1 - j)) & 1) ? '1' : '0';
        for (uint32_t y = 0; y < space; ++y) {
            for (int j = 0; j < b; ++j)
                patterns[1][size_t(j)] = ((y >> (b - 1 - j)) & 1) ? '1' : '0';
            if (count_paths_with_label(lab, patterns) != 1)
                return false;
        }
    }
    return true;
}

} // namespace moca
