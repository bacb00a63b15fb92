#include "search.hpp"

#include <algorithm>
#include <thread>

#include "error.hpp"
#include "latin.hpp"

namespace moca {

namespace {

// Upper-triangular pairwise orthogonality matrix over the bipermutive
// rules of one diameter, filled by a static partition of the row range;
// the result does not depend on the worker count.
struct PairMatrix {
    size_t count = 0;
    std::vector<uint8_t> bits; // row-major count x count, i < j meaningful

    bool orth(size_t i, size_t j) const {
        return bits[i * count + j] != 0;
    }
};

PairMatrix build_pair_matrix(const std::vector<LocalRule> &rules, int jobs) {
    PairMatrix m;
    m.count = rules.size();
    m.bits.assign(m.count * m.count, 0);

    std::vector<LatinSquare> squares;
    squares.reserve(m.count);
    for (const LocalRule &r : rules)
        squares.push_back(square_from_ca(r));

    int workers = jobs <= 1 ? 1 : jobs;
    auto fill_rows = [&](size_t begin, size_t end) {
        for (size_t i = begin; i < end; ++i)
            for (size_t j = i + 1; j < m.count; ++j)
                if (are_orthogonal(squares[i], squares[j]))
                    m.bits[i * m.count + j] = 1;
    };
    if (workers == 1 || m.count < 8) {
        fill_rows(0, m.count);
    } else {
        std::vector<std::thread> pool;
        size_t chunk = (m.count + size_t(workers) - 1) / size_t(workers);
        for (int w = 0; w < workers; ++w) {
            size_t begin = std::min(size_t(w) * chunk, m.count);
            size_t end = std::min(begin + chunk, m.count);
            if (begin < end)
                pool.emplace_back(fill_rows, begin, end);
        }
        for (std::thread &t : pool)
            t.join();
    }
    return m;
}

} // namespace

std::vector<std::array<uint64_t, 2>> enumerate_oca_pairs(int d, int jobs) {
    std::vector<LocalRule> rules = enumerate_bipermutive(d);
    PairMatrix m = build_pair_matrix(rules, jobs);
    std::vector<std::array<uint64_t, 2>> pairs;
    for (size_t i = 0; i < rules.size(); ++i)
        for (size_t j = i + 1; j < rules.size(); ++j)
            if (m.orth(i, j))
                pairs.push_back({rules[i].wolfram, rules[j].wolfram});
    return pairs; // rules are ascending, so pairs are already sorted
}

std::vector<MocaFamily> enumerate_moca(int d, int k, int jobs) {
    if (k < 2)
        fail(errc::range, "family size must be at least 2");
    std::vector<LocalRule> rules = enumerate_bipermutive(d);
    PairMatrix m = build_pair_matrix(rules, jobs);

    // Grow index sets: every (k-1)-set is extended by each compatible rule
    // of larger index, which visits each unordered k-set exactly once.
    std::vector<std::vector<size_t>> current;
    for (size_t i = 0; i < rules.size(); ++i)
        for (size_t j = i + 1; j < rules.size(); ++j)
            if (m.orth(i, j))
                current.push_back({i, j});
    for (int size = 2; size < k; ++size) {
        std::vector<std::vector<size_t>> grown;
        for (const std::vector<size_t> &set : current) {
            for (size_t cand = set.back() + 1; cand < rules.size(); ++cand) {
                bool ok = true;
                for (size_t member : set)
                    if (!m.orth(member, cand)) {
                        ok = false;
                        break;
                    }
                if (ok) {
                    grown.push_back(set);
                    grown.back().push_back(cand);
                }
            }
        }
        current.swap(grown);
    }

    std::vector<MocaFamily> families;
    families.reserve(current.size());
    for (const std::vector<size_t> &set : current) {
        std::vector<uint64_t> ws;
        ws.reserve(set.size());
        for (size_t idx : set)
            ws.push_back(rules[idx].wolfram);
        families.push_back(MocaFamily::trusted(d, std::move(ws)));
    }
    std::sort(families.begin(), families.end(),
              [](const MocaFamily &a, const MocaFamily &b) {
                  return a.rules < b.rules;
              });
    return families;
}

std::vector<MocaFamily>
reduce_up_to_complement(const std::vector<MocaFamily> &families, int d) {
    std::vector<MocaFamily> reps;
    reps.reserve(families.size());
    for (const MocaFamily &f : families) {
        std::vector<uint64_t> canon;
        canon.reserve(f.rules.size());
        for (uint64_t w : f.rules) {
            LocalRule r = LocalRule::from_wolfram(w, d);
            canon.push_back(w % 2 == 0 ? w : r.complement().wolfram);
        }
        reps.push_back(MocaFamily::trusted(d, std::move(canon)));
    }
    std::sort(reps.begin(), reps.end(),
              [](const MocaFamily &a, const MocaFamily &b) {
                  return a.rules < b.rules;
              });
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    return reps;
}

Classification classify_families(int d, int k, int jobs) {
    Classification c;
    c.d = d;
    c.k = k;
    std::vector<MocaFamily> families = enumerate_moca(d, k, jobs);
    c.raw_unordered = families.size();
    uint64_t factorial = 1;
    for (int i = 2; i <= k; ++i)
        factorial *= uint64_t(i);
    c.ordered = c.raw_unordered * factorial;

    std::vector<MocaFamily> reps = reduce_up_to_complement(families, d);
    c.up_to_complement = reps.size();

    c.families.reserve(families.size());
    for (const MocaFamily &fam : families) {
        FamilyReport r;
        r.family = fam;
        BooleanFunction f = ci_function(fam);
        r.n = f.n;
        r.weight = f.weight();
        r.ci = correlation_immunity_order(f);
        r.nl = nonlinearity(f);
        r.degree = algebraic_degree(f);
        r.degenerate = r.weight == f.size();
        r.canonical = std::all_of(fam.rules.begin(), fam.rules.end(),
                                  [](uint64_t w) { return w % 2 == 0; });
        c.families.push_back(std::move(r));
        c.ci_histogram_raw[c.families.back().ci]++;
        if (c.families.back().canonical)
            c.ci_histogram_up_to_complement[c.families.back().ci]++;
    }
    return c;
}

} // namespace moca
