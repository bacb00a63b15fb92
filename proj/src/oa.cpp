#include "oa.hpp"

#include <algorithm>
#include <sstream>

#include "error.hpp"
#include "latin.hpp"

namespace moca {

uint64_t OrthogonalArray::index() const {
    uint64_t st = 1;
    for (int i = 0; i < strength; ++i)
        st *= uint64_t(levels);
    return runs / st;
}

namespace {

// Checks one t-column projection: every tuple must occur runs/levels^t
// times. tuple_space = levels^t fits because callers stop once it exceeds
// runs.
bool projection_balanced(const std::vector<int32_t> &entries, size_t runs,
                         size_t factors, int levels,
                         const std::vector<size_t> &cols, size_t tuple_space,
                         std::vector<uint32_t> &counts) {
    counts.assign(tuple_space, 0);
    for (size_t r = 0; r < runs; ++r) {
        size_t idx = 0;
        for (size_t c : cols)
            idx = idx * levels + size_t(entries[r * factors + c]);
        ++counts[idx];
    }
    const uint32_t expected = uint32_t(runs / tuple_space);
    for (uint32_t v : counts)
        if (v != expected)
            return false;
    return true;
}

bool next_combination(std::vector<size_t> &cols, size_t k) {
    const size_t t = cols.size();
    size_t i = t;
    while (i > 0) {
        --i;
        if (cols[i] != i + k - t) {
            ++cols[i];
            for (size_t j = i + 1; j < t; ++j)
                cols[j] = cols[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

int strength_of(const std::vector<int32_t> &entries, size_t runs,
                size_t factors, int levels) {
    if (runs == 0 || factors == 0)
        fail(errc::invalid_argument, "array must have rows and columns");
    if (levels < 2)
        fail(errc::invalid_argument, "levels must be at least 2");
    if (entries.size() != runs * factors)
        fail(errc::dimension, "entry count does not match runs x factors");
    for (int32_t v : entries)
        if (v < 0 || v >= levels)
            fail(errc::invalid_argument,
                 "entry " + std::to_string(v) + " outside 0.." +
                     std::to_string(levels - 1));

    int t = 0;
    uint64_t tuple_space = 1;
    std::vector<uint32_t> counts;
    while (size_t(t) < factors) {
        tuple_space *= uint64_t(levels);
        if (tuple_space > runs || runs % tuple_space != 0)
            break;
        std::vector<size_t> cols(size_t(t) + 1);
        for (size_t j = 0; j <= size_t(t); ++j)
            cols[j] = j;
        bool ok = true;
        do {
            if (!projection_balanced(entries, runs, factors, levels, cols,
                                     size_t(tuple_space), counts)) {
                ok = false;
                break;
            }
        } while (next_combination(cols, factors));
        if (!ok)
            break;
        ++t;
    }
    return t;
}

OrthogonalArray oa_from_rows(size_t runs, size_t factors, int levels,
                             const std::vector<int32_t> &entries) {
    OrthogonalArray a;
    a.runs = runs;
    a.factors = factors;
    a.levels = levels;
    a.entries = entries;
    a.strength = strength_of(entries, runs, factors, levels);
    return a;
}

std::string oa_format(const OrthogonalArray &a) {
    std::string out = std::to_string(a.runs) + " " +
                      std::to_string(a.factors) + " " +
                      std::to_string(a.levels) + " " +
                      std::to_string(a.strength) + "\n";
    for (size_t r = 0; r < a.runs; ++r) {
        for (size_t c = 0; c < a.factors; ++c) {
            if (c > 0)
                out += ' ';
            out += std::to_string(a.at(r, c));
        }
        out += '\n';
    }
    return out;
}

OrthogonalArray oa_parse(const std::string &text) {
    std::istringstream in(text);
    long long runs = 0, factors = 0, levels = 0, t = 0;
    if (!(in >> runs >> factors >> levels >> t))
        fail(errc::parse, "array header must read \"N k s t\"");
    if (runs <= 0 || factors <= 0 || levels < 2 || t < 0)
        fail(errc::parse, "array header values out of range");
    std::vector<int32_t> entries;
    entries.reserve(size_t(runs) * size_t(factors));
    long long v;
    while (in >> v)
        entries.push_back(int32_t(v));
    if (entries.size() != size_t(runs) * size_t(factors))
        fail(errc::parse, "expected " +
                              std::to_string(size_t(runs) * size_t(factors)) +
                              " entries, found " +
                              std::to_string(entries.size()));
    OrthogonalArray a =
        oa_from_rows(size_t(runs), size_t(factors), int(levels), entries);
    if (a.strength != int(t))
        fail(errc::verification,
             "header declares strength " + std::to_string(t) +
                 " but the verified maximum is " + std::to_string(a.strength));
    return a;
}

MocaFamily MocaFamily::trusted(int d, std::vector<uint64_t> wolframs) {
    MocaFamily f;
    f.d = d;
    f.rules = std::move(wolframs);
    std::sort(f.rules.begin(), f.rules.end());
    return f;
}

MocaFamily MocaFamily::create(int d, std::vector<uint64_t> wolframs) {
    if (wolframs.size() < 2)
        fail(errc::precondition, "a family needs at least 2 rules");
    MocaFamily f = trusted(d, std::move(wolframs));
    for (size_t i = 1; i < f.rules.size(); ++i)
        if (f.rules[i] == f.rules[i - 1])
            fail(errc::precondition, "family rules must be distinct");
    std::vector<LatinSquare> squares;
    squares.reserve(f.rules.size());
    for (uint64_t w : f.rules)
        squares.push_back(square_from_ca(LocalRule::from_wolfram(w, d)));
    for (size_t i = 0; i < squares.size(); ++i)
        for (size_t j = i + 1; j < squares.size(); ++j)
            if (!are_orthogonal(squares[i], squares[j]))
                fail(errc::precondition,
                     "rules " + std::to_string(f.rules[i]) + " and " +
                         std::to_string(f.rules[j]) +
                         " are not orthogonal");
    return f;
}

OrthogonalArray binary_expansion(const MocaFamily &family) {
    const int b = family.d - 1;
    const size_t runs = size_t(1) << (2 * b);
    const size_t n = family.k() * size_t(b);
    std::vector<LocalRule> rules;
    for (uint64_t w : family.rules)
        rules.push_back(LocalRule::from_wolfram(w, family.d));
    std::vector<int32_t> entries(runs * n);
    for (size_t z = 0; z < runs; ++z) {
        size_t col = 0;
        for (const LocalRule &r : rules) {
            uint64_t out = apply_ca_packed(r, z, 2 * b);
            for (int j = b - 1; j >= 0; --j)
                entries[z * n + col++] = int32_t((out >> j) & 1);
        }
    }
    OrthogonalArray a = oa_from_rows(runs, n, 2, entries);
    if (family.k() >= 2 && a.strength < 2)
        fail(errc::verification,
             "binary expansion fell below strength 2, which contradicts "
             "the pairwise orthogonality of the family");
    return a;
}

BooleanFunction ci_function(const MocaFamily &family) {
    OrthogonalArray a = binary_expansion(family);
    const int n = int(a.factors);
    std::vector<uint64_t> rows;
    rows.reserve(a.runs);
    for (size_t r = 0; r < a.runs; ++r) {
        uint64_t x = 0;
        for (size_t c = 0; c < a.factors; ++c)
            x = (x << 1) | uint64_t(a.at(r, c));
        rows.push_back(x);
    }
    {
        std::vector<uint64_t> sorted = rows;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            fail(errc::verification,
                 "binary expansion produced duplicate rows; orthogonal "
                 "families must separate all inputs");
    }
    return BooleanFunction::from_support(n, rows);
}

namespace {

// Rows r1, r2 can share an index-1 removal group iff they agree on at most
// t-1 coordinates (agreement on t coordinates collides in that projection).
struct GroupSearch {
    size_t group_size;
    const std::vector<std::vector<uint8_t>> &compatible;
    const std::vector<size_t> &alive;
    uint64_t budget;
    std::vector<size_t> chosen;

    bool extend(size_t from) {
        if (chosen.size() == group_size)
            return true;
        if (budget == 0)
            return false;
        for (size_t idx = from; idx < alive.size(); ++idx) {
            if (alive.size() - idx < group_size - chosen.size())
                return false;
            if (budget == 0)
                return false;
            --budget;
            size_t row = alive[idx];
            bool ok = true;
            for (size_t c : chosen)
                if (!compatible[c][row]) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            chosen.push_back(row);
            if (extend(idx + 1))
                return true;
            chosen.pop_back();
        }
        return false;
    }
};

} // namespace

OrthogonalArray expurgate(const OrthogonalArray &a, int target_t,
                          uint64_t budget) {
    if (target_t < 1)
        fail(errc::precondition, "target strength must be at least 1");
    if (a.strength < target_t)
        fail(errc::precondition,
             "array has verified strength " + std::to_string(a.strength) +
                 ", below the target " + std::to_string(target_t));

    uint64_t group_size = 1;
    for (int i = 0; i < target_t; ++i)
        group_size *= uint64_t(a.levels);

    // Pairwise compatibility: rows may coexist in one removal group only if
    // they agree on fewer than target_t coordinates.
    const size_t n = a.runs;
    std::vector<std::vector<uint8_t>> compatible(n,
                                                 std::vector<uint8_t>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            int agree = 0;
            for (size_t c = 0; c < a.factors; ++c)
                if (a.at(i, c) == a.at(j, c))
                    ++agree;
            compatible[i][j] = compatible[j][i] = agree < target_t;
        }

    std::vector<uint8_t> removed(n, 0);
    size_t remaining = n;
    while (remaining > group_size && budget > 0) {
        std::vector<size_t> alive;
        alive.reserve(remaining);
        for (size_t i = 0; i < n; ++i)
            if (!removed[i])
                alive.push_back(i);
        GroupSearch search{size_t(group_size), compatible, alive, budget, {}};
        bool found = search.extend(0);
        budget = search.budget;
        if (!found)
            break;
        for (size_t row : search.chosen)
            removed[row] = 1;
        remaining -= search.chosen.size();
    }

    std::vector<int32_t> entries;
    entries.reserve(remaining * a.factors);
    for (size_t i = 0; i < n; ++i)
        if (!removed[i])
            for (size_t c = 0; c < a.factors; ++c)
                entries.push_back(a.at(i, c));
    OrthogonalArray out = oa_from_rows(remaining, a.factors, a.levels,
                                       entries);
    if (out.strength < target_t)
        fail(errc::verification,
             "row removal broke the strength guarantee; this is a bug");
    return out;
}

} // namespace moca
