#include "latin.hpp"

#include <algorithm>

#include "error.hpp"

namespace moca {

bool LatinSquare::is_latin() const {
    const int n = order;
    std::vector<uint8_t> seen(size_t(n) + 1);
    for (int r = 1; r <= n; ++r) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int c = 1; c <= n; ++c) {
            int v = at(r, c);
            if (v < 1 || v > n || seen[v])
                return false;
            seen[v] = 1;
        }
    }
    for (int c = 1; c <= n; ++c) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int r = 1; r <= n; ++r) {
            int v = at(r, c);
            if (seen[v])
                return false;
            seen[v] = 1;
        }
    }
    return true;
}

uint32_t index_bijection(const std::vector<uint8_t> &v) {
    if (v.empty() || v.size() > 31)
        fail(errc::range, "index bijection takes 1..31 bits, got " +
                              std::to_string(v.size()));
    uint32_t x = 0;
    for (uint8_t bit : v) {
        if (bit > 1)
            fail(errc::invalid_argument, "bit vector entries must be 0 or 1");
        x = (x << 1) | bit;
    }
    return x + 1;
}

std::vector<uint8_t> index_bijection_inverse(uint32_t index, size_t b) {
    if (b == 0 || b > 31)
        fail(errc::range, "index bijection takes 1..31 bits, got " +
                              std::to_string(b));
    if (index < 1 || index > (uint32_t(1) << b))
        fail(errc::range, "index " + std::to_string(index) +
                              " outside 1..2^" + std::to_string(b));
    uint32_t x = index - 1;
    std::vector<uint8_t> v(b);
    for (size_t j = 0; j < b; ++j)
        v[j] = (x >> (b - 1 - j)) & 1;
    return v;
}

LatinSquare square_from_ca(const LocalRule &rule) {
    if (!rule.is_bipermutive())
        fail(errc::precondition,
             "Latin square construction needs a bipermutive rule; " +
                 rule.format() + " is not");
    const int b = rule.d - 1;
    const uint32_t n = uint32_t(1) << b;
    LatinSquare s;
    s.order = int(n);
    s.cells.resize(size_t(n) * n);
    for (uint32_t left = 0; left < n; ++left) {
        for (uint32_t right = 0; right < n; ++right) {
            uint64_t z = (uint64_t(left) << b) | right;
            uint64_t out = apply_ca_packed(rule, z, 2 * b);
            s.cells[size_t(left) * n + right] = uint16_t(out + 1);
        }
    }
    return s;
}

bool are_orthogonal(const LatinSquare &a, const LatinSquare &b) {
    if (a.order != b.order)
        fail(errc::dimension, "orders differ: " + std::to_string(a.order) +
                                  " vs " + std::to_string(b.order));
    const size_t n = size_t(a.order);
    std::vector<uint8_t> seen(n * n, 0);
    for (size_t i = 0; i < n * n; ++i) {
        size_t pair = size_t(a.cells[i] - 1) * n + (b.cells[i] - 1);
        if (seen[pair])
            return false;
        seen[pair] = 1;
    }
    return true;
}

std::string square_format(const LatinSquare &s) {
    std::string out;
    for (int r = 1; r <= s.order; ++r) {
        for (int c = 1; c <= s.order; ++c) {
            if (c > 1)
                out += ' ';
            out += std::to_string(s.at(r, c));
        }
        out += '\n';
    }
    return out;
}

OrthogonalArray mols_to_oa(const std::vector<const LatinSquare *> &squares) {
    if (squares.size() < 2)
        fail(errc::precondition, "need at least 2 squares, got " +
                                     std::to_string(squares.size()));
    const int order = squares[0]->order;
    for (const LatinSquare *s : squares)
        if (s->order != order)
            fail(errc::dimension, "squares have mixed orders");
    for (size_t i = 0; i < squares.size(); ++i)
        for (size_t j = i + 1; j < squares.size(); ++j)
            if (!are_orthogonal(*squares[i], *squares[j]))
                fail(errc::precondition,
                     "squares " + std::to_string(i) + " and " +
                         std::to_string(j) + " are not orthogonal");
    const size_t n = size_t(order);
    const size_t k = squares.size();
    std::vector<int32_t> entries(n * n * k);
    for (size_t cell = 0; cell < n * n; ++cell)
        for (size_t i = 0; i < k; ++i)
            entries[cell * k + i] = squares[i]->cells[cell] - 1;
    OrthogonalArray a = oa_from_rows(n * n, k, order, entries);
    if (a.strength != 2 || a.index() != 1)
        fail(errc::verification,
             "stacked squares failed the strength-2 index-1 check");
    return a;
}

} // namespace moca
