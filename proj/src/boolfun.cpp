#include "boolfun.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

#include "error.hpp"

namespace moca {

static void check_n(int n) {
    if (n < 1 || n > max_variables)
        fail(errc::range, "variable count must be in 1.." +
                              std::to_string(max_variables) + ", got " +
                              std::to_string(n));
}

static size_t words_for(int n) {
    return size_t(((uint64_t(1) << n) + 63) / 64);
}

BooleanFunction BooleanFunction::zero(int n) {
    check_n(n);
    BooleanFunction f;
    f.n = n;
    f.table.assign(words_for(n), 0);
    return f;
}

void BooleanFunction::set_bit(uint64_t x, bool v) {
    if (v)
        table[x >> 6] |= uint64_t(1) << (x & 63);
    else
        table[x >> 6] &= ~(uint64_t(1) << (x & 63));
}

BooleanFunction BooleanFunction::from_support(
    int n, const std::vector<uint64_t> &rows) {
    BooleanFunction f = zero(n);
    for (uint64_t r : rows) {
        if (r >= f.size())
            fail(errc::dimension, "support row " + std::to_string(r) +
                                      " does not fit " + std::to_string(n) +
                                      " variables");
        if (f.bit(r))
            fail(errc::invalid_argument,
                 "duplicate support row " + std::to_string(r));
        f.set_bit(r, true);
    }
    return f;
}

BooleanFunction BooleanFunction::from_table_bits(
    int n, const std::vector<uint8_t> &bits) {
    BooleanFunction f = zero(n);
    if (bits.size() != f.size())
        fail(errc::dimension, "table has " + std::to_string(bits.size()) +
                                  " entries, expected " +
                                  std::to_string(f.size()));
    for (uint64_t i = 0; i < f.size(); ++i) {
        if (bits[i] > 1)
            fail(errc::invalid_argument, "table entries must be 0 or 1");
        f.set_bit(i, bits[i]);
    }
    return f;
}

uint64_t BooleanFunction::weight() const {
    uint64_t w = 0;
    for (uint64_t word : table)
        w += std::popcount(word);
    return w;
}

std::vector<uint64_t> BooleanFunction::support() const {
    std::vector<uint64_t> rows;
    rows.reserve(weight());
    for (uint64_t x = 0; x < size(); ++x)
        if (bit(x))
            rows.push_back(x);
    return rows;
}

std::vector<int32_t> walsh_transform(const BooleanFunction &f) {
    const uint64_t size = f.size();
    std::vector<int32_t> w(size);
    for (uint64_t x = 0; x < size; ++x)
        w[x] = f.bit(x) ? -1 : 1;
    for (uint64_t len = 1; len < size; len <<= 1) {
        for (uint64_t block = 0; block < size; block += len << 1) {
            for (uint64_t i = block; i < block + len; ++i) {
                int32_t a = w[i], b = w[i + len];
                w[i] = a + b;
                w[i + len] = a - b;
            }
        }
    }
    return w;
}

std::vector<int32_t> walsh_transform_naive(const BooleanFunction &f) {
    const uint64_t size = f.size();
    std::vector<int32_t> w(size);
    for (uint64_t a = 0; a < size; ++a) {
        int64_t sum = 0;
        for (uint64_t x = 0; x < size; ++x) {
            int e = int(f.bit(x)) ^ (std::popcount(a & x) & 1);
            sum += e ? -1 : 1;
        }
        w[a] = int32_t(sum);
    }
    return w;
}

uint32_t nonlinearity(const BooleanFunction &f) {
    auto w = walsh_transform(f);
    uint32_t max_abs = 0;
    for (int32_t v : w)
        max_abs = std::max<uint32_t>(max_abs, v < 0 ? uint32_t(-int64_t(v))
                                                    : uint32_t(v));
    return uint32_t((uint64_t(1) << (f.n - 1)) - max_abs / 2);
}

BooleanFunction anf(const BooleanFunction &f) {
    BooleanFunction a = f;
    const uint64_t size = a.size();
    // XOR-fold along each input dimension; working on unpacked bytes keeps
    // the strides trivial and these tables are at most 2^16 entries.
    std::vector<uint8_t> bits(size);
    for (uint64_t x = 0; x < size; ++x)
        bits[x] = a.bit(x);
    for (uint64_t len = 1; len < size; len <<= 1)
        for (uint64_t block = 0; block < size; block += len << 1)
            for (uint64_t i = block; i < block + len; ++i)
                bits[i + len] ^= bits[i];
    for (uint64_t x = 0; x < size; ++x)
        a.set_bit(x, bits[x]);
    return a;
}

int algebraic_degree(const BooleanFunction &f) {
    BooleanFunction a = anf(f);
    int deg = 0;
    for (uint64_t u = 0; u < a.size(); ++u)
        if (a.bit(u))
            deg = std::max(deg, std::popcount(u));
    return deg;
}

int correlation_immunity_order(const BooleanFunction &f) {
    auto w = walsh_transform(f);
    int min_weight = f.n + 1;
    for (uint64_t a = 1; a < f.size(); ++a)
        if (w[a] != 0)
            min_weight = std::min(min_weight, std::popcount(a));
    return min_weight == f.n + 1 ? f.n : min_weight - 1;
}

std::string to_binary_string(const BooleanFunction &f) {
    std::string s(f.size(), '0');
    for (uint64_t x = 0; x < f.size(); ++x)
        if (f.bit(x))
            s[x] = '1';
    return s;
}

std::string to_hex_string(const BooleanFunction &f) {
    if (f.n < 2)
        fail(errc::invalid_argument,
             "hex form needs a table length divisible by 4 (n >= 2)");
    static const char digits[] = "0123456789abcdef";
    std::string s;
    s.reserve(f.size() / 4);
    for (uint64_t i = 0; i < f.size(); i += 4) {
        int v = 0;
        for (int j = 0; j < 4; ++j)
            v = (v << 1) | int(f.bit(i + j));
        s.push_back(digits[v]);
    }
    return s;
}

static int table_bits_to_n(size_t nbits, const char *what) {
    if (nbits == 0 || (nbits & (nbits - 1)) != 0)
        fail(errc::parse, std::string(what) +
                              " length must be a power of two, got " +
                              std::to_string(nbits) + " bits");
    int n = std::countr_zero(nbits);
    if (n < 1 || n > max_variables)
        fail(errc::parse, "table size 2^" + std::to_string(n) +
                              " is outside the supported 1.." +
                              std::to_string(max_variables) + " variables");
    return n;
}

BooleanFunction parse_binary_string(const std::string &text) {
    int n = table_bits_to_n(text.size(), "binary truth table");
    BooleanFunction f = BooleanFunction::zero(n);
    for (size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c != '0' && c != '1')
            fail(errc::parse, std::string("binary truth table has a "
                                          "character other than 0/1: '") +
                                  c + "'");
        f.set_bit(i, c == '1');
    }
    return f;
}

BooleanFunction parse_hex_string(const std::string &text) {
    int n = table_bits_to_n(text.size() * 4, "hex truth table");
    BooleanFunction f = BooleanFunction::zero(n);
    for (size_t i = 0; i < text.size(); ++i) {
        char c = char(std::tolower(static_cast<unsigned char>(text[i])));
        int v;
        if (c >= '0' && c <= '9')
            v = c - '0';
        else if (c >= 'a' && c <= 'f')
            v = c - 'a' + 10;
        else
            fail(errc::parse,
                 std::string("invalid hex digit '") + text[i] + "'");
        for (int j = 0; j < 4; ++j)
            f.set_bit(i * 4 + j, (v >> (3 - j)) & 1);
    }
    return f;
}

} // namespace moca
