#include "ca.hpp"

#include <algorithm>
#include <cinttypes>
#include <cstdio>

#include "error.hpp"

namespace moca {

LocalRule LocalRule::from_wolfram(uint64_t w, int d) {
    if (d < min_diameter || d > max_diameter)
        fail(errc::range, "diameter must be in " +
                              std::to_string(min_diameter) + ".." +
                              std::to_string(max_diameter) + ", got " +
                              std::to_string(d));
    if (d < max_diameter && w >= (uint64_t(1) << (1 << d)))
        fail(errc::range, "Wolfram number " + std::to_string(w) +
                              " out of range for diameter " +
                              std::to_string(d));
    return LocalRule{d, w};
}

std::vector<uint8_t> LocalRule::table() const {
    std::vector<uint8_t> t(size_t(1) << d);
    for (uint32_t x = 0; x < t.size(); ++x)
        t[x] = eval(x);
    return t;
}

bool LocalRule::is_bipermutive() const {
    const uint32_t half = uint32_t(1) << (d - 1);
    for (uint32_t rest = 0; rest < half; ++rest)
        if (eval(rest) == eval(rest | half)) // x_1 flip must flip the output
            return false;
    for (uint32_t rest = 0; rest < half; ++rest)
        if (eval(rest << 1) == eval((rest << 1) | 1)) // likewise x_d
            return false;
    return true;
}

LocalRule LocalRule::complement() const {
    uint64_t mask = d == max_diameter
                        ? ~uint64_t(0)
                        : (uint64_t(1) << (1 << d)) - 1;
    return LocalRule{d, wolfram ^ mask};
}

std::string LocalRule::format() const {
    char buf[48];
    std::snprintf(buf, sizeof buf, "d=%d w=%" PRIu64, d, wolfram);
    return buf;
}

LocalRule LocalRule::parse(const std::string &text) {
    int d = 0;
    uint64_t w = 0;
    char tail = 0;
    int got = std::sscanf(text.c_str(), " d=%d w=%" SCNu64 " %c", &d, &w,
                          &tail);
    if (got != 2)
        fail(errc::parse, "rule text must look like \"d=3 w=90\", got \"" +
                              text + "\"");
    return LocalRule::from_wolfram(w, d);
}

std::vector<LocalRule> enumerate_bipermutive(int d) {
    if (d < 3 || d > max_diameter)
        fail(errc::range,
             "bipermutive enumeration needs diameter 3.." +
                 std::to_string(max_diameter) + ", got " + std::to_string(d));
    const int center_bits = 1 << (d - 2);
    std::vector<LocalRule> rules;
    rules.reserve(size_t(1) << center_bits);
    const uint64_t phi_count = uint64_t(1) << center_bits;
    for (uint64_t phi = 0; phi < phi_count; ++phi) {
        uint64_t w = 0;
        for (uint32_t x = 0; x < (uint32_t(1) << d); ++x) {
            uint32_t x1 = (x >> (d - 1)) & 1;
            uint32_t xd = x & 1;
            uint32_t center = (x >> 1) & ((uint32_t(1) << (d - 2)) - 1);
            uint64_t bit = x1 ^ xd ^ uint32_t((phi >> center) & 1);
            w |= bit << x;
        }
        rules.push_back(LocalRule{d, w});
    }
    std::sort(rules.begin(), rules.end(),
              [](const LocalRule &a, const LocalRule &b) {
                  return a.wolfram < b.wolfram;
              });
    return rules;
}

std::vector<uint8_t> apply_ca(const LocalRule &rule,
                              const std::vector<uint8_t> &input) {
    const size_t n = input.size();
    if (n < size_t(rule.d))
        fail(errc::dimension, "input has " + std::to_string(n) +
                                  " cells, rule needs at least " +
                                  std::to_string(rule.d));
    std::vector<uint8_t> out(n - rule.d + 1);
    for (size_t i = 0; i < out.size(); ++i) {
        uint32_t window = 0;
        for (int j = 0; j < rule.d; ++j) {
            if (input[i + j] > 1)
                fail(errc::invalid_argument, "input cells must be 0 or 1");
            window = (window << 1) | input[i + j];
        }
        out[i] = rule.eval(window);
    }
    return out;
}

uint64_t apply_ca_packed(const LocalRule &rule, uint64_t z, int nbits) {
    if (nbits < rule.d || nbits > 64)
        fail(errc::dimension, "packed input of " + std::to_string(nbits) +
                                  " bits incompatible with diameter " +
                                  std::to_string(rule.d));
    const int out_bits = nbits - rule.d + 1;
    const uint32_t mask = (uint32_t(1) << rule.d) - 1;
    uint64_t out = 0;
    for (int i = 0; i < out_bits; ++i) {
        uint32_t window =
            uint32_t(z >> (nbits - i - rule.d)) & mask;
        out = (out << 1) | uint64_t(rule.eval(window));
    }
    return out;
}

} // namespace moca
