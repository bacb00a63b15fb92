#include "moca/moca.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "json.hpp"

#include "boolfun.hpp"
#include "ca.hpp"
#include "debruijn.hpp"
#include "error.hpp"
#include "latin.hpp"
#include "oa.hpp"
#include "search.hpp"

using json = nlohmann::json;

struct moca_rule {
    moca::LocalRule r;
};
struct moca_function {
    moca::BooleanFunction f;
};
struct moca_square {
    moca::LatinSquare s;
};
struct moca_oa {
    moca::OrthogonalArray a;
};
struct moca_labeling {
    moca::CoupledLabeling l;
};
struct moca_family {
    moca::MocaFamily f;
};
struct moca_family_list {
    int d = 0;
    std::vector<moca::MocaFamily> v;
};

namespace {

thread_local std::string g_last_error;

moca_status map_code(moca::errc c) {
    switch (c) {
    case moca::errc::ok: return MOCA_OK;
    case moca::errc::invalid_argument: return MOCA_ERR_INVALID_ARGUMENT;
    case moca::errc::dimension: return MOCA_ERR_DIMENSION;
    case moca::errc::range: return MOCA_ERR_RANGE;
    case moca::errc::precondition: return MOCA_ERR_PRECONDITION;
    case moca::errc::verification: return MOCA_ERR_VERIFICATION;
    case moca::errc::parse: return MOCA_ERR_PARSE;
    case moca::errc::not_an_edge: return MOCA_ERR_NOT_AN_EDGE;
    case moca::errc::unsupported: return MOCA_ERR_UNSUPPORTED;
    case moca::errc::buffer: return MOCA_ERR_BUFFER;
    }
    return MOCA_ERR_INVALID_ARGUMENT;
}

moca_status set_error(moca_status s, const std::string &msg) {
    g_last_error = msg;
    return s;
}

template <typename Fn> moca_status guarded(Fn &&fn) {
    try {
        fn();
        return MOCA_OK;
    } catch (const moca::error &e) {
        return set_error(map_code(e.code), e.what());
    } catch (const std::exception &e) {
        return set_error(MOCA_ERR_INVALID_ARGUMENT, e.what());
    }
}

moca_status require(bool cond, const char *msg) {
    if (cond)
        return MOCA_OK;
    return set_error(MOCA_ERR_INVALID_ARGUMENT, msg);
}

char *dup_string(const std::string &s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (out)
        std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

moca_status emit_string(const std::string &s, char **out) {
    *out = dup_string(s);
    if (!*out)
        return set_error(MOCA_ERR_INVALID_ARGUMENT, "allocation failed");
    return MOCA_OK;
}

json family_json(const moca::MocaFamily &f) {
    return json{{"d", f.d}, {"k", f.rules.size()}, {"rules", f.rules}};
}

} // namespace

extern "C" {

const char *moca_status_name(moca_status s) {
    switch (s) {
    case MOCA_OK: return "ok";
    case MOCA_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case MOCA_ERR_DIMENSION: return "dimension-mismatch";
    case MOCA_ERR_RANGE: return "out-of-range";
    case MOCA_ERR_PRECONDITION: return "precondition-failed";
    case MOCA_ERR_VERIFICATION: return "verification-failed";
    case MOCA_ERR_PARSE: return "parse-error";
    case MOCA_ERR_NOT_AN_EDGE: return "not-an-edge";
    case MOCA_ERR_UNSUPPORTED: return "unsupported";
    case MOCA_ERR_BUFFER: return "buffer-too-small";
    }
    return "unknown";
}

const char *moca_last_error(void) { return g_last_error.c_str(); }

const char *moca_version(void) { return "1.0.0"; }

void moca_string_free(char *s) { std::free(s); }

/* ---------------- rules ---------------- */

moca_status moca_rule_from_wolfram(uint64_t wolfram, int diameter,
                                   moca_rule **out) {
    if (moca_status s = require(out != nullptr, "null output"); s) return s;
    return guarded([&] {
        *out = new moca_rule{moca::LocalRule::from_wolfram(wolfram,
                                                           diameter)};
    });
}

void moca_rule_free(moca_rule *r) { delete r; }

moca_status moca_rule_wolfram(const moca_rule *r, uint64_t *out) {
    if (moca_status s = require(r && out, "null argument"); s) return s;
    *out = r->r.wolfram;
    return MOCA_OK;
}

moca_status moca_rule_diameter(const moca_rule *r, int *out) {
    if (moca_status s = require(r && out, "null argument"); s) return s;
    *out = r->r.d;
    return MOCA_OK;
}

moca_status moca_rule_eval(const moca_rule *r, uint32_t neighborhood,
                           int *out) {
    if (moca_status s = require(r && out, "null argument"); s) return s;
    if (neighborhood >= (uint32_t(1) << r->r.d))
        return set_error(MOCA_ERR_RANGE,
                         "neighborhood does not fit the diameter");
    *out = r->r.eval(neighborhood) ? 1 : 0;
    return MOCA_OK;
}

moca_status moca_rule_table(const moca_rule *r, uint8_t *buf, size_t cap) {
    if (moca_status s = require(r && buf, "null argument"); s) return s;
    size_t need = size_t(1) << r->r.d;
    if (cap < need)
        return set_error(MOCA_ERR_BUFFER, "table buffer too small");
    return guarded([&] {
        auto t = r->r.table();
        std::memcpy(buf, t.data(), need);
    });
}

moca_status moca_rule_is_bipermutive(const moca_rule *r, int *out) {
    if (moca_status s = require(r && out, "null argument"); s) return s;
    *out = r->r.is_bipermutive() ? 1 : 0;
    return MOCA_OK;
}

moca_status moca_rule_format(const moca_rule *r, char **out) {
    if (moca_status s = require(r && out, "null argument"); s) return s;
    return emit_string(r->r.format(), out);
}

moca_status moca_rule_parse(const char *text, moca_rule **out) {
    if (moca_status s = require(text && out, "null argument"); s) return s;
    return guarded(
        [&] { *out = new moca_rule{moca::LocalRule::parse(text)}; });
}

moca_status moca_enumerate_bipermutive(int diameter, uint64_t *buf,
                                       size_t cap, size_t *count) {
    if (moca_status s = require(count != nullptr, "null count"); s) return s;
    return guarded([&] {
        auto rules = moca::enumerate_bipermutive(diameter);
        *count = rules.size();
        if (buf) {
            if (cap < rules.size())
                moca::fail(moca::errc::buffer, "rule buffer too small");
            for (size_t i = 0; i < rules.size(); ++i)
                buf[i] = rules[i].wolfram;
        }
    });
}

moca_status moca_rule_apply(const moca_rule *r, const uint8_t *input,
                            size_t n, uint8_t *out, size_t *out_len) {
    if (moca_status s = require(r && input && out, "null argument"); s)
        return s;
    return guarded([&] {
        std::vector<uint8_t> in(input, input + n);
        auto res = moca::apply_ca(r->r, in);
        std::memcpy(out, res.data(), res.size());
        if (out_len)
            *out_len = res.size();
    });
}

/* ---------------- Boolean functions ---------------- */

moca_status moca_function_from_support(int n, const uint64_t *rows,
                                       size_t nrows, moca_function **out) {
    if (moca_status s = require(out && (rows || nrows == 0),
                                "null argument");
        s)
        return s;
    return guarded([&] {
        std::vector<uint64_t> v(rows, rows + nrows);
        *out = new moca_function{moca::BooleanFunction::from_support(n, v)};
    });
}

moca_status moca_function_from_table(int n, const uint8_t *table,
                                     moca_function **out) {
    if (moca_status s = require(out && table, "null argument"); s) return s;
    return guarded([&] {
        if (n < 1 || n > moca::max_variables)
            moca::fail(moca::errc::range, "variable count out of range");
        std::vector<uint8_t> bits(table, table + (size_t(1) << n));
        *out =
            new moca_function{moca::BooleanFunction::from_table_bits(n, bits)};
    });
}

void moca_function_free(moca_function *f) { delete f; }

moca_status moca_function_n(const moca_function *f, int *out) {
    if (moca_status s = require(f && out, "null argument"); s) return s;
    *out = f->f.n;
    return MOCA_OK;
}

moca_status moca_function_weight(const moca_function *f, uint64_t *out) {
    if (moca_status s = require(f && out, "null argument"); s) return s;
    *out = f->f.weight();
    return MOCA_OK;
}

moca_status moca_function_bit(const moca_function *f, uint64_t x, int *out) {
    if (moca_status s = require(f && out, "null argument"); s) return s;
    if (x >= f->f.size())
        return set_error(MOCA_ERR_RANGE, "input outside the function domain");
    *out = f->f.bit(x) ? 1 : 0;
    return MOCA_OK;
}

moca_status moca_function_to_binary(const moca_function *f, char **out) {
    if (moca_status s = require(f && out, "null argument"); s) return s;
    return emit_string(moca::to_binary_string(f->f), out);
}

moca_status moca_function_to_hex(const moca_function *f, char **out) {
    if (moca_status s = require(f && out, "null argument"); s) return s;
    moca_status rc = MOCA_OK;
    moca_status g = guarded([&] {
        std::string s = moca::to_hex_string(f->f);
        rc = emit_string(s, out);
    });
    return g ? g : rc;
}

moca_status moca_function_parse_binary(const char *text,
                                       moca_function **out) {
    if (moca_status s = require(text && out, "null argument"); s) return s;
    return guarded([&] {
        *out = new moca_function{moca::parse_binary_string(text)};
    });
}

moca_status moca_function_parse_hex(const char *text, moca_function **out) {
    if (moca_status s = require(text && out, "null argument"); s) return s;
    return guarded(
        [&] { *out = new moca_function{moca::parse_hex_string(text)}; });
}

static moca_status walsh_common(const moca_function *f, int32_t *buf,
                                size_t cap, bool naive) {
    if (moca_status s = require(f && buf, "null argument"); s) return s;
    if (cap < f->f.size())
        return set_error(MOCA_ERR_BUFFER, "spectrum buffer too small");
    return guarded([&] {
        auto w = naive ? moca::walsh_transform_naive(f->f)
                       : moca::walsh_transform(f->f);
        std::memcpy(buf, w.data(), w.size() * sizeof(int32_t));
    });
}

moca_status moca_function_walsh(const moca_function *f, int32_t *buf,
                                size_t cap) {
    return walsh_common(f, buf, cap, false);
}

moca_status moca_function_walsh_naive(const moca_function *f, int32_t *buf,
                                      size_t cap) {
    return walsh_common(f, buf, cap, true);
}

moca_status moca_function_nonlinearity(const moca_function *f,
                                       uint32_t *out) {
    if (moca_status s = require(f && out, "null argument"); s) return s;
    return guarded([&] { *out = moca::nonlinearity(f->f); });
}

moca_status moca_function_anf(const moca_function *f, uint8_t *buf,
                              size_t cap) {
    if (moca_status s = require(f && buf, "null argument"); s) return s;
    if (cap < f->f.size())
        return set_error(MOCA_ERR_BUFFER, "coefficient buffer too small");
    return guarded([&] {
        moca::BooleanFunction a = moca::anf(f->f);
        for (uint64_t u = 0; u < a.size(); ++u)
            buf[u] = a.bit(u) ? 1 : 0;
    });
}

moca_status moca_function_degree(const moca_function *f, int *out) {
    if (moca_status s = require(f && out, "null argument"); s) return s;
    return guarded([&] { *out = moca::algebraic_degree(f->f); });
}

moca_status moca_function_ci_order(const moca_function *f, int *out) {
    if (moca_status s = require(f && out, "null argument"); s) return s;
    return guarded([&] { *out = moca::correlation_immunity_order(f->f); });
}

/* ---------------- Latin squares ---------------- */

moca_status moca_index_bijection(const uint8_t *bits, size_t b,
                                 uint32_t *out) {
    if (moca_status s = require(bits && out, "null argument"); s) return s;
    return guarded([&] {
        std::vector<uint8_t> v(bits, bits + b);
        *out = moca::index_bijection(v);
    });
}

moca_status moca_index_bijection_inverse(uint32_t index, size_t b,
                                         uint8_t *out_bits) {
    if (moca_status s = require(out_bits != nullptr, "null argument"); s)
        return s;
    return guarded([&] {
        auto v = moca::index_bijection_inverse(index, b);
        std::memcpy(out_bits, v.data(), v.size());
    });
}

moca_status moca_square_from_rule(const moca_rule *r, moca_square **out) {
    if (moca_status s = require(r && out, "null argument"); s) return s;
    return guarded(
        [&] { *out = new moca_square{moca::square_from_ca(r->r)}; });
}

void moca_square_free(moca_square *s) { delete s; }

moca_status moca_square_order(const moca_square *s, int *out) {
    if (moca_status st = require(s && out, "null argument"); st) return st;
    *out = s->s.order;
    return MOCA_OK;
}

moca_status moca_square_entry(const moca_square *s, int row, int col,
                              int *out) {
    if (moca_status st = require(s && out, "null argument"); st) return st;
    if (row < 1 || row > s->s.order || col < 1 || col > s->s.order)
        return set_error(MOCA_ERR_RANGE, "row/col outside 1..order");
    *out = s->s.at(row, col);
    return MOCA_OK;
}

moca_status moca_square_format(const moca_square *s, char **out) {
    if (moca_status st = require(s && out, "null argument"); st) return st;
    return emit_string(moca::square_format(s->s), out);
}

moca_status moca_squares_orthogonal(const moca_square *a,
                                    const moca_square *b, int *out) {
    if (moca_status st = require(a && b && out, "null argument"); st)
        return st;
    return guarded([&] { *out = moca::are_orthogonal(a->s, b->s) ? 1 : 0; });
}

/* ---------------- orthogonal arrays ---------------- */

moca_status moca_oa_from_rows(size_t runs, size_t factors, int levels,
                              const int32_t *entries, moca_oa **out) {
    if (moca_status s = require(entries && out, "null argument"); s)
        return s;
    return guarded([&] {
        std::vector<int32_t> e(entries, entries + runs * factors);
        *out = new moca_oa{moca::oa_from_rows(runs, factors, levels, e)};
    });
}

void moca_oa_free(moca_oa *a) { delete a; }

moca_status moca_oa_runs(const moca_oa *a, size_t *out) {
    if (moca_status s = require(a && out, "null argument"); s) return s;
    *out = a->a.runs;
    return MOCA_OK;
}

moca_status moca_oa_factors(const moca_oa *a, size_t *out) {
    if (moca_status s = require(a && out, "null argument"); s) return s;
    *out = a->a.factors;
    return MOCA_OK;
}

moca_status moca_oa_levels(const moca_oa *a, int *out) {
    if (moca_status s = require(a && out, "null argument"); s) return s;
    *out = a->a.levels;
    return MOCA_OK;
}

moca_status moca_oa_strength(const moca_oa *a, int *out) {
    if (moca_status s = require(a && out, "null argument"); s) return s;
    *out = a->a.strength;
    return MOCA_OK;
}

moca_status moca_oa_index(const moca_oa *a, uint64_t *out) {
    if (moca_status s = require(a && out, "null argument"); s) return s;
    *out = a->a.index();
    return MOCA_OK;
}

moca_status moca_oa_row(const moca_oa *a, size_t i, int32_t *buf,
                        size_t cap) {
    if (moca_status s = require(a && buf, "null argument"); s) return s;
    if (i >= a->a.runs)
        return set_error(MOCA_ERR_RANGE, "row index out of range");
    if (cap < a->a.factors)
        return set_error(MOCA_ERR_BUFFER, "row buffer too small");
    for (size_t c = 0; c < a->a.factors; ++c)
        buf[c] = a->a.at(i, c);
    return MOCA_OK;
}

moca_status moca_strength_of(const int32_t *entries, size_t runs,
                             size_t factors, int levels, int *out) {
    if (moca_status s = require(entries && out, "null argument"); s)
        return s;
    return guarded([&] {
        std::vector<int32_t> e(entries, entries + runs * factors);
        *out = moca::strength_of(e, runs, factors, levels);
    });
}

moca_status moca_oa_format(const moca_oa *a, char **out) {
    if (moca_status s = require(a && out, "null argument"); s) return s;
    return emit_string(moca::oa_format(a->a), out);
}

moca_status moca_oa_parse(const char *text, moca_oa **out) {
    if (moca_status s = require(text && out, "null argument"); s) return s;
    return guarded([&] { *out = new moca_oa{moca::oa_parse(text)}; });
}

moca_status moca_mols_to_oa(const moca_square *const *squares, size_t k,
                            moca_oa **out) {
    if (moca_status s = require(squares && out, "null argument"); s)
        return s;
    return guarded([&] {
        std::vector<const moca::LatinSquare *> ptrs;
        ptrs.reserve(k);
        for (size_t i = 0; i < k; ++i) {
            if (!squares[i])
                moca::fail(moca::errc::invalid_argument, "null square");
            ptrs.push_back(&squares[i]->s);
        }
        *out = new moca_oa{moca::mols_to_oa(ptrs)};
    });
}

moca_status moca_oa_expurgate(const moca_oa *a, int target_t,
                              uint64_t budget, moca_oa **out) {
    if (moca_status s = require(a && out, "null argument"); s) return s;
    return guarded(
        [&] { *out = new moca_oa{moca::expurgate(a->a, target_t, budget)}; });
}

/* ---------------- de Bruijn labelings ---------------- */

moca_status moca_fusion(uint32_t u, uint32_t v, int b, uint32_t *out) {
    if (moca_status s = require(out != nullptr, "null argument"); s)
        return s;
    return guarded([&] { *out = moca::fusion(u, v, b); });
}

moca_status moca_labeling_build(const moca_rule *const *rules, size_t k,
                                moca_labeling **out) {
    if (moca_status s = require(rules && out, "null argument"); s) return s;
    return guarded([&] {
        std::vector<moca::LocalRule> rs;
        rs.reserve(k);
        for (size_t i = 0; i < k; ++i) {
            if (!rules[i])
                moca::fail(moca::errc::invalid_argument, "null rule");
            rs.push_back(rules[i]->r);
        }
        *out = new moca_labeling{moca::build_labeling(rs)};
    });
}

void moca_labeling_free(moca_labeling *l) { delete l; }

moca_status moca_labeling_word_length(const moca_labeling *l, int *out) {
    if (moca_status s = require(l && out, "null argument"); s) return s;
    *out = l->l.b;
    return MOCA_OK;
}

moca_status moca_labeling_rule_count(const moca_labeling *l, size_t *out) {
    if (moca_status s = require(l && out, "null argument"); s) return s;
    *out = l->l.k();
    return MOCA_OK;
}

moca_status moca_labeling_format(const moca_labeling *l, char **out) {
    if (moca_status s = require(l && out, "null argument"); s) return s;
    return emit_string(moca::labeling_format(l->l), out);
}

moca_status moca_labeling_count_paths(const moca_labeling *l,
                                      const char *const *patterns, size_t k,
                                      uint64_t *out) {
    if (moca_status s = require(l && patterns && out, "null argument"); s)
        return s;
    return guarded([&] {
        std::vector<std::string> ps;
        ps.reserve(k);
        for (size_t i = 0; i < k; ++i) {
            if (!patterns[i])
                moca::fail(moca::errc::invalid_argument, "null pattern");
            ps.emplace_back(patterns[i]);
        }
        *out = moca::count_paths_with_label(l->l, ps);
    });
}

moca_status moca_labelings_orthogonal(const moca_rule *f, const moca_rule *g,
                                      int *out) {
    if (moca_status s = require(f && g && out, "null argument"); s)
        return s;
    return guarded(
        [&] { *out = moca::labelings_orthogonal(f->r, g->r) ? 1 : 0; });
}

/* ---------------- families ---------------- */

moca_status moca_family_create(int diameter, const uint64_t *wolframs,
                               size_t k, moca_family **out) {
    if (moca_status s = require(wolframs && out, "null argument"); s)
        return s;
    return guarded([&] {
        std::vector<uint64_t> ws(wolframs, wolframs + k);
        *out = new moca_family{moca::MocaFamily::create(diameter, ws)};
    });
}

void moca_family_free(moca_family *f) { delete f; }

moca_status moca_family_diameter(const moca_family *f, int *out) {
    if (moca_status s = require(f && out, "null argument"); s) return s;
    *out = f->f.d;
    return MOCA_OK;
}

moca_status moca_family_size(const moca_family *f, size_t *out) {
    if (moca_status s = require(f && out, "null argument"); s) return s;
    *out = f->f.k();
    return MOCA_OK;
}

moca_status moca_family_rule(const moca_family *f, size_t i, uint64_t *out) {
    if (moca_status s = require(f && out, "null argument"); s) return s;
    if (i >= f->f.k())
        return set_error(MOCA_ERR_RANGE, "rule index out of range");
    *out = f->f.rules[i];
    return MOCA_OK;
}

moca_status moca_family_format_json(const moca_family *f, char **out) {
    if (moca_status s = require(f && out, "null argument"); s) return s;
    return emit_string(family_json(f->f).dump(), out);
}

moca_status moca_family_parse_json(const char *text, moca_family **out) {
    if (moca_status s = require(text && out, "null argument"); s) return s;
    return guarded([&] {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::exception &e) {
            moca::fail(moca::errc::parse, e.what());
        }
        if (!j.is_object() || !j.contains("d") || !j.contains("rules"))
            moca::fail(moca::errc::parse,
                       "family record needs \"d\" and \"rules\"");
        int d = j.at("d").get<int>();
        std::vector<uint64_t> ws =
            j.at("rules").get<std::vector<uint64_t>>();
        if (j.contains("k") && j.at("k").get<size_t>() != ws.size())
            moca::fail(moca::errc::parse,
                       "family record \"k\" disagrees with the rule list");
        *out = new moca_family{moca::MocaFamily::create(d, ws)};
    });
}

moca_status moca_family_expand(const moca_family *f, moca_oa **out) {
    if (moca_status s = require(f && out, "null argument"); s) return s;
    return guarded(
        [&] { *out = new moca_oa{moca::binary_expansion(f->f)}; });
}

moca_status moca_family_function(const moca_family *f, moca_function **out) {
    if (moca_status s = require(f && out, "null argument"); s) return s;
    return guarded(
        [&] { *out = new moca_function{moca::ci_function(f->f)}; });
}

/* ---------------- search ---------------- */

void moca_family_list_free(moca_family_list *l) { delete l; }

moca_status moca_family_list_size(const moca_family_list *l, size_t *out) {
    if (moca_status s = require(l && out, "null argument"); s) return s;
    *out = l->v.size();
    return MOCA_OK;
}

moca_status moca_family_list_get(const moca_family_list *l, size_t i,
                                 moca_family **out) {
    if (moca_status s = require(l && out, "null argument"); s) return s;
    if (i >= l->v.size())
        return set_error(MOCA_ERR_RANGE, "family index out of range");
    *out = new moca_family{l->v[i]};
    return MOCA_OK;
}

moca_status moca_enumerate_oca_pairs(int diameter, int jobs,
                                     moca_family_list **out) {
    if (moca_status s = require(out != nullptr, "null argument"); s)
        return s;
    return guarded([&] {
        auto pairs = moca::enumerate_oca_pairs(diameter, jobs);
        auto *l = new moca_family_list;
        l->d = diameter;
        l->v.reserve(pairs.size());
        for (const auto &p : pairs)
            l->v.push_back(
                moca::MocaFamily::trusted(diameter, {p[0], p[1]}));
        *out = l;
    });
}

moca_status moca_enumerate_moca(int diameter, int k, int jobs,
                                moca_family_list **out) {
    if (moca_status s = require(out != nullptr, "null argument"); s)
        return s;
    return guarded([&] {
        auto *l = new moca_family_list;
        l->d = diameter;
        l->v = moca::enumerate_moca(diameter, k, jobs);
        *out = l;
    });
}

moca_status
moca_family_list_reduce_up_to_complement(const moca_family_list *l,
                                         moca_family_list **out) {
    if (moca_status s = require(l && out, "null argument"); s) return s;
    return guarded([&] {
        auto *r = new moca_family_list;
        r->d = l->d;
        r->v = moca::reduce_up_to_complement(l->v, l->d);
        *out = r;
    });
}

moca_status moca_classify_families(int diameter, int k, int jobs,
                                   char **out_json) {
    if (moca_status s = require(out_json != nullptr, "null argument"); s)
        return s;
    return guarded([&] {
        moca::Classification c = moca::classify_families(diameter, k, jobs);
        json j;
        j["d"] = c.d;
        j["k"] = c.k;
        j["raw_unordered"] = c.raw_unordered;
        j["ordered"] = c.ordered;
        j["up_to_complement"] = c.up_to_complement;
        json fams = json::array();
        json reps = json::array();
        for (const moca::FamilyReport &r : c.families) {
            fams.push_back(json{{"rules", r.family.rules},
                                {"n", r.n},
                                {"weight", r.weight},
                                {"ci", r.ci},
                                {"nonlinearity", r.nl},
                                {"degree", r.degree},
                                {"degenerate", r.degenerate},
                                {"canonical", r.canonical}});
            if (r.canonical)
                reps.push_back(r.family.rules);
        }
        j["families"] = std::move(fams);
        j["class_representatives"] = std::move(reps);
        auto hist = [](const std::map<int, uint64_t> &h) {
            json o = json::object();
            for (const auto &[ci, count] : h)
                o[std::to_string(ci)] = count;
            return o;
        };
        j["ci_histogram_raw"] = hist(c.ci_histogram_raw);
        j["ci_histogram_up_to_complement"] =
            hist(c.ci_histogram_up_to_complement);
        if (out_json) {
            char *s = dup_string(j.dump());
            if (!s)
                moca::fail(moca::errc::invalid_argument, "allocation failed");
            *out_json = s;
        }
    });
}

} // extern "C"
