/* moca — mutually orthogonal cellular automata and correlation-immune
 * Boolean functions.
 *
 * C API for the moca core library. The library builds Latin squares from
 * bipermutive cellular automata, tests orthogonality two independent ways
 * (square superposition and de Bruijn path counting), assembles orthogonal
 * arrays from MOCA families, and derives correlation-immune Boolean
 * functions whose support is the family's binary expansion.
 *
 * Conventions used throughout:
 *   - A length-n bit vector x = (x_1,...,x_n) is encoded as the integer
 *     int(x) = sum x_j * 2^(n-j); x_1 is the most significant bit and the
 *     all-zeros vector maps to 0. Truth tables list f ascending by int(x).
 *   - A diameter-d local rule is a Boolean function of d inputs; its Wolfram
 *     number has bit int(x) equal to f(x), so the all-ones neighborhood is
 *     the most significant bit. Diameters 2..6 are supported (a d=6 table is
 *     exactly 64 bits).
 *   - Latin squares use symbols 1..N; orthogonal arrays use symbols 0..s-1.
 *
 * All functions return moca_status. On failure, moca_last_error() returns a
 * thread-local human-readable message describing the most recent error.
 * Out-parameters are written only on MOCA_OK. Every handle created by the
 * library is released with the matching *_free function; freeing NULL is a
 * no-op.
 */

#ifndef MOCA_H
#define MOCA_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define MOCA_API __declspec(dllexport)
#else
#define MOCA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum moca_status {
    MOCA_OK = 0,
    MOCA_ERR_INVALID_ARGUMENT = 1,
    MOCA_ERR_DIMENSION = 2,      /* mismatched or out-of-bounds sizes */
    MOCA_ERR_RANGE = 3,          /* numeric argument outside its domain */
    MOCA_ERR_PRECONDITION = 4,   /* documented precondition violated */
    MOCA_ERR_VERIFICATION = 5,   /* a verified property failed to hold */
    MOCA_ERR_PARSE = 6,          /* malformed textual input */
    MOCA_ERR_NOT_AN_EDGE = 7,    /* vertex pair is not a de Bruijn edge */
    MOCA_ERR_UNSUPPORTED = 8,    /* outside supported parameter bounds */
    MOCA_ERR_BUFFER = 9          /* caller buffer too small */
} moca_status;

MOCA_API const char *moca_status_name(moca_status s);

/* Thread-local message for the last failure on this thread. Never NULL. */
MOCA_API const char *moca_last_error(void);

MOCA_API const char *moca_version(void);

/* Strings returned through char** out-parameters are heap-allocated and
 * must be released with moca_string_free. */
MOCA_API void moca_string_free(char *s);

#define MOCA_MAX_DIAMETER 6
#define MOCA_MAX_VARIABLES 16

/* ------------------------------------------------------------------ */
/* Local rules and the no-boundary cellular automaton                  */
/* ------------------------------------------------------------------ */

typedef struct moca_rule moca_rule;

/* Build a rule from its Wolfram number. 2 <= d <= 6; for d < 6 the number
 * must be < 2^(2^d). */
MOCA_API moca_status moca_rule_from_wolfram(uint64_t wolfram, int diameter,
                                            moca_rule **out);
MOCA_API void moca_rule_free(moca_rule *r);

MOCA_API moca_status moca_rule_wolfram(const moca_rule *r, uint64_t *out);
MOCA_API moca_status moca_rule_diameter(const moca_rule *r, int *out);

/* Rule value on one neighborhood, given as int(x_1..x_d). */
MOCA_API moca_status moca_rule_eval(const moca_rule *r, uint32_t neighborhood,
                                    int *out);

/* Truth table as bytes 0/1, ascending by int(x); buffer holds 2^d bytes. */
MOCA_API moca_status moca_rule_table(const moca_rule *r, uint8_t *buf,
                                     size_t cap);

/* True iff f(x) = x_1 xor phi(x_2..x_{d-1}) xor x_d for some phi, i.e. the
 * output flips whenever x_1 alone or x_d alone flips. */
MOCA_API moca_status moca_rule_is_bipermutive(const moca_rule *r, int *out);

/* Textual form "d=3 w=90" and its parser. */
MOCA_API moca_status moca_rule_format(const moca_rule *r, char **out);
MOCA_API moca_status moca_rule_parse(const char *text, moca_rule **out);

/* All bipermutive rules of a diameter (3 <= d <= 6), ascending by Wolfram
 * number. Two-call pattern: pass buf=NULL to get the count (2^(2^(d-2))). */
MOCA_API moca_status moca_enumerate_bipermutive(int diameter, uint64_t *buf,
                                                size_t cap, size_t *count);

/* Apply the rule to every window of an input of n >= d cells; the output
 * has n-d+1 cells, no wraparound. out must hold n-d+1 bytes. */
MOCA_API moca_status moca_rule_apply(const moca_rule *r, const uint8_t *input,
                                     size_t n, uint8_t *out, size_t *out_len);

/* ------------------------------------------------------------------ */
/* Boolean functions                                                   */
/* ------------------------------------------------------------------ */

typedef struct moca_function moca_function;

/* f(x)=1 exactly for the listed rows (each row < 2^n, no duplicates);
 * 1 <= n <= 16. */
MOCA_API moca_status moca_function_from_support(int n, const uint64_t *rows,
                                                size_t nrows,
                                                moca_function **out);

/* Truth table given as bytes 0/1, ascending by int(x); 2^n bytes. */
MOCA_API moca_status moca_function_from_table(int n, const uint8_t *table,
                                              moca_function **out);
MOCA_API void moca_function_free(moca_function *f);

MOCA_API moca_status moca_function_n(const moca_function *f, int *out);
MOCA_API moca_status moca_function_weight(const moca_function *f,
                                          uint64_t *out);
MOCA_API moca_status moca_function_bit(const moca_function *f, uint64_t x,
                                       int *out);

/* Serialization. Binary: 2^n characters '0'/'1'. Hex: 2^n/4 digits, 4 table
 * bits per digit, table index 0 as the most significant bit of the first
 * digit (n >= 2). Parsers infer n from the length; round-trips are
 * bit-exact. */
MOCA_API moca_status moca_function_to_binary(const moca_function *f,
                                             char **out);
MOCA_API moca_status moca_function_to_hex(const moca_function *f, char **out);
MOCA_API moca_status moca_function_parse_binary(const char *text,
                                                moca_function **out);
MOCA_API moca_status moca_function_parse_hex(const char *text,
                                             moca_function **out);

/* Walsh transform W(a) = sum_x (-1)^(f(x) xor a.x), one value per a
 * ascending by int(a); buffer holds 2^n int32 values. The plain variant is
 * the fast butterfly transform; the naive variant is the literal reference
 * double loop. They agree bit-exactly. */
MOCA_API moca_status moca_function_walsh(const moca_function *f, int32_t *buf,
                                         size_t cap);
MOCA_API moca_status moca_function_walsh_naive(const moca_function *f,
                                               int32_t *buf, size_t cap);

/* 2^(n-1) - max_a |W(a)| / 2. */
MOCA_API moca_status moca_function_nonlinearity(const moca_function *f,
                                                uint32_t *out);

/* Algebraic normal form coefficients a_u via the binary Moebius transform,
 * one byte 0/1 per u ascending by int(u); buffer holds 2^n bytes. */
MOCA_API moca_status moca_function_anf(const moca_function *f, uint8_t *buf,
                                       size_t cap);

/* max Hamming weight of u with a_u != 0; 0 for the zero function. */
MOCA_API moca_status moca_function_degree(const moca_function *f, int *out);

/* Largest t such that W(a)=0 whenever 1 <= wt(a) <= t; n for constants. */
MOCA_API moca_status moca_function_ci_order(const moca_function *f, int *out);

/* ------------------------------------------------------------------ */
/* Latin squares                                                       */
/* ------------------------------------------------------------------ */

typedef struct moca_square moca_square;

/* Index bijection between length-b bit vectors and {1,...,2^b}:
 * int(v)+1 and its inverse. bits are bytes 0/1, v[0] = x_1. */
MOCA_API moca_status moca_index_bijection(const uint8_t *bits, size_t b,
                                          uint32_t *out);
MOCA_API moca_status moca_index_bijection_inverse(uint32_t index, size_t b,
                                                  uint8_t *out_bits);

/* Latin square of order 2^(d-1) from a bipermutive rule: the CA map F on
 * 2(d-1) cells, rows indexed by the left half, columns by the right half,
 * entries index_bijection(F(x)). */
MOCA_API moca_status moca_square_from_rule(const moca_rule *r,
                                           moca_square **out);
MOCA_API void moca_square_free(moca_square *s);

MOCA_API moca_status moca_square_order(const moca_square *s, int *out);
/* row, col in 1..N; entry in 1..N. */
MOCA_API moca_status moca_square_entry(const moca_square *s, int row, int col,
                                       int *out);
/* N lines of N space-separated entries. */
MOCA_API moca_status moca_square_format(const moca_square *s, char **out);

/* True iff the N^2 superposed entry pairs are all distinct. */
MOCA_API moca_status moca_squares_orthogonal(const moca_square *a,
                                             const moca_square *b, int *out);

/* ------------------------------------------------------------------ */
/* Orthogonal arrays                                                   */
/* ------------------------------------------------------------------ */

typedef struct moca_oa moca_oa;

/* Wrap an N x k matrix over {0..s-1} (row-major) and verify its maximal
 * strength by exact counting over every column subset. */
MOCA_API moca_status moca_oa_from_rows(size_t runs, size_t factors,
                                       int levels, const int32_t *entries,
                                       moca_oa **out);
MOCA_API void moca_oa_free(moca_oa *a);

MOCA_API moca_status moca_oa_runs(const moca_oa *a, size_t *out);
MOCA_API moca_status moca_oa_factors(const moca_oa *a, size_t *out);
MOCA_API moca_status moca_oa_levels(const moca_oa *a, int *out);
/* Verified maximal strength t, and index lambda = N / s^t. */
MOCA_API moca_status moca_oa_strength(const moca_oa *a, int *out);
MOCA_API moca_status moca_oa_index(const moca_oa *a, uint64_t *out);
MOCA_API moca_status moca_oa_row(const moca_oa *a, size_t i, int32_t *buf,
                                 size_t cap);

/* Standalone strength of an arbitrary matrix (0 if single columns are
 * already unbalanced). */
MOCA_API moca_status moca_strength_of(const int32_t *entries, size_t runs,
                                      size_t factors, int levels, int *out);

/* Text format: header "N k s t", then N lines of k space-separated
 * symbols. The parser recomputes the strength and rejects a header whose t
 * is not the verified maximum. */
MOCA_API moca_status moca_oa_format(const moca_oa *a, char **out);
MOCA_API moca_status moca_oa_parse(const char *text, moca_oa **out);

/* Stack k pairwise-orthogonal order-N squares into an OA(N^2, k, N, 2) of
 * index 1: one row per cell in row-major order, symbols shifted to 0..N-1.
 * k >= 2; orthogonality is re-verified. */
MOCA_API moca_status moca_mols_to_oa(const moca_square *const *squares,
                                     size_t k, moca_oa **out);

/* Strength-preserving row removal: repeatedly delete groups of 2^target_t
 * rows whose own t-column projections are index-1 balanced, until the array
 * reaches index 1, no such group exists, or the search budget (backtracking
 * node count) is exhausted. The result never has more rows than the input
 * and is re-verified to strength >= target_t before being returned. */
MOCA_API moca_status moca_oa_expurgate(const moca_oa *a, int target_t,
                                       uint64_t budget, moca_oa **out);

/* ------------------------------------------------------------------ */
/* Coupled de Bruijn graph labelings                                   */
/* ------------------------------------------------------------------ */

typedef struct moca_labeling moca_labeling;

/* Fusion of overlapping b-bit vertices u,v (u's last b-1 bits = v's first
 * b-1 bits): u extended by v's last bit, a (b+1)-bit word. */
MOCA_API moca_status moca_fusion(uint32_t u, uint32_t v, int b,
                                 uint32_t *out);

/* Label every edge of the binary de Bruijn graph on 2^b vertices
 * (b = d-1) with the tuple of the k rules' values on the edge's fusion. */
MOCA_API moca_status moca_labeling_build(const moca_rule *const *rules,
                                         size_t k, moca_labeling **out);
MOCA_API void moca_labeling_free(moca_labeling *l);

MOCA_API moca_status moca_labeling_word_length(const moca_labeling *l,
                                               int *out);
MOCA_API moca_status moca_labeling_rule_count(const moca_labeling *l,
                                              size_t *out);

/* One line per edge: "uu -> vv : l_1,...,l_k", vertices as b-bit binary
 * words, edges ascending by (u, last bit of v). */
MOCA_API moca_status moca_labeling_format(const moca_labeling *l, char **out);

/* Count directed paths of b edges whose per-rule label sequences match the
 * patterns: k strings of length b over '0','1','*' ('*' matches either). */
MOCA_API moca_status moca_labeling_count_paths(const moca_labeling *l,
                                               const char *const *patterns,
                                               size_t k, uint64_t *out);

/* Path-counting orthogonality test: every fully-fixed pattern pair matches
 * exactly one path. Both rules must be bipermutive, same diameter. */
MOCA_API moca_status moca_labelings_orthogonal(const moca_rule *f,
                                               const moca_rule *g, int *out);

/* ------------------------------------------------------------------ */
/* MOCA families                                                       */
/* ------------------------------------------------------------------ */

typedef struct moca_family moca_family;

/* k distinct bipermutive rules of one diameter, stored sorted; pairwise
 * orthogonality is verified on construction. */
MOCA_API moca_status moca_family_create(int diameter,
                                        const uint64_t *wolframs, size_t k,
                                        moca_family **out);
MOCA_API void moca_family_free(moca_family *f);

MOCA_API moca_status moca_family_diameter(const moca_family *f, int *out);
MOCA_API moca_status moca_family_size(const moca_family *f, size_t *out);
MOCA_API moca_status moca_family_rule(const moca_family *f, size_t i,
                                      uint64_t *out);

/* One-line JSON record {"d": 5, "k": 3, "rules": [w1, w2, w3]} and its
 * parser (which re-verifies orthogonality). */
MOCA_API moca_status moca_family_format_json(const moca_family *f,
                                             char **out);
MOCA_API moca_status moca_family_parse_json(const char *text,
                                            moca_family **out);

/* Binary expansion: N = 2^(2(d-1)) rows, n = k(d-1) binary columns; the row
 * for input (x,y), ascending by int, juxtaposes the k CA outputs. Verified
 * to strength >= 2 for k >= 2. */
MOCA_API moca_status moca_family_expand(const moca_family *f, moca_oa **out);

/* The Boolean function of n = k(d-1) variables whose support is the row set
 * of the binary expansion; weight 2^(2(d-1)). */
MOCA_API moca_status moca_family_function(const moca_family *f,
                                          moca_function **out);

/* ------------------------------------------------------------------ */
/* Exhaustive search                                                   */
/* ------------------------------------------------------------------ */

typedef struct moca_family_list moca_family_list;

MOCA_API void moca_family_list_free(moca_family_list *l);
MOCA_API moca_status moca_family_list_size(const moca_family_list *l,
                                           size_t *out);
/* Returns a fresh handle the caller frees. */
MOCA_API moca_status moca_family_list_get(const moca_family_list *l, size_t i,
                                          moca_family **out);

/* All unordered pairs {f,g} of distinct bipermutive diameter-d rules whose
 * squares are orthogonal, sorted by (min,max) Wolfram number; deterministic
 * for every jobs value (jobs <= 0 means one worker). */
MOCA_API moca_status moca_enumerate_oca_pairs(int diameter, int jobs,
                                              moca_family_list **out);

/* All unordered k-sets of bipermutive rules that are pairwise orthogonal,
 * grown by extending (k-1)-sets with rules of larger Wolfram number; sorted
 * ascending by rule tuple; deterministic. */
MOCA_API moca_status moca_enumerate_moca(int diameter, int k, int jobs,
                                         moca_family_list **out);

/* Quotient a family list by per-member rule complementation (complementing
 * any member of a family yields another family; the action is free). Each
 * orbit is represented by its unique all-even-Wolfram member; the result is
 * sorted and deduplicated. */
MOCA_API moca_status
moca_family_list_reduce_up_to_complement(const moca_family_list *l,
                                         moca_family_list **out);

/* Classification report for enumerate_moca(diameter, k) as a JSON document:
 * counts (raw unordered, ordered, up to complement), per-family properties
 * (n, weight, correlation-immunity order, nonlinearity, degree, degenerate
 * flag for constant functions), and CI histograms under both countings. */
MOCA_API moca_status moca_classify_families(int diameter, int k, int jobs,
                                            char **out_json);

#ifdef __cplusplus
}
#endif

#endif /* MOCA_H */
