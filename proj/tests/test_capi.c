/* End-to-end exercise of the shared-library interface from plain C. */

#include <stdint.h>
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include <moca/moca.h>

static int failures = 0;

#define CHECK(cond)                                                          \
    do {                                                                     \
        if (!(cond)) {                                                       \
            fprintf(stderr, "FAIL %s:%d: %s\n", __FILE__, __LINE__, #cond);  \
            ++failures;                                                      \
        }                                                                    \
    } while (0)

static void rules_and_errors(void) {
    moca_rule *r = NULL;
    uint64_t w = 0;
    int d = 0, bit = 0, bip = 0;
    char *text = NULL;
    uint8_t table[8];
    uint8_t image[4];
    size_t image_len = 0;
    const uint8_t cells[6] = {0, 1, 0, 1, 1, 0};

    CHECK(moca_rule_from_wolfram(90, 3, &r) == MOCA_OK);
    CHECK(moca_rule_wolfram(r, &w) == MOCA_OK && w == 90);
    CHECK(moca_rule_diameter(r, &d) == MOCA_OK && d == 3);
    CHECK(moca_rule_eval(r, 4, &bit) == MOCA_OK && bit == 1);
    CHECK(moca_rule_is_bipermutive(r, &bip) == MOCA_OK && bip == 1);
    CHECK(moca_rule_table(r, table, 8) == MOCA_OK);
    CHECK(table[0] == 0 && table[1] == 1 && table[2] == 0 && table[3] == 1);
    CHECK(moca_rule_format(r, &text) == MOCA_OK);
    CHECK(strcmp(text, "d=3 w=90") == 0);
    moca_string_free(text);

    CHECK(moca_rule_apply(r, cells, 6, image, &image_len) == MOCA_OK);
    CHECK(image_len == 4);
    CHECK(image[0] == 0 && image[1] == 0 && image[2] == 1 && image[3] == 1);

    CHECK(moca_rule_table(r, table, 4) == MOCA_ERR_BUFFER);
    CHECK(moca_rule_eval(r, 8, &bit) == MOCA_ERR_RANGE);
    CHECK(moca_rule_from_wolfram(256, 3, &r) == MOCA_ERR_RANGE);
    CHECK(strlen(moca_last_error()) > 0);
    CHECK(moca_rule_from_wolfram(90, 3, NULL) == MOCA_ERR_INVALID_ARGUMENT);
    moca_rule_free(r);

    {
        moca_rule *parsed = NULL;
        CHECK(moca_rule_parse("d=4 w=21930", &parsed) == MOCA_OK);
        CHECK(moca_rule_diameter(parsed, &d) == MOCA_OK && d == 4);
        moca_rule_free(parsed);
        CHECK(moca_rule_parse("nonsense", &parsed) == MOCA_ERR_PARSE);
    }

    {
        size_t count = 0;
        uint64_t buf[4];
        CHECK(moca_enumerate_bipermutive(3, NULL, 0, &count) == MOCA_OK);
        CHECK(count == 4);
        CHECK(moca_enumerate_bipermutive(3, buf, 4, &count) == MOCA_OK);
        CHECK(buf[0] == 90 && buf[1] == 105 && buf[2] == 150 &&
              buf[3] == 165);
        CHECK(moca_enumerate_bipermutive(3, buf, 2, &count) ==
              MOCA_ERR_BUFFER);
    }
}

static void functions(void) {
    moca_function *f = NULL;
    int n = 0, ci = 0, degree = 0, bit = 0;
    uint64_t weight = 0;
    uint32_t nl = 0;
    int32_t walsh[16];
    int32_t walsh_slow[16];
    uint8_t coeffs[16];
    char *text = NULL;

    CHECK(moca_function_parse_hex("111e", &f) == MOCA_OK);
    CHECK(moca_function_n(f, &n) == MOCA_OK && n == 4);
    CHECK(moca_function_weight(f, &weight) == MOCA_OK && weight == 6);
    CHECK(moca_function_bit(f, 3, &bit) == MOCA_OK && bit == 1);
    CHECK(moca_function_bit(f, 0, &bit) == MOCA_OK && bit == 0);
    CHECK(moca_function_nonlinearity(f, &nl) == MOCA_OK && nl == 6);
    CHECK(moca_function_ci_order(f, &ci) == MOCA_OK && ci == 0);
    CHECK(moca_function_degree(f, &degree) == MOCA_OK && degree == 2);

    CHECK(moca_function_walsh(f, walsh, 16) == MOCA_OK);
    CHECK(moca_function_walsh_naive(f, walsh_slow, 16) == MOCA_OK);
    CHECK(memcmp(walsh, walsh_slow, sizeof(walsh)) == 0);
    CHECK(walsh[0] == 16 - 2 * 6);

    CHECK(moca_function_anf(f, coeffs, 16) == MOCA_OK);

    CHECK(moca_function_to_binary(f, &text) == MOCA_OK);
    CHECK(strcmp(text, "0001000100011110") == 0);
    moca_string_free(text);
    CHECK(moca_function_to_hex(f, &text) == MOCA_OK);
    CHECK(strcmp(text, "111e") == 0);
    moca_string_free(text);
    moca_function_free(f);

    CHECK(moca_function_parse_hex("xyz", &f) == MOCA_ERR_PARSE);
    CHECK(moca_function_parse_binary("01", &f) == MOCA_OK);
    moca_function_free(f);

    {
        const uint64_t rows[2] = {0, 3};
        CHECK(moca_function_from_support(2, rows, 2, &f) == MOCA_OK);
        CHECK(moca_function_weight(f, &weight) == MOCA_OK && weight == 2);
        moca_function_free(f);
        CHECK(moca_function_from_support(2, rows, 2, NULL) ==
              MOCA_ERR_INVALID_ARGUMENT);
    }
}

static void squares_and_arrays(void) {
    moca_rule *r90 = NULL, *r150 = NULL, *r165 = NULL;
    moca_square *s90 = NULL, *s150 = NULL, *s165 = NULL;
    int order = 0, entry = 0, orth = 0;
    uint32_t idx = 0;
    uint8_t bits[2] = {1, 0};

    CHECK(moca_index_bijection(bits, 2, &idx) == MOCA_OK && idx == 3);
    CHECK(moca_index_bijection_inverse(3, 2, bits) == MOCA_OK);
    CHECK(bits[0] == 1 && bits[1] == 0);

    CHECK(moca_rule_from_wolfram(90, 3, &r90) == MOCA_OK);
    CHECK(moca_rule_from_wolfram(150, 3, &r150) == MOCA_OK);
    CHECK(moca_rule_from_wolfram(165, 3, &r165) == MOCA_OK);
    CHECK(moca_square_from_rule(r90, &s90) == MOCA_OK);
    CHECK(moca_square_from_rule(r150, &s150) == MOCA_OK);
    CHECK(moca_square_from_rule(r165, &s165) == MOCA_OK);
    CHECK(moca_square_order(s90, &order) == MOCA_OK && order == 4);
    CHECK(moca_square_entry(s90, 2, 3, &entry) == MOCA_OK && entry == 4);
    CHECK(moca_square_entry(s90, 0, 1, &entry) == MOCA_ERR_RANGE);
    CHECK(moca_squares_orthogonal(s90, s150, &orth) == MOCA_OK &&
          orth == 1);
    CHECK(moca_squares_orthogonal(s90, s165, &orth) == MOCA_OK &&
          orth == 0);

    {
        char *text = NULL;
        CHECK(moca_square_format(s90, &text) == MOCA_OK);
        CHECK(strncmp(text, "1 2 3 4\n", 8) == 0);
        moca_string_free(text);
    }

    {
        const moca_square *stack[2];
        moca_oa *oa = NULL;
        size_t runs = 0, factors = 0;
        int levels = 0, strength = 0;
        uint64_t index = 0;
        stack[0] = s90;
        stack[1] = s150;
        CHECK(moca_mols_to_oa(stack, 2, &oa) == MOCA_OK);
        CHECK(moca_oa_runs(oa, &runs) == MOCA_OK && runs == 16);
        CHECK(moca_oa_factors(oa, &factors) == MOCA_OK && factors == 2);
        CHECK(moca_oa_levels(oa, &levels) == MOCA_OK && levels == 4);
        CHECK(moca_oa_strength(oa, &strength) == MOCA_OK && strength == 2);
        CHECK(moca_oa_index(oa, &index) == MOCA_OK && index == 1);
        moca_oa_free(oa);

        stack[1] = s165;
        CHECK(moca_mols_to_oa(stack, 2, &oa) == MOCA_ERR_PRECONDITION);
    }

    {
        const int32_t entries[8] = {0, 0, 0, 1, 1, 0, 1, 1};
        moca_oa *oa = NULL;
        moca_oa *parsed = NULL;
        char *text = NULL;
        int strength = 0;
        int32_t row[2];
        CHECK(moca_strength_of(entries, 4, 2, 2, &strength) == MOCA_OK);
        CHECK(strength == 2);
        CHECK(moca_oa_from_rows(4, 2, 2, entries, &oa) == MOCA_OK);
        CHECK(moca_oa_row(oa, 2, row, 2) == MOCA_OK);
        CHECK(row[0] == 1 && row[1] == 0);
        CHECK(moca_oa_format(oa, &text) == MOCA_OK);
        CHECK(strcmp(text, "4 2 2 2\n0 0\n0 1\n1 0\n1 1\n") == 0);
        CHECK(moca_oa_parse(text, &parsed) == MOCA_OK);
        moca_oa_free(parsed);
        moca_string_free(text);
        CHECK(moca_oa_parse("4 2 2 1\n0 0\n0 1\n1 0\n1 1\n", &parsed) ==
              MOCA_ERR_VERIFICATION);
        moca_oa_free(oa);
    }

    moca_square_free(s90);
    moca_square_free(s150);
    moca_square_free(s165);
    moca_rule_free(r90);
    moca_rule_free(r150);
    moca_rule_free(r165);
}

static void labelings(void) {
    moca_rule *r90 = NULL, *r150 = NULL;
    const moca_rule *pair[2];
    moca_labeling *lab = NULL;
    uint32_t fused = 0;
    int b = 0, orth = 0;
    size_t k = 0;
    uint64_t count = 0;
    char *text = NULL;
    const char *fixed[2] = {"01", "10"};
    const char *wild[2] = {"**", "**"};

    CHECK(moca_fusion(3, 2, 2, &fused) == MOCA_OK && fused == 6);
    CHECK(moca_fusion(0, 3, 2, &fused) == MOCA_ERR_NOT_AN_EDGE);

    CHECK(moca_rule_from_wolfram(90, 3, &r90) == MOCA_OK);
    CHECK(moca_rule_from_wolfram(150, 3, &r150) == MOCA_OK);
    pair[0] = r90;
    pair[1] = r150;
    CHECK(moca_labeling_build(pair, 2, &lab) == MOCA_OK);
    CHECK(moca_labeling_word_length(lab, &b) == MOCA_OK && b == 2);
    CHECK(moca_labeling_rule_count(lab, &k) == MOCA_OK && k == 2);
    CHECK(moca_labeling_format(lab, &text) == MOCA_OK);
    CHECK(strncmp(text, "00 -> 00 : 0,0\n", 15) == 0);
    moca_string_free(text);

    CHECK(moca_labeling_count_paths(lab, fixed, 2, &count) == MOCA_OK);
    CHECK(count == 1);
    CHECK(moca_labeling_count_paths(lab, wild, 2, &count) == MOCA_OK);
    CHECK(count == 16);

    CHECK(moca_labelings_orthogonal(r90, r150, &orth) == MOCA_OK &&
          orth == 1);
    CHECK(moca_labelings_orthogonal(r90, r90, &orth) == MOCA_OK &&
          orth == 0);

    moca_labeling_free(lab);
    moca_rule_free(r90);
    moca_rule_free(r150);
}

static void families(void) {
    const uint64_t triple[3] = {21930, 39270, 42330};
    const uint64_t bad[2] = {90, 165};
    moca_family *fam = NULL;
    moca_family *parsed = NULL;
    moca_oa *oa = NULL;
    moca_function *f = NULL;
    char *text = NULL;
    int d = 0, ci = 0, n = 0;
    size_t k = 0, runs = 0;
    uint64_t w = 0, weight = 0;

    CHECK(moca_family_create(4, triple, 3, &fam) == MOCA_OK);
    CHECK(moca_family_diameter(fam, &d) == MOCA_OK && d == 4);
    CHECK(moca_family_size(fam, &k) == MOCA_OK && k == 3);
    CHECK(moca_family_rule(fam, 0, &w) == MOCA_OK && w == 21930);
    CHECK(moca_family_rule(fam, 3, &w) == MOCA_ERR_RANGE);

    CHECK(moca_family_format_json(fam, &text) == MOCA_OK);
    CHECK(strstr(text, "\"d\":4") != NULL);
    CHECK(strstr(text, "21930") != NULL);
    CHECK(moca_family_parse_json(text, &parsed) == MOCA_OK);
    moca_string_free(text);
    {
        uint64_t w2 = 0;
        CHECK(moca_family_rule(parsed, 2, &w2) == MOCA_OK && w2 == 42330);
    }
    moca_family_free(parsed);
    CHECK(moca_family_parse_json("{\"d\":3}", &parsed) == MOCA_ERR_PARSE);
    CHECK(moca_family_parse_json("{\"d\":3,\"rules\":[90,165]}", &parsed) ==
          MOCA_ERR_PRECONDITION);

    CHECK(moca_family_expand(fam, &oa) == MOCA_OK);
    CHECK(moca_oa_runs(oa, &runs) == MOCA_OK && runs == 64);
    moca_oa_free(oa);

    CHECK(moca_family_function(fam, &f) == MOCA_OK);
    CHECK(moca_function_n(f, &n) == MOCA_OK && n == 9);
    CHECK(moca_function_weight(f, &weight) == MOCA_OK && weight == 64);
    CHECK(moca_function_ci_order(f, &ci) == MOCA_OK && ci == 3);
    moca_function_free(f);
    moca_family_free(fam);

    CHECK(moca_family_create(3, bad, 2, &fam) == MOCA_ERR_PRECONDITION);
}

static void searches(void) {
    moca_family_list *list = NULL;
    moca_family_list *reduced = NULL;
    moca_family *fam = NULL;
    size_t count = 0;
    char *text = NULL;

    CHECK(moca_enumerate_oca_pairs(3, 1, &list) == MOCA_OK);
    CHECK(moca_family_list_size(list, &count) == MOCA_OK && count == 4);
    CHECK(moca_family_list_get(list, 0, &fam) == MOCA_OK);
    {
        uint64_t w = 0;
        CHECK(moca_family_rule(fam, 0, &w) == MOCA_OK && w == 90);
        CHECK(moca_family_rule(fam, 1, &w) == MOCA_OK && w == 105);
    }
    moca_family_free(fam);
    CHECK(moca_family_list_get(list, 4, &fam) == MOCA_ERR_RANGE);
    moca_family_list_free(list);

    CHECK(moca_enumerate_moca(4, 3, 2, &list) == MOCA_OK);
    CHECK(moca_family_list_size(list, &count) == MOCA_OK && count == 16);
    CHECK(moca_family_list_reduce_up_to_complement(list, &reduced) ==
          MOCA_OK);
    CHECK(moca_family_list_size(reduced, &count) == MOCA_OK && count == 2);
    moca_family_list_free(reduced);
    moca_family_list_free(list);

    CHECK(moca_classify_families(4, 3, 1, &text) == MOCA_OK);
    CHECK(strstr(text, "\"raw_unordered\":16") != NULL);
    CHECK(strstr(text, "\"up_to_complement\":2") != NULL);
    CHECK(strstr(text, "\"ordered\":96") != NULL);
    moca_string_free(text);
}

int main(void) {
    CHECK(strcmp(moca_status_name(MOCA_OK), "ok") == 0);
    CHECK(strcmp(moca_status_name(MOCA_ERR_PARSE), "parse-error") == 0);
    CHECK(moca_version() != NULL);

    rules_and_errors();
    functions();
    squares_and_arrays();
    labelings();
    families();
    searches();

    if (failures) {
        fprintf(stderr, "%d check(s) failed\n", failures);
        return 1;
    }
    printf("all C interface checks passed\n");
    return 0;
}
