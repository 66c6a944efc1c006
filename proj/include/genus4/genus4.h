#ifndef GENUS4_H
#define GENUS4_H

/*
 * C interface to the genus-4 characteristic-2 toolkit.
 *
 * Every call returns a g4_status. On failure the message is available from g4_last_error()
 * (per thread, valid until the next failing call on that thread). Strings returned through
 * char** out-parameters are heap allocated and must be released with g4_string_free().
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum g4_status {
    G4_OK = 0,
    G4_ERR_PARSE = 1,
    G4_ERR_DOMAIN = 2,
    G4_ERR_CONSISTENCY = 3,
    G4_ERR_STATE = 4,
    G4_ERR_INVALID_ARGUMENT = 5,
    G4_ERR_IO = 6,
    G4_ERR_INTERNAL = 7
} g4_status;

typedef struct g4_curve g4_curve;
typedef struct g4_census g4_census;

const char* g4_version(void);
const char* g4_last_error(void);
const char* g4_status_name(g4_status s);
void g4_string_free(char* s);

/* Curves, in the text encoding ("ns;c=0x1d0c", "cone;c=0x420c", "hyp;h=0x01;f=0x220"). */
g4_status g4_curve_parse(const char* text, g4_curve** out);
void g4_curve_free(g4_curve* c);
g4_status g4_curve_encode(const g4_curve* c, char** out);
/* witness may be NULL; otherwise receives a description or NULL when no point was located. */
g4_status g4_curve_is_smooth(const g4_curve* c, int* smooth, char** witness);
g4_status g4_curve_count_points(const g4_curve* c, unsigned n, uint64_t* out);
/* Census record of the curve as one JSON object. */
g4_status g4_curve_classify_json(const g4_curve* c, char** json);
g4_status g4_curve_hasse_witt_json(const g4_curve* c, char** json);
/* F2 only. */
g4_status g4_curve_aut_order(const g4_curve* c, uint64_t* aut, uint64_t* jacobian_aut);

/* counts: comma separated N_1..N_4; q: decimal. */
g4_status g4_zeta_json(const char* counts, const char* q, char** json);
/* mu: comma separated parts, e.g. "4,3,1" or "[4,3,1]"; g = 0 takes g = mu_1. */
g4_status g4_dieudonne_json(const char* mu, unsigned g, char** json);

/* kinds: comma separated subset of "ns,cone,hyp". */
g4_status g4_census_run(const char* kinds, unsigned workers, g4_census** out);
g4_status g4_census_load(const char* jsonl_path, g4_census** out);
/* csv_path may be NULL. */
g4_status g4_census_save(const g4_census* c, const char* jsonl_path, const char* csv_path);
size_t g4_census_size(const g4_census* c);
void g4_census_free(g4_census* c);
/* weil: comma separated coefficients, constant term first; NULL selects class h. */
g4_status g4_census_stack_count_json(g4_census* c, const char* weil, const char* q, char** json);
g4_status g4_census_verify_json(const g4_census* c, int* all_passed, char** json);
/* Requires g4_census_stack_count_json for the same class first. weil NULL selects class h. */
g4_status g4_census_discrepancy(const g4_census* c, const char* weil, char** text);

#ifdef __cplusplus
}
#endif

#endif
