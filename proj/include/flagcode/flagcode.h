#ifndef FLAGCODE_FLAGCODE_H
#define FLAGCODE_FLAGCODE_H

/* C interface to the flag code library. Every function returning int
 * returns FLC_OK or one of the FLC_E_* codes; the message of the most recent
 * failure on the calling thread is available from flc_last_error(). Strings
 * handed out through char** must be released with flc_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define FLC_API __declspec(dllexport)
#else
#define FLC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

enum {
    FLC_OK = 0,
    FLC_E_INVALID_ARGUMENT = 1,
    FLC_E_NON_PRIME_P = 2,
    FLC_E_MODULUS_NOT_PRIMITIVE = 3,
    FLC_E_DIVISION_BY_ZERO = 4,
    FLC_E_NOT_PRIMITIVE = 5,
    FLC_E_INDEX_OUT_OF_RANGE = 6,
    FLC_E_DIMENSION_MISMATCH = 7,
    FLC_E_AMBIENT_MISMATCH = 8,
    FLC_E_TOO_LARGE = 9,
    FLC_E_TYPE_MISMATCH = 10,
    FLC_E_CODE_TOO_SMALL = 11,
    FLC_E_NOT_DIVISOR = 12,
    FLC_E_NOT_PLANAR = 13,
    FLC_E_RANK_DEFICIENT = 14,
    FLC_E_TYPE_NOT_SUBSET = 15,
    FLC_E_SHAPE_MISMATCH = 16,
    FLC_E_NOT_DISJOINT = 17,
    FLC_E_PARSE = 18,
    FLC_E_FIELD_MISMATCH = 19,
    FLC_E_DUPLICATE_FLAG = 20,
    FLC_E_IO = 21,
    FLC_E_NULL_ARGUMENT = 98,
    FLC_E_INTERNAL = 99
};

typedef struct flc_code flc_code;

FLC_API const char* flc_last_error(void);
FLC_API const char* flc_status_name(int status);
FLC_API void flc_string_free(char* s);

/* Construction and I/O */
FLC_API int flc_construct_full(uint32_t p, uint32_t m, size_t k, flc_code** out);
/* type is a comma-separated list such as "1,2,3" */
FLC_API int flc_construct_divisor(uint32_t p, uint32_t m, size_t n, const char* type, flc_code** out);
FLC_API int flc_puncture(const flc_code* code, const char* type, flc_code** out);
FLC_API int flc_parse(const char* text, flc_code** out);
FLC_API int flc_load(const char* path, flc_code** out);
FLC_API int flc_serialize(const flc_code* code, char** out);
FLC_API int flc_save(const flc_code* code, const char* path);
FLC_API void flc_free(flc_code* code);

/* Inspection */
FLC_API size_t flc_size(const flc_code* code);
FLC_API size_t flc_ambient(const flc_code* code);
FLC_API int flc_field(const flc_code* code, uint32_t* p, uint32_t* m);
FLC_API int flc_type_string(const flc_code* code, char** out);
FLC_API const char* flc_provenance(const flc_code* code);
FLC_API const char* flc_provenance_detail(const flc_code* code);

typedef struct {
    size_t size;
    size_t min_distance;
    size_t bound;
    int optimum;
    int disjoint;
    int characterization;
    /* set for full flag codes on an even-dimensional space */
    int construction_checked;
    int construction_ok;
} flc_verify_report;

FLC_API int flc_verify(const flc_code* code, flc_verify_report* out);

/* Simulation over the erasure channel */
typedef struct {
    size_t trials;
    uint64_t seed;
    double erasure_prob;
    double blackout_prob;
    const size_t* packets; /* NULL for a_i = t_i */
    size_t packets_len;
    unsigned threads;
    int machine;     /* nonzero: JSON Lines */
    int with_trials; /* text format: include per-trial lines */
} flc_sim_params;

FLC_API void flc_sim_params_init(flc_sim_params* params);
FLC_API int flc_simulate(const flc_code* code, const flc_sim_params* params, char** report);

/* Oracles */
typedef struct {
    size_t vertices;
    size_t edges;
    size_t distance;
    size_t clique_number;
    size_t witnesses;
    size_t witnesses_spread_ok;
    int symmetric;
    int loop_free;
} flc_maxclique_report;

FLC_API int flc_maxclique(uint32_t p, uint32_t m, size_t n, size_t max_witnesses, flc_maxclique_report* out);

typedef struct {
    uint64_t expected_size;
    size_t actual_size;
    int coverage_checked;
    size_t violations;
    int ok;
} flc_spread_report;

/* A type-(k) code, or the n/2-projected code of a code whose type contains n/2. */
FLC_API int flc_spread_verify_code(const flc_code* code, flc_spread_report* out, char** details);
FLC_API int flc_spread_verify_built(uint32_t p, uint32_t m, size_t k, size_t n, flc_spread_report* out,
                                    char** details);

typedef struct {
    int admissible;
    int special_case;
    size_t s;
    uint64_t spread_size;
    uint64_t next_bound;
} flc_admissibility;

FLC_API int flc_check_admissibility(uint64_t q, size_t n, size_t k, flc_admissibility* out, char** reason);

#ifdef __cplusplus
}
#endif

#endif /* FLAGCODE_FLAGCODE_H */
