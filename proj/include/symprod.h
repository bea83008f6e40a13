/* C interface to the symprod toolkit. All functions return a status code
 * (SYMPROD_OK on success); structured results come back as JSON documents in
 * heap strings the caller releases with symprod_string_free. On failure,
 * symprod_last_error() returns a thread-local message describing what went
 * wrong. Handles are opaque; release configurations with symprod_config_free.
 */
#ifndef SYMPROD_H
#define SYMPROD_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

enum {
  SYMPROD_OK = 0,
  SYMPROD_EINVAL = 1,     /* invalid arguments or inconsistent input data */
  SYMPROD_EPARSE = 2,     /* malformed JSON or scalar literal */
  SYMPROD_ETOOLARGE = 3,  /* an enumeration guard was exceeded */
  SYMPROD_ENOCERT = 4,    /* search range exhausted without a certificate */
  SYMPROD_EINTERNAL = 5
};

/* Verdicts reported by symprod_specpos_decide. */
enum {
  SYMPROD_VERDICT_SPECIAL = 0,
  SYMPROD_VERDICT_NOT_SPECIAL = 1,
  SYMPROD_VERDICT_UNDECIDED = 2
};

typedef struct symprod_config symprod_config;

const char* symprod_version(void);
const char* symprod_last_error(void);
void symprod_string_free(char* s);
void symprod_config_free(symprod_config* cfg);

/* Configurations of (k-1)-planes in P^n over Q or F_p. */
int symprod_config_parse(const char* config_json, symprod_config** out);
int symprod_config_to_json(const symprod_config* cfg, char** out_json);
int symprod_config_fixture(const char* family, int32_t d, int32_t n, uint64_t seed,
                           symprod_config** out);
int symprod_config_reduce_mod(const symprod_config* cfg, uint32_t prime,
                              symprod_config** out);

/* Special-position decision, span bound, finite-field oracle. */
int symprod_specpos_decide(const symprod_config* cfg, uint32_t trials, uint64_t seed,
                           int32_t* out_verdict, char** out_json);
int symprod_specpos_span(const symprod_config* cfg, char** out_json);
int symprod_specpos_oracle(const symprod_config* cfg, char** out_json);

/* Plücker coordinates of a single subspace document. */
int symprod_subspace_plucker(const char* subspace_json, char** out_json);

/* Curve numerology. */
int symprod_brill_noether_rho(int64_t g, int64_t r, int64_t d, int64_t* out_rho);
int symprod_generic_min_degree(int64_t g, int64_t r, int64_t* out_degree);
int symprod_generic_gonality(int64_t g, int64_t* out_gonality);

/* Bound reports; profiles are JSON documents (see README). */
int symprod_degirr(const char* profile_json, char** out_json);
int symprod_deg_gonality(const char* profile_json, int64_t k, char** out_json);
int symprod_gonality_report(const char* profile_json, char** out_json);

/* Nef-cone slope certificates. a, b, tau_prev are decimal strings
 * (tau_prev may be "p/q"); pass c < 0 to use the default constant for g. */
int symprod_nefcone_verify(int64_t g, const char* a, const char* b, const char* tau_prev,
                           int64_t c, char** out_json);
int symprod_nefcone_search(int64_t g, int64_t c, const char* tau_prev, int64_t b_max,
                           char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* SYMPROD_H */
