/* loopcalc — chains on based loop spaces with geometric cost bounds.
 *
 * C interface over opaque handles. All functions return lc_status unless
 * noted; on error, lc_last_error() carries a thread-local detail message.
 * Strings returned through char** outputs are heap-allocated and must be
 * released with lc_string_free(). Exact rationals cross the boundary as
 * canonical "p" / "p/q" strings.
 */

#ifndef LOOPCALC_H
#define LOOPCALC_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct lc_preset lc_preset; /* immutable base-space preset */
typedef struct lc_chain lc_chain;   /* immutable formal chain */
typedef struct lc_family lc_family; /* numeric loop-family chain on S^2 */

typedef enum lc_status {
    LC_OK = 0,
    LC_ERR_INVALID_ARGUMENT = 1,
    LC_ERR_NOT_FOUND = 2,
    LC_ERR_DEGREE_MISMATCH = 3,
    LC_ERR_CURFEW_MISMATCH = 4,
    LC_ERR_NOT_A_CYCLE = 5,
    LC_ERR_NOT_POWER_OF_TWO = 6,
    LC_ERR_INEXPRESSIBLE_PAIRING = 7,
    LC_ERR_PARSE = 8,
    LC_ERR_INTERNAL = 9
} lc_status;

const char* lc_version(void);
const char* lc_status_message(lc_status status);
const char* lc_last_error(void); /* thread-local; valid until the next call */
void lc_string_free(char* s);

/* ---- presets ----------------------------------------------------------- */

/* "Y" for the punctured (CP^2)#4 x S^2, or "S<n>" (n >= 2) for spheres. */
lc_status lc_preset_open(const char* name, lc_preset** out);
void lc_preset_close(lc_preset* preset);
lc_status lc_preset_name(const lc_preset* preset, char** out);
/* comma-separated generator ids */
lc_status lc_preset_generators(const lc_preset* preset, char** out);
lc_status lc_preset_forms(const lc_preset* preset, char** out);

/* ---- chains ------------------------------------------------------------ */

lc_status lc_chain_generator(const lc_preset* preset, const char* id, lc_chain** out);
lc_status lc_chain_zero(lc_chain** out);
lc_status lc_chain_z1(const lc_preset* preset, lc_chain** out);
lc_status lc_chain_zl(const lc_preset* preset, uint64_t L, lc_chain** out);
/* sphere example families: L^(n-1){L}zeta and L^(2n-2)[{L}zeta,{L}zeta] */
lc_status lc_chain_sphere_degree_family(const lc_preset* preset, uint64_t L, lc_chain** out);
lc_status lc_chain_sphere_hopf_family(const lc_preset* preset, uint64_t L, lc_chain** out);

lc_status lc_chain_add(const lc_chain* a, const lc_chain* b, lc_chain** out);
lc_status lc_chain_scalar(const char* rational, const lc_chain* c, lc_chain** out);
lc_status lc_chain_product(const lc_chain* a, const lc_chain* b, lc_chain** out);
lc_status lc_chain_bracket(const lc_chain* a, const lc_chain* b, lc_chain** out);
lc_status lc_chain_loop_power(uint64_t k, const lc_chain* c, lc_chain** out);
lc_status lc_chain_boundary(const lc_chain* c, lc_chain** out);

/* homology witnesses */
lc_status lc_witness_single_scale(const lc_chain* z1, const lc_chain* z2, lc_chain** out);
lc_status lc_witness_multiscale(const lc_chain* z1, const lc_chain* z2, uint64_t L, lc_chain** out);
lc_status lc_witness_naive(const lc_chain* z1, const lc_chain* z2, uint64_t L, lc_chain** out);

int lc_chain_is_zero(const lc_chain* c);
int lc_chain_is_cycle(const lc_chain* c);
int lc_chain_equal(const lc_chain* a, const lc_chain* b);
int lc_chain_degree(const lc_chain* c);
uint64_t lc_chain_terms(const lc_chain* c);
lc_status lc_chain_curfew(const lc_chain* c, char** out);
/* cost bounds under the unit cost model (c_prod = c_witness = 1) */
lc_status lc_chain_cost(const lc_chain* c, char** suplength_out, char** volume_out);

lc_status lc_chain_to_json(const lc_chain* c, int indent, char** out);
lc_status lc_chain_from_json(const lc_preset* preset, const char* json, lc_chain** out);
void lc_chain_free(lc_chain* c);

/* ---- pairing and certificates ------------------------------------------ */

/* word: whitespace-separated form labels, e.g. "a1 c1" */
lc_status lc_word_degree(const lc_preset* preset, const char* word, int* out);
lc_status lc_pair(const lc_preset* preset, const char* word, const lc_chain* c, char** out);

/* family: "ZL" (Y preset), "degree" or "hopf" (sphere presets).
 * JSON: {"L", "suplength", "volume", "pairing", "lambda", "value"}. */
lc_status lc_certify(const lc_preset* preset, const char* word, const char* family, uint64_t L,
                     char** json_out);

/* ---- numeric backend (S^2) --------------------------------------------- */

/* resolution/samples <= 0 pick the defaults (64 / 256). */
lc_status lc_family_sweepout(int resolution, int samples, lc_family** out);
lc_status lc_family_based_sweepout(int resolution, int samples, lc_family** out);
lc_status lc_family_concat(const lc_family* a, const lc_family* b, lc_family** out);
lc_status lc_family_power(uint64_t k, const lc_family* f, lc_family** out);
/* the Theorem B homology families and the quadratic comparator */
lc_status lc_family_p_multiscale(uint64_t L, int resolution, int samples, lc_family** out);
lc_status lc_family_p_naive(uint64_t L, int resolution, int samples, lc_family** out);

int lc_family_arity(const lc_family* f);
lc_status lc_family_suplength(const lc_family* f, double* out);
/* certified upper bound; refined per axis until stable or the cap */
lc_status lc_family_volume_upper(const lc_family* f, double* value_out, int* converged_out);
/* iterated integral of r copies of the normalized area form */
lc_status lc_family_chen_integral(const lc_family* f, int r, double* out);
lc_status lc_family_to_json(const lc_family* f, int grid_resolution, char** out);
void lc_family_free(lc_family* f);

#ifdef __cplusplus
}
#endif

#endif /* LOOPCALC_H */
