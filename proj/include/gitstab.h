/*
 * gitstab C API: exact stability analysis of rational self-maps of
 * projective space, specialized to generalized Henon maps.
 *
 * Conventions:
 *   - every function returns GITSTAB_OK or an error code; on error,
 *     gitstab_last_error() describes what went wrong (thread-local);
 *   - objects are opaque handles released with the matching _free call;
 *   - analysis results are UTF-8 JSON documents in freshly allocated
 *     strings, released with gitstab_free_string().
 */
#ifndef GITSTAB_H
#define GITSTAB_H

#ifdef __cplusplus
extern "C" {
#endif

#define GITSTAB_OK 0
#define GITSTAB_ERR_PARSE 1     /* malformed input text */
#define GITSTAB_ERR_INVALID 2   /* precondition violation */
#define GITSTAB_ERR_UNDECIDED 3 /* not decidable over the rationals */
#define GITSTAB_ERR_NULL 4      /* null argument */
#define GITSTAB_ERR_INTERNAL 5

typedef struct gitstab_map gitstab_map;     /* degree-d rational self-map of P^N */
typedef struct gitstab_henon gitstab_henon; /* generalized Henon map data */

const char* gitstab_version(void);
const char* gitstab_last_error(void);
void gitstab_free_string(char* s);

/* ---- maps ---- */
int gitstab_map_parse(const char* text, gitstab_map** out);
int gitstab_map_format(const gitstab_map* m, char** text_out);
int gitstab_map_info(const gitstab_map* m, int* dim_out, int* degree_out);
void gitstab_map_free(gitstab_map* m);

/* ---- Henon specs ---- */
int gitstab_henon_parse(const char* text, gitstab_henon** out);
int gitstab_henon_format(const gitstab_henon* h, char** text_out);
int gitstab_henon_to_map(const gitstab_henon* h, gitstab_map** out);
void gitstab_henon_free(gitstab_henon* h);

/* ---- analyses (JSON results) ---- */

/* minimum alpha-exponent of the map under the diagonal 1-PS with the given
 * integer weights (weights must sum to zero and have length N+1) */
int gitstab_mu(const gitstab_map* m, const long long* weights, int len, char** json_out);

/* exact search for a diagonal destabilizing 1-PS; strict != 0 demands
 * mu > 0, otherwise a nonzero witness with mu >= 0 */
int gitstab_destab(const gitstab_map* m, int strict, char** json_out);

/* recompute mu for the given weights and check it has the expected sign
 * (expect_positive != 0 checks mu > 0, otherwise mu >= 0) */
int gitstab_verify(const gitstab_map* m, const long long* weights, int len, int expect_positive,
                   char** json_out);

/* degrees of the first n normalized iterates */
int gitstab_iterate(const gitstab_map* m, int n, char** json_out);

/* classification verdict for a dominant quadratic self-map of P^2 */
int gitstab_classify22(const gitstab_map* m, char** json_out);

/* closure of the image of a line under a dominant quadratic map of P^2 */
int gitstab_line_image(const gitstab_map* m, const char* line_text, char** json_out);

/* affine form, inverse, and homogenization of a Henon spec */
int gitstab_henon_build(const gitstab_henon* h, char** json_out);

/* symbolic exponent table for the block weights, with the certificate values */
int gitstab_table(int N, int k, int d, char** json_out);

/* line-image trichotomy audit for a classic quadratic Henon spec */
int gitstab_audit_henon22(const gitstab_henon* h, unsigned long long seed, int per_class,
                          char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* GITSTAB_H */
