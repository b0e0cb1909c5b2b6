/* knotcert — crossing-number minimality certification for knot diagrams.
 *
 * C interface to the shared library. All functions return kc_error; 0 is
 * success. Objects are opaque handles freed with the matching *_free call.
 * Strings returned through char** are heap-allocated; release them with
 * kc_string_free. Error details for the current thread are available from
 * kc_last_error().
 */
#ifndef KNOTCERT_H
#define KNOTCERT_H

#include <stddef.h>

#if defined(_WIN32)
#define KC_API __declspec(dllexport)
#else
#define KC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef int kc_error;

enum {
  KC_OK = 0,
  KC_ERROR_INVALID = 1,  /* invalid argument (bad arc id, k = 0, null pointer) */
  KC_ERROR_PARSE = 2,    /* malformed input text */
  KC_ERROR_LIMIT = 4,    /* state-sum size above the configured limit */
  KC_ERROR_INTERNAL = 5
};

typedef struct kc_diagram kc_diagram;
typedef struct kc_long_diagram kc_long_diagram;

KC_API const char* kc_version(void);

/* thread-local message describing the most recent failure */
KC_API const char* kc_last_error(void);

KC_API void kc_string_free(char* s);

/* ---- parsing -------------------------------------------------------- */

/* PD text: whitespace-separated X(a,b,c,d) terms ("circle" for the
 * 0-crossing unknot). */
KC_API kc_error kc_parse_pd(const char* text, kc_diagram** out);

/* signed Gauss code: tokens O<id><sign> / U<id><sign> */
KC_API kc_error kc_parse_gauss(const char* text, kc_diagram** out);

/* braid word "s1^3 s2^-1"; strands <= 0 infers max generator index + 1;
 * the diagram is the standard closure */
KC_API kc_error kc_parse_braid(const char* text, int strands, kc_diagram** out);

KC_API void kc_diagram_free(kc_diagram* d);

/* ---- queries --------------------------------------------------------- */

KC_API kc_error kc_crossing_count(const kc_diagram* d, size_t* out);
KC_API kc_error kc_component_count(const kc_diagram* d, size_t* out);
KC_API kc_error kc_is_knot(const kc_diagram* d, int* out);
KC_API kc_error kc_is_classical(const kc_diagram* d, int* out);
KC_API kc_error kc_writhe(const kc_diagram* d, int* out);

/* deterministic canonical PD serialization */
KC_API kc_error kc_serialize_pd(const kc_diagram* d, char** out);

/* ---- surgery --------------------------------------------------------- */

KC_API kc_error kc_mirror(const kc_diagram* d, kc_diagram** out);
KC_API kc_error kc_cable(const kc_diagram* d, int k, kc_diagram** out);

/* arcs are identified by any dart id on them (darts are 4*crossing + slot) */
KC_API kc_error kc_connected_sum(const kc_diagram* d1, unsigned arc1, const kc_diagram* d2,
                                 unsigned arc2, kc_diagram** out);

/* ---- reports (compact key-sorted JSON) ------------------------------- */

KC_API kc_error kc_info_json(const kc_diagram* d, char** out);
KC_API kc_error kc_atom_report_json(const kc_diagram* d, char** out);

/* bracket polynomial rendered as text; limit <= 0 uses the default (24) */
KC_API kc_error kc_bracket(const kc_diagram* d, int limit, char** out);
KC_API kc_error kc_bracket_report_json(const kc_diagram* d, int limit, char** out);

/* category: "classical", "framed" */
KC_API kc_error kc_certificate_json(const kc_diagram* d, const char* category, int limit,
                                    char** out);

KC_API kc_error kc_detect_moves_json(const kc_diagram* d, char** out);
KC_API kc_error kc_cabling_report_json(const kc_diagram* d, int m, int limit, char** out);

/* ---- long diagrams ---------------------------------------------------- */

/* PD text with exactly two arc labels occurring once ("arc" for the bare
 * 0-crossing long diagram) */
KC_API kc_error kc_parse_long_pd(const char* text, kc_long_diagram** out);
KC_API void kc_long_diagram_free(kc_long_diagram* ld);
KC_API kc_error kc_long_closure(const kc_long_diagram* ld, kc_diagram** out);
KC_API kc_error kc_long_certificate_json(const kc_long_diagram* ld, int limit, char** out);

#ifdef __cplusplus
}
#endif

#endif /* KNOTCERT_H */
