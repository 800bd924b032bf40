/* Public C interface of the basketball library.
 *
 * The library computes the pair of plane curves Re f = 0 and Im f = 0 of a
 * monic complex polynomial, classifies the resulting configuration, and
 * enumerates the combinatorial types exactly.
 *
 * All functions return BB_OK (0) or an error code; string results are
 * malloc'd and must be released with bb_string_free. Handles are opaque and
 * released with their matching *_free function. Error details for the last
 * failing call on the current thread come from bb_error_message().
 */
#ifndef BASKETBALL_H
#define BASKETBALL_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define BB_API __declspec(dllexport)
#else
#define BB_API __attribute__((visibility("default")))
#endif

enum bb_status {
    BB_OK = 0,
    BB_EPARSE = 2,   /* malformed input text */
    BB_ENUMERIC = 3, /* solver or tracer failure */
    BB_ECAPACITY = 4, /* census/series size cap exceeded */
    BB_EINVAL = 5    /* bad arguments, null pointers */
};

typedef struct bb_poly bb_poly;
typedef struct bb_trace bb_trace;

typedef struct bb_trace_options {
    double radius_safety;            /* <= 0: default 2.0 */
    double corrector_tol;            /* <= 0: default 1e-10 */
    double vertex_snap_radius_factor;/* <= 0: default 1e-3 */
    double on_curve_tol;             /* <= 0: default 1e-8 */
    double step_max;                 /* <= 0: automatic */
    int max_steps;                   /* <= 0: default 200000 */
    int extended_precision;          /* nonzero: long-double root solving */
} bb_trace_options;

/* Coefficient list, degree-descending, entries "RE", "REi" or "RE+IMi" with
 * decimal or rational p/q components, e.g. "1, 0, -3-3i, 2". Monic only. */
BB_API int bb_poly_parse(const char* text, bb_poly** out);
BB_API void bb_poly_free(bb_poly* p);
BB_API int bb_poly_degree(const bb_poly* p);

/* Trace both curves and assemble the combinatorial basketball. */
BB_API int bb_analyze(const bb_poly* p, const bb_trace_options* opts, bb_trace** out);
BB_API void bb_trace_free(bb_trace* t);

/* JSON document: {"n", "R", "I", "vertices":[{"pos","mR","mI","is_root"}],
 * "degree"} with matchings in the canonical text form. */
BB_API int bb_trace_json(const bb_trace* t, char** out_json);
/* one-line plain-text summary per field, same data as the JSON */
BB_API int bb_trace_text(const bb_trace* t, char** out_text);
BB_API int bb_trace_svg_file(const bb_trace* t, const char* path);

/* Exact singularity verdicts for both components; requires exact (rational)
 * coefficients, which bb_poly_parse always produces. JSON document:
 * [{"component","resultant_zero","real_witness"}, ...] */
BB_API int bb_exact_verdicts(const bb_poly* p, char** out_json);

enum bb_census_kind { BB_CENSUS_FORESTS = 0, BB_CENSUS_BASKETBALLS = 1 };
enum bb_census_grading { BB_BY_DEGREE = 0, BB_BY_VERTEX_COUNT = 1 };

/* Enumerator row "[1,16,42,48,22]"; orbits != 0 counts dihedral orbits
 * instead of cells (color_preserving selects the subgroup for basketballs).
 * An orbit census appends a second line "sizes: k1 x s1, ..." */
BB_API int bb_census(int n, int kind, int grading, int orbits, int color_preserving,
                     char** out_text);

enum bb_series_kind {
    BB_SERIES_TREES = 0,
    BB_SERIES_PARTITIONS = 1,
    BB_SERIES_FORESTS = 2
};

/* Rows "x^k: [...]" (t ascending) or "x^k: <polynomial in p2,p4,...>". */
BB_API int bb_series(int which, int order, char** out_text);

/* Exact cell classification of z^3 - 3(a+bi)z + 2(c+di); rational inputs
 * as strings. JSON: {"case","degree","orbitElement":{"rotation","flip"},
 * "rSingular","iSingular","doubleRoot","repR","repI"} */
BB_API int bb_classify3(const char* a, const char* b, const char* c, const char* d,
                        char** out_json);

/* Critical-value grid of the (a,b)-plane of f - (a+bi):
 * "l=2 m=2; [4,12,9]" */
BB_API int bb_grid(const bb_poly* p, char** out_text);

/* Q_n family enumerator: "[0,1,8,16,10] total 35" */
BB_API int bb_qn(int n, char** out_text);

BB_API void bb_string_free(char* s);
BB_API const char* bb_error_message(void);

#ifdef __cplusplus
}
#endif

#endif /* BASKETBALL_H */
