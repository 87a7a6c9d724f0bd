/*
 * kpart C API: k-planar and k-quasi-planar partitions of complete geometric
 * graphs.
 *
 * Objects are opaque handles created by kp_*_create / kp_*_gen / kp_*_parse
 * and released with the matching kp_*_free. Every fallible function returns a
 * kp_status; on failure kp_last_error() describes the problem (the message is
 * thread-local and valid until the next failing call on the same thread).
 * Strings returned through char** are owned by the caller and released with
 * kp_string_free.
 *
 * A budget of 0 selects the library default node budget.
 *
 * Edges are passed as flat arrays of vertex indices: u0 v0 u1 v1 ...
 *
 * Functions that take a `const kp_pointset*` for verification accept NULL,
 * meaning "the convex n-gon with vertices in index order", where n comes from
 * the coloring.
 */
#ifndef KPART_H
#define KPART_H

#include <stddef.h>
#include <stdint.h>

#if defined(KPART_BUILDING_LIBRARY)
#define KPART_API __attribute__((visibility("default")))
#else
#define KPART_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kp_status {
  KP_OK = 0,
  KP_ERR_INVALID_ARGUMENT = 1, /* null handle or output pointer, index out of range */
  KP_ERR_INVALID_INPUT = 2,    /* precondition violated: degenerate points, odd size, bad k */
  KP_ERR_PARSE = 3,            /* malformed instance or coloring text */
  KP_ERR_BUDGET_EXCEEDED = 4,  /* exact search not finished within its node budget */
  KP_ERR_INTERNAL = 5          /* generator retries exhausted or broken invariant */
} kp_status;

typedef struct kp_pointset kp_pointset;
typedef struct kp_coloring kp_coloring;

KPART_API const char* kp_status_name(kp_status status);
KPART_API const char* kp_last_error(void);
KPART_API void kp_string_free(char* text);

/* ---- point sets ------------------------------------------------------- */

/* xy holds 2*count coordinates. Rejects duplicates, collinear triples, and
 * coordinates beyond 2^30. */
KPART_API kp_status kp_pointset_create(const int64_t* xy, size_t count, kp_pointset** out);
KPART_API kp_status kp_pointset_gen_convex(size_t n, uint64_t seed, kp_pointset** out);
KPART_API kp_status kp_pointset_gen_random(size_t n, uint64_t seed, kp_pointset** out);
/* 2n points carrying a perfect crossing family of n edges. */
KPART_API kp_status kp_pointset_gen_crossing_family(size_t n, uint64_t seed, kp_pointset** out);
KPART_API kp_status kp_pointset_parse(const char* text, kp_pointset** out);
KPART_API kp_status kp_pointset_write(const kp_pointset* points, char** out);
KPART_API void kp_pointset_free(kp_pointset* points);

KPART_API size_t kp_pointset_size(const kp_pointset* points);
KPART_API kp_status kp_pointset_point(const kp_pointset* points, size_t i, int64_t* x, int64_t* y);
/* Crossing family attached by the generator or the instance file; 0 if none. */
KPART_API size_t kp_pointset_family_size(const kp_pointset* points);
KPART_API kp_status kp_pointset_family_edge(const kp_pointset* points, size_t i, int* u, int* v);

typedef struct kp_pointset_report {
  int general_position;
  int convex_position;
} kp_pointset_report;

/* cyclic_order may be NULL; otherwise it receives size() indices in clockwise
 * hull order when the set is convex. Needs at least 3 points. */
KPART_API kp_status kp_pointset_validate(const kp_pointset* points, kp_pointset_report* report,
                                         int* cyclic_order);

/* Largest pairwise crossing edge set. edges_uv may be NULL; otherwise it needs
 * room for size() entries (m <= size()/2 edges). */
KPART_API kp_status kp_max_crossing_family(const kp_pointset* points, uint64_t budget, size_t* m,
                                           int* proven_optimal, int* edges_uv);

/* ---- colorings -------------------------------------------------------- */

/* All edges start unassigned (-1). */
KPART_API kp_status kp_coloring_create(size_t n, int num_colors, kp_coloring** out);
KPART_API kp_status kp_coloring_set(kp_coloring* coloring, int u, int v, int color);
KPART_API kp_status kp_coloring_get(const kp_coloring* coloring, int u, int v, int* color);
KPART_API size_t kp_coloring_n(const kp_coloring* coloring);
KPART_API int kp_coloring_num_colors(const kp_coloring* coloring);
KPART_API kp_status kp_coloring_parse(const char* text, kp_coloring** out);
KPART_API kp_status kp_coloring_write(const kp_coloring* coloring, char** out);
KPART_API void kp_coloring_free(kp_coloring* coloring);

/* ---- constructions ---------------------------------------------------- */

/* Convex n-gon: color = ((i + j) mod n) / s. */
KPART_API kp_status kp_partition_slope(size_t n, size_t s, kp_coloring** out);
/* Even point count; color i is the i-th double-star spanning tree. */
KPART_API kp_status kp_partition_double_star(const kp_pointset* points, kp_coloring** out);
/* Needs the point set's attached perfect crossing family. */
KPART_API kp_status kp_partition_halving(const kp_pointset* points, size_t k, kp_coloring** out);

typedef struct kp_theorem7_report {
  size_t m;
  size_t colors_used;
  int single_color;
} kp_theorem7_report;

KPART_API kp_status kp_partition_theorem7(const kp_pointset* points, size_t k, uint64_t budget,
                                          kp_coloring** out, kp_theorem7_report* report);

/* ---- verification ----------------------------------------------------- */

KPART_API kp_status kp_verify_partition(const kp_pointset* points, const kp_coloring* coloring,
                                        int* ok);

typedef struct kp_kplanar_result {
  int ok;
  int color; /* first class exceeding k, else -1 */
  int u, v;  /* witness edge in that class */
  size_t crossings;
  size_t max_crossings; /* over all classes */
} kp_kplanar_result;

KPART_API kp_status kp_verify_k_planar(const kp_pointset* points, const kp_coloring* coloring,
                                       size_t k, kp_kplanar_result* result);

/* On failure, *color is the offending class and witness_uv receives up to
 * witness_capacity edges of a k-element crossing family. */
KPART_API kp_status kp_verify_k_quasi_planar(const kp_pointset* points, const kp_coloring* coloring,
                                             size_t k, uint64_t budget, int* ok, int* color,
                                             int* witness_uv, size_t witness_capacity,
                                             size_t* witness_size);

/* Every class is a spanning tree of K_n. *bad_color is -1 when ok. */
KPART_API kp_status kp_verify_spanning_trees(const kp_coloring* coloring, int* ok, int* bad_color);

/* ---- rendering -------------------------------------------------------- */

typedef struct kp_svg_options {
  int size;
  int margin;
  double point_radius;
  double stroke_width;
} kp_svg_options;

KPART_API kp_svg_options kp_svg_default_options(void);
/* points == NULL lays the vertices out on a circle. options may be NULL. */
KPART_API kp_status kp_render_svg(const kp_pointset* points, const kp_coloring* coloring,
                                  const kp_svg_options* options, char** out);

/* ---- bounds ----------------------------------------------------------- */

KPART_API kp_status kp_edge_bound_small_k(size_t n, size_t k, int64_t* num, int64_t* den);
KPART_API kp_status kp_edge_bound_general(size_t n, size_t k, double* out);
/* points == NULL counts interleavings on the convex n-gon. */
KPART_API kp_status kp_count_crossings(const kp_pointset* points, size_t n, const int* edges_uv,
                                       size_t edge_count, size_t* out);
KPART_API kp_status kp_crossing_lemma_bound(size_t n, size_t e, double* out);
KPART_API int64_t kp_peeling_bound(size_t n, size_t e);
KPART_API kp_status kp_max_k_plane_subgraph(size_t n, size_t k, uint64_t budget, size_t* size,
                                            int* proven_optimal);
KPART_API size_t kp_choose_block_size(size_t k);
KPART_API kp_status kp_kplanar_color_bounds(size_t n, size_t k, size_t* lower, size_t* upper);
KPART_API kp_status kp_one_planar_lower_bound(size_t n, size_t* out);
KPART_API kp_status kp_quasi_color_bounds(size_t n, size_t m, size_t k, size_t* lower,
                                          size_t* upper, int* single_color);
/* Text table, one "BOUND ..." line per row. points may be NULL. */
KPART_API kp_status kp_bounds_report(size_t n, size_t k, const kp_pointset* points,
                                     uint64_t budget, char** out, int* all_satisfied);

#ifdef __cplusplus
}
#endif

#endif /* KPART_H */
