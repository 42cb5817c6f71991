#ifndef SHORELINE_SHORELINE_H
#define SHORELINE_SHORELINE_H

/* C interface to the shoreline library. Every function returning shl_status
 * leaves its outputs untouched on failure; shl_last_error() then describes
 * the failure for the calling thread. Strings returned through char** are
 * owned by the caller and released with shl_string_free. */

#include <stdint.h>

#if defined(_WIN32)
#define SHL_API __declspec(dllexport)
#elif defined(__GNUC__)
#define SHL_API __attribute__((visibility("default")))
#else
#define SHL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum shl_status {
  SHL_OK = 0,
  SHL_MALFORMED_INPUT = 1,
  SHL_GENERICITY = 2,
  SHL_CONSTRUCTION = 3,
  SHL_PRECONDITION = 4,
  SHL_INVALID_ARGUMENT = 5,
  SHL_INTERNAL = 6
} shl_status;

/* Outcome of a theorem check. */
typedef enum shl_check_status {
  SHL_CHECK_PASSED = 0,
  SHL_CHECK_VIOLATED = 1,
  SHL_CHECK_PRECONDITION_FAILED = 2
} shl_check_status;

typedef struct shl_complex shl_complex;
typedef struct shl_values shl_values;
typedef struct shl_diagram shl_diagram;
typedef struct shl_instance shl_instance;
typedef struct shl_region shl_region;
typedef struct shl_report shl_report;

SHL_API const char* shl_version(void);
SHL_API const char* shl_last_error(void);
SHL_API const char* shl_status_name(shl_status status);
SHL_API void shl_string_free(char* s);

/* Complexes: one maximal simplex per line, '#' comments. */
SHL_API shl_status shl_complex_parse(const char* text, shl_complex** out);
SHL_API shl_status shl_complex_to_text(const shl_complex* k, char** out);
SHL_API int shl_complex_dim(const shl_complex* k);
SHL_API uint64_t shl_complex_size(const shl_complex* k);
SHL_API void shl_complex_free(shl_complex* k);

/* Vertex values: CSV with header "vertex,value". */
SHL_API shl_status shl_values_parse(const char* text, shl_values** out);
SHL_API shl_status shl_values_to_csv(const shl_values* f, char** out);
/* Breaks ties by perturbation when allowed, else fails with SHL_GENERICITY.
 * *epsilon receives the tie-break scale used, 0 when nothing changed. */
SHL_API shl_status shl_values_make_generic(shl_values* f, int allow_perturb, double* epsilon);
/* Affine rescale onto [0, 1]. */
SHL_API shl_status shl_values_normalize(shl_values* f);
SHL_API void shl_values_free(shl_values* f);

/* Extended persistence of f on k, or on the subcomplex restrict_to when it is
 * not NULL. */
SHL_API shl_status shl_diagram_compute(const shl_complex* k, const shl_values* f,
                                       const shl_complex* restrict_to, shl_diagram** out);
SHL_API shl_status shl_diagram_parse(const char* json, shl_diagram** out);
SHL_API shl_status shl_diagram_to_json(const shl_diagram* d, int keep_diagonal, char** out);
SHL_API shl_status shl_diagram_to_pretty(const shl_diagram* d, int keep_diagonal, char** out);
SHL_API shl_status shl_diagram_to_plot_csv(const shl_diagram* d, int keep_diagonal, char** out);
SHL_API shl_status shl_diagram_reflect(const shl_diagram* d, int n, shl_diagram** out);
/* report_json may be NULL. */
SHL_API shl_status shl_diagram_cascade(const shl_diagram* d, double lo, double hi,
                                       shl_diagram** out, char** report_json);
SHL_API shl_status shl_diagram_reduce(const shl_diagram* d, shl_diagram** out);
SHL_API shl_status shl_diagram_union(const shl_diagram* a, const shl_diagram* b, shl_diagram** out);
/* Exact multiset comparison without diagonal dots. report_json may be NULL. */
SHL_API shl_status shl_diagram_equal(const shl_diagram* a, const shl_diagram* b, int* equal,
                                     char** report_json);
SHL_API uint64_t shl_diagram_size(const shl_diagram* d);
SHL_API void shl_diagram_free(shl_diagram* d);

/* Instances: a sphere, a function on it and, except for gen sphere, a
 * decomposition into U and V with common frontier M. */
SHL_API shl_status shl_gen_sphere(int dim, shl_instance** out);
SHL_API shl_status shl_gen_solid_torus(int p, int q, shl_instance** out);
SHL_API shl_status shl_gen_annulus_cx(shl_instance** out);
SHL_API shl_status shl_gen_random(int dim, uint64_t seed, shl_instance** out);
/* Validates the decomposition; M is the intersection of u and v. */
SHL_API shl_status shl_instance_from_parts(const shl_complex* ambient, const shl_complex* u,
                                           const shl_complex* v, const shl_values* f,
                                           shl_instance** out);
/* part is one of 'S', 'U', 'V', 'M'. */
SHL_API shl_status shl_instance_part(const shl_instance* inst, char part, shl_complex** out);
SHL_API shl_status shl_instance_values(const shl_instance* inst, shl_values** out);
SHL_API int shl_instance_has_decomposition(const shl_instance* inst);
/* Label, dimensions, sizes and generator specific values as JSON. */
SHL_API shl_status shl_instance_info_json(const shl_instance* inst, char** out);
SHL_API void shl_instance_free(shl_instance* inst);

/* Regions of a grid: mask text of '1' and '0', voxel blocks separated by blank
 * lines, or a CSV heightmap cut at sea level. height_axis is 'x' or 'y'. */
SHL_API shl_status shl_region_from_mask(const char* text, char height_axis, shl_region** out);
SHL_API shl_status shl_region_from_voxels(const char* text, shl_region** out);
SHL_API shl_status shl_region_from_heightmap(const char* csv, double sea_level, char height_axis,
                                             shl_region** out);
/* A bare region without an embedding; n is the dimension of its boundary. */
SHL_API shl_status shl_region_from_parts(const shl_complex* a, const shl_values* e, int n,
                                         shl_region** out);
SHL_API shl_status shl_region_complex(const shl_region* r, shl_complex** out);
SHL_API shl_status shl_region_boundary(const shl_region* r, shl_complex** out);
SHL_API shl_status shl_region_values(const shl_region* r, shl_values** out);
SHL_API shl_status shl_region_info_json(const shl_region* r, char** out);
SHL_API void shl_region_free(shl_region* r);

/* Theorem checks. A violated precondition yields a report with status
 * SHL_CHECK_PRECONDITION_FAILED, not an error. t may be NULL for every
 * regular value. */
SHL_API shl_status shl_check_betti(const shl_instance* inst, const double* t, shl_report** out);
SHL_API shl_status shl_check_point_calculus(const shl_instance* inst, shl_report** out);
SHL_API shl_status shl_check_land_water(const shl_instance* inst, shl_report** out);
SHL_API shl_status shl_check_shore(const shl_instance* inst, shl_report** out);
SHL_API shl_status shl_check_engine(const shl_instance* inst, uint64_t seed, shl_report** out);
SHL_API shl_status shl_check_euclid(const shl_region* r, shl_report** out);
SHL_API shl_status shl_check_counterexample(shl_report** out);
SHL_API shl_check_status shl_report_status(const shl_report* r);
SHL_API shl_status shl_report_to_json(const shl_report* r, char** out);
SHL_API void shl_report_free(shl_report* r);

#ifdef __cplusplus
}
#endif

#endif
