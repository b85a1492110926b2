/*
 * C interface of the btnorm library.
 *
 * Exact computations with splittable p-adic norms on Q^n, stored additively
 * (c = log_p of the multiplicative norm).
 *
 * Conventions:
 *  - Every function returns a btn_status; BTN_OK is 0. On failure a message is
 *    available from btn_last_error() until the next call on the same thread.
 *  - Rationals are strings "a" or "a/b"; the bottom value is "-inf".
 *  - Vectors are comma-separated rationals: "1,1/2".
 *  - Matrices are row-major, rows separated by ';': "2,0;0,1".
 *  - Vector lists (spans, frames, bases) are vectors separated by ';'; each
 *    listed vector is one column.
 *  - Strings returned through char** are allocated by the library and must be
 *    released with btn_string_free(). Structured results are compact JSON with
 *    sorted keys.
 *  - Norm handles are immutable and may be shared between threads.
 */
#ifndef BTNORM_H
#define BTNORM_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define BTN_API __declspec(dllexport)
#else
#define BTN_API __attribute__((visibility("default")))
#endif

typedef enum btn_status {
  BTN_OK = 0,
  BTN_ERR_MALFORMED = 1,
  BTN_ERR_DIMENSION = 2,
  BTN_ERR_SINGULAR = 3,
  BTN_ERR_CONFIG = 4,
  BTN_ERR_PRECONDITION = 5,
  BTN_ERR_INTERNAL = 6,
  BTN_ERR_ARGUMENT = 7
} btn_status;

typedef struct btn_norm btn_norm;

BTN_API const char* btn_version(void);
BTN_API const char* btn_last_error(void);
BTN_API const char* btn_status_name(btn_status status);
BTN_API void btn_string_free(char* s);

/* ---- valued field ---------------------------------------------------- */

BTN_API btn_status btn_val(unsigned long prime, const char* x, char** out_value);
/* ram_index 0 means unbounded. */
BTN_API btn_status btn_class_of(const char* value, unsigned long ram_index, char** out_class);
BTN_API btn_status btn_in_fundamental_interval(const char* d, int* out_bool);
/* Three-way comparison of two values (either may be "-inf"): -1, 0 or 1. */
BTN_API btn_status btn_value_compare(const char* a, const char* b, int* out_sign);

/* ---- norm handles ---------------------------------------------------- */

BTN_API btn_status btn_norm_parse(const char* document, btn_norm** out);
/* label may be NULL; otherwise the handle's own label is replaced. */
BTN_API btn_status btn_norm_serialize(const btn_norm* norm, const char* label, char** out_document);
BTN_API btn_status btn_norm_create(unsigned long prime, const char* basis_vectors, const char* values, btn_norm** out);
BTN_API void btn_norm_free(btn_norm* norm);
BTN_API void btn_norm_array_free(btn_norm** norms, size_t count);
BTN_API size_t btn_norm_dim(const btn_norm* norm);
BTN_API unsigned long btn_norm_prime(const btn_norm* norm);

/* ---- norms ----------------------------------------------------------- */

BTN_API btn_status btn_evaluate(const btn_norm* norm, const char* vector, char** out_value);
BTN_API btn_status btn_lattice_norm(unsigned long prime, const char* lattice_vectors, btn_norm** out);
/* {"lattice": [[column], ...]} ; open != 0 selects the open ball. */
BTN_API btn_status btn_ball(const btn_norm* norm, const char* gamma, int open, char** out_json);
BTN_API btn_status btn_act(const char* g, const btn_norm* norm, btn_norm** out);
BTN_API btn_status btn_equals(const btn_norm* a, const btn_norm* b, int* out_bool);
BTN_API btn_status btn_tensor(const btn_norm* a, const btn_norm* b, btn_norm** out);
BTN_API btn_status btn_dual(const btn_norm* norm, btn_norm** out);
BTN_API btn_status btn_direct_sum(const btn_norm* a, const btn_norm* b, btn_norm** out);
BTN_API btn_status btn_restrict(const btn_norm* norm, const char* span_vectors, btn_norm** out);
/* out_complement_json: {"complement": [[column], ...]} ; may be NULL. */
BTN_API btn_status btn_quotient(const btn_norm* norm, const char* span_vectors, btn_norm** out,
                                char** out_complement_json);
/* {"a_values": [...], "b_values": [...], "basis": [[column], ...]} */
BTN_API btn_status btn_common_basis(const btn_norm* a, const btn_norm* b, char** out_json);
/* {"d_inf": "...", "diffs": [...]} */
BTN_API btn_status btn_distance(const btn_norm* a, const btn_norm* b, char** out_json);

/* ---- splittings (pair documents) ------------------------------------- */

BTN_API btn_status btn_pair_from_norm(const btn_norm* norm, char** out_pair_document);
BTN_API btn_status btn_norm_from_pair(const char* pair_document, btn_norm** out);
BTN_API btn_status btn_translate_pair(const char* g, const char* pair_document, char** out_pair_document);
BTN_API btn_status btn_verify_splitting(const btn_norm* norm, const char* pair_document, int* out_bool);

/* ---- stabilizer ------------------------------------------------------ */

BTN_API btn_status btn_hom_norm(const btn_norm* norm, const char* h, char** out_value);
BTN_API btn_status btn_is_stabilizer(const btn_norm* norm, const char* g, int* out_bool);
/* {"class_dims": [["0", 2], ["-1/2", 2]], "n": 2} ; degrees descending. */
BTN_API btn_status btn_graded_dims(const btn_norm* norm, char** out_json);
/* {"levi_blocks": [...], "total_dim": .., "unipotent_dim": ..} */
BTN_API btn_status btn_fiber_structure(const btn_norm* norm, char** out_json);
/* {"certificates": [...], "classes": [...], "lattices": [...]} */
BTN_API btn_status btn_chain_period(const btn_norm* norm, char** out_json);
BTN_API btn_status btn_filtration_level(const btn_norm* norm, const char* g, char** out_value);

/* ---- base change ----------------------------------------------------- */

/* {"weights": [["0", 1], ["1/2", 1]]} */
BTN_API btn_status btn_chi_weights(const btn_norm* norm, char** out_json);
BTN_API btn_status btn_centralizer_dim(const btn_norm* norm, size_t* out);
BTN_API btn_status btn_kernel_dim(const btn_norm* norm, size_t* out);
/* {"dims": [["0", 1, 1], ...]} as [degree, lhs, rhs], degrees descending. */
BTN_API btn_status btn_graded_ball_dims(const btn_norm* norm, const char* gamma, char** out_json);
/* ram_index 0 means unbounded. */
BTN_API btn_status btn_refined_chain_length(const btn_norm* norm, unsigned long ram_index, size_t* out);

/* ---- building -------------------------------------------------------- */

BTN_API btn_status btn_norm_from_apartment(unsigned long prime, const char* coords, btn_norm** out);
/* JSON array of coordinates, or "null" when the frame does not split the norm. */
BTN_API btn_status btn_apartment_coords(const btn_norm* norm, const char* frame_vectors, char** out_json);
BTN_API btn_status btn_torus_translation(unsigned long prime, const char* t, char** out_vector);
/* JSON array, sorted descending. */
BTN_API btn_status btn_cartan_position(const btn_norm* a, const btn_norm* b, char** out_json);
/* JSON array of multiplicities. */
BTN_API btn_status btn_point_type(const btn_norm* norm, char** out_json);
BTN_API btn_status btn_homothetic(const btn_norm* a, const btn_norm* b, int* out_bool);
/* *out receives an array of *out_count handles; release with btn_norm_array_free. */
BTN_API btn_status btn_tree_neighbors(const btn_norm* vertex, btn_norm*** out, size_t* out_count);

#ifdef __cplusplus
}
#endif

#endif /* BTNORM_H */
