/* C API for the affweyl library.
 *
 * All functions return an error code: 0 success, 1 verification failure
 * (the operation ran but at least one check failed), 2 invalid argument
 * or internal error.  Functions with a char** out parameter allocate a
 * NUL-terminated string that must be released with aw_string_free.
 * aw_last_error returns a description of the most recent error on the
 * calling thread ("" if none).
 */
#ifndef AFFWEYL_H
#define AFFWEYL_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct aw_rootsys aw_rootsys;

#define AW_OK 0
#define AW_FAIL 1
#define AW_ERROR 2

/* type: one of "A","B","C","D","E6","E7","E8","F4","G2" */
int aw_rootsys_create(const char* type, int rank, aw_rootsys** out);
void aw_rootsys_destroy(aw_rootsys* rs);

int aw_rootsys_describe(const aw_rootsys* rs, int as_json, char** out);

/* Words are comma-separated generator indices; 0 is the affine generator. */
int aw_word_eval(const aw_rootsys* rs, const char* word, int as_json, char** out);
int aw_word_is_reduced(const aw_rootsys* rs, const char* word, int as_json, char** out);
int aw_word_is_fully_commutative(const aw_rootsys* rs, const char* word, int as_json,
                                 char** out);

/* Tabulated translation identities: reduced, equals t_lambda, straight to
 * `depth` powers.  i = 0 runs every simple-root index. */
int aw_verify_translation(const aw_rootsys* rs, int i, int depth, int as_json, char** out);

/* Period words of length-additive factorizations of the quotient element.
 * exhaustive != 0 checks every split; otherwise only the trivial split. */
int aw_verify_periods(const aw_rootsys* rs, int i, int depth, int exhaustive, int as_json,
                      char** out);

/* Count of minimal elements: closed formula, optionally cross-checked by
 * brute-force orbit enumeration. */
int aw_verify_counts(const aw_rootsys* rs, int brute_force, int as_json, char** out);

/* Atoms of the biclosed poset by exhaustive enumeration (small ranks). */
int aw_verify_atoms(const aw_rootsys* rs, int as_json, char** out);

/* Weyl-group action on Coxeter elements: well-definedness, quotient and
 * translation identities, orbit and stabilizer sizes (type C). */
int aw_verify_coxeter_action(const aw_rootsys* rs, int as_json, char** out);
int aw_verify_coxeter_correspondence(const aw_rootsys* rs, int as_json, char** out);

/* Frozen special cases. */
int aw_verify_b4_counterexample(int as_json, char** out);
int aw_verify_g2_periods(int as_json, char** out);
int aw_verify_f4_periods(int as_json, char** out);

void aw_string_free(char* s);
const char* aw_last_error(void);

#ifdef __cplusplus
}
#endif

#endif /* AFFWEYL_H */
