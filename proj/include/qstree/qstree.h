/* qstree: analyses of vertex colorings of regular trees given as
 * edge-indexed quotient graphs.
 *
 * Every function returns QST_OK (0) on success or an error code; the
 * message for the calling thread's last failure is available via
 * qst_last_error(). Strings returned through `char**` are heap-allocated
 * and must be released with qst_string_free().
 */
#ifndef QSTREE_H
#define QSTREE_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct qst_spec qst_spec;
typedef struct qst_analysis qst_analysis;

enum {
    QST_OK = 0,
    QST_ERR_PARSE = 1,        /* input text rejected (syntax or validation) */
    QST_ERR_INCONSISTENT = 2, /* a structural guarantee failed on the data */
    QST_ERR_LIMIT = 3,        /* horizon or search cap insufficient */
    QST_ERR_ARG = 4           /* bad argument / null handle */
};

const char* qst_version(void);
const char* qst_last_error(void);
void qst_string_free(char* s);

/* ---- descriptions ---- */
int qst_spec_parse(const char* text, qst_spec** out);
int qst_spec_example(const char* fixture_id, qst_spec** out);
int qst_spec_serialize(const qst_spec* spec, char** out);
void qst_spec_free(qst_spec* spec);

/* qst text for an embedded fixture id without constructing a handle */
int qst_example_text(const char* fixture_id, char** out);

/* ---- analyses over one description ----
 * max_n bounds the ball radius of the complexity window. Emitters that
 * need a wider window (evolution, predictions) enlarge it internally. */
int qst_analysis_create(const qst_spec* spec, int max_n, qst_analysis** out);
void qst_analysis_free(qst_analysis* a);

int qst_complexity_csv(qst_analysis* a, char** out);
int qst_balls_text(qst_analysis* a, int n, int with_codes, char** out);
int qst_factor_graph_dot(qst_analysis* a, int n, char** out);
int qst_evolution_csv(qst_analysis* a, int n_lo, int n_hi, char** out);
int qst_structure_text(qst_analysis* a, char** out);
int qst_tail_quotient_qst(qst_analysis* a, char** out);
int qst_recurrence_csv(qst_analysis* a, int with_predictions, char** out);

/* full invariant suite; returns QST_OK even when items fail -- the report
 * carries per-item lines and *exit_code carries 0/2/3 */
int qst_check_report(qst_analysis* a, char** out, int* exit_code);

/* ---- the word family on the 2-regular tree ---- */
int qst_word_report(int k_max, int max_n, char** out);
int qst_word_check(int k_max, char** out, int* exit_code);

#ifdef __cplusplus
}
#endif

#endif /* QSTREE_H */
