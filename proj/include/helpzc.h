/* C interface for the helpzc shared library.
 *
 * All objects are opaque handles created and destroyed by the library.
 * Functions return HELPZC_OK on success; on failure helpzc_last_error()
 * gives a diagnostic for the calling thread. Strings returned through
 * out-parameters are heap-allocated and must be released with
 * helpzc_string_free().
 */
#ifndef HELPZC_H
#define HELPZC_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct helpzc_group helpzc_group;
typedef struct helpzc_report helpzc_report;

typedef enum {
    HELPZC_OK = 0,
    HELPZC_ERR_IO = 1,
    HELPZC_ERR_PARSE = 2,
    HELPZC_ERR_INVALID = 3,
    HELPZC_ERR_INTERNAL = 4
} helpzc_status;

typedef struct {
    int use_brauer;       /* nonzero: use bundled Brauer tables (default) */
    long fallback_bound;  /* < 0: fail when the system is unbounded (default) */
} helpzc_solve_options;

void helpzc_solve_options_init(helpzc_solve_options* opts);

/* Group data ingestion. */
helpzc_status helpzc_group_load_file(const char* path, helpzc_group** out);
helpzc_status helpzc_group_parse(const char* json_text, helpzc_group** out);
void helpzc_group_free(helpzc_group* g);

const char* helpzc_group_name(const helpzc_group* g);
unsigned long helpzc_group_exponent(const helpzc_group* g);

/* Second-orthogonality validation. *violations is set to a newline-separated
 * list, or NULL when the table passes. */
helpzc_status helpzc_group_validate(const helpzc_group* g, char** violations);

/* Solving. opts may be NULL for defaults. */
helpzc_status helpzc_solve_all(const helpzc_group* g, const helpzc_solve_options* opts,
                               helpzc_report** out);
helpzc_status helpzc_solve_order(const helpzc_group* g, unsigned long n,
                                 const helpzc_solve_options* opts, helpzc_report** out);
void helpzc_report_free(helpzc_report* r);

/* 1 when every checked order is NoSolutions or TrivialOnly. */
int helpzc_report_verified(const helpzc_report* r);
unsigned long helpzc_report_exceptional_count(const helpzc_report* r);

helpzc_status helpzc_report_render_text(const helpzc_report* r, char** out);
helpzc_status helpzc_report_render_json(const helpzc_report* r, char** out);

void helpzc_string_free(char* s);

/* Message for the most recent failure on this thread ("" if none). */
const char* helpzc_last_error(void);

#ifdef __cplusplus
}
#endif

#endif /* HELPZC_H */
