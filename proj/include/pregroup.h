#ifndef PREGROUP_H
#define PREGROUP_H

/* C interface to the pregroup grammar engine.
 *
 * All entry points return a pg_status; results travel through out-parameters.
 * On failure the out-parameter is untouched and pg_last_error() describes the
 * problem for the calling thread.  Strings handed out through char** are
 * malloc'd; release them with pg_string_free.  Handles are opaque and must be
 * released with their matching _free function; a handle may outlive the
 * grammar handle it was created from.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pg_status {
  PG_OK = 0,
  PG_ERR_IO = 1,
  PG_ERR_FORMAT = 2,
  PG_ERR_LOOKUP = 3,
  PG_ERR_PRECONDITION = 4,
  PG_ERR_UNSUPPORTED = 5,
  PG_ERR_INVALID_ARGUMENT = 6,
  PG_ERR_INTERNAL = 7
} pg_status;

typedef struct pg_grammar pg_grammar;
typedef struct pg_parse pg_parse;
typedef struct pg_connectivity pg_connectivity;
typedef struct pg_report pg_report;

const char* pg_version(void);

/* Message for the calling thread's most recent failed call; empty string when
 * the most recent call succeeded. */
const char* pg_last_error(void);

void pg_string_free(char* s);

/* -- grammars ------------------------------------------------------------ */

pg_status pg_grammar_load(const char* path, pg_grammar** out);
pg_status pg_grammar_from_json(const char* json_text, pg_grammar** out);

/* Copy of the grammar with one type added or retyped; word_text is in term
 * syntax ("n^r s n^l", "1" for the empty word). */
pg_status pg_grammar_with_type(const pg_grammar* g, const char* name, const char* word_text,
                               pg_grammar** out);

pg_status pg_grammar_sentence(const pg_grammar* g, char** out);
size_t pg_grammar_type_count(const pg_grammar* g);
pg_status pg_grammar_type_name(const pg_grammar* g, size_t index, char** out);
void pg_grammar_free(pg_grammar* g);

/* -- words --------------------------------------------------------------- */

/* PG_OK iff word_text parses over the grammar's generators. */
pg_status pg_word_check(const pg_grammar* g, const char* word_text);

/* Free pregroup order between two words given in term syntax. */
pg_status pg_leq(const pg_grammar* g, const char* w_text, const char* v_text, int* holds);
pg_status pg_contracts_to_empty(const pg_grammar* g, const char* w_text, int* holds);

/* -- parsing ------------------------------------------------------------- */

/* types_text / surface_text are whitespace-separated names; cap bounds the
 * number of reduction diagrams enumerated (0 picks the default, 10000). */
pg_status pg_parse_types(const pg_grammar* g, const char* types_text, size_t cap, pg_parse** out);
pg_status pg_parse_surface(const pg_grammar* g, const char* surface_text, size_t cap,
                           pg_parse** out);

int pg_parse_grammatical(const pg_parse* p);
size_t pg_parse_diagram_count(const pg_parse* p);
int pg_parse_truncated(const pg_parse* p);

/* Bracketed word with underscore arcs for one enumerated diagram. */
pg_status pg_parse_render_text(const pg_parse* p, size_t diagram_index, char** out);
pg_status pg_parse_to_json(const pg_parse* p, char** out);
void pg_parse_free(pg_parse* p);

/* -- causal connectivity ------------------------------------------------- */

/* mode is "exists" or "forall".  Fails with PG_ERR_PRECONDITION when the type
 * string is not grammatical. */
pg_status pg_connect(const pg_grammar* g, const char* types_text, const char* mode, size_t cap,
                     pg_connectivity** out);

int pg_connectivity_connected(const pg_connectivity* c);
size_t pg_connectivity_component_count(const pg_connectivity* c);

/* Components as text, e.g. "{0,1}{2,3}". */
pg_status pg_connectivity_components_text(const pg_connectivity* c, char** out);
pg_status pg_connectivity_to_dot(const pg_connectivity* c, char** out);
pg_status pg_connectivity_to_json(const pg_connectivity* c, char** out);
void pg_connectivity_free(pg_connectivity* c);

/* -- model checks and self-validation ------------------------------------ */

/* property is "s-connected", "simply-reducing" or "lint"; bound and mode are
 * ignored where they do not apply.  A report "passes" when nothing was
 * flagged; counterexamples and lint findings are in the text/JSON payloads. */
pg_status pg_check(const pg_grammar* g, const char* property, size_t bound, const char* mode,
                   size_t cap, pg_report** out);

/* Engine-vs-oracle and algebraic-law suite over a generated discrete poset
 * with the given number of generators. */
pg_status pg_run_properties(size_t max_len, int max_index, size_t generators, pg_report** out);

int pg_report_passed(const pg_report* r);
size_t pg_report_finding_count(const pg_report* r);
pg_status pg_report_text(const pg_report* r, char** out);
pg_status pg_report_to_json(const pg_report* r, char** out);
void pg_report_free(pg_report* r);

#ifdef __cplusplus
}
#endif

#endif /* PREGROUP_H */
