/*
 * raaglie — Lyndon bases, Magnus expansions, and lower-central-series
 * quotients for right-angled Artin groups.
 *
 * C interface to the shared library.  All computations run against an
 * opaque graph handle created from a JSON document of the form
 *   {"vertices": ["v1", "v2", ...], "edges": [["v2", "v3"], ...]}
 * where an edge between two vertices declares that the corresponding
 * generators commute.  Vertex order in the document is the generator
 * order used everywhere.
 *
 * Functions that produce output allocate a NUL-terminated string through
 * `out`; release it with raaglie_string_free.  On failure they return a
 * nonzero status and leave `*out` untouched; raaglie_last_error() then
 * describes the failure (per thread, valid until the next library call on
 * the same thread).
 */

#ifndef RAAGLIE_H
#define RAAGLIE_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct raaglie_graph raaglie_graph;

typedef enum raaglie_status {
  RAAGLIE_OK = 0,
  RAAGLIE_ERR_PARSE = 1,    /* malformed graph document, trace, or word */
  RAAGLIE_ERR_DOMAIN = 2,   /* request has no answer in the model */
  RAAGLIE_ERR_LIMIT = 3,    /* a resource cap was reached */
  RAAGLIE_ERR_ARGUMENT = 4, /* null handle or out-of-range parameter */
  RAAGLIE_ERR_INTERNAL = 5
} raaglie_status;

typedef enum raaglie_format {
  RAAGLIE_FORMAT_TEXT = 0,
  RAAGLIE_FORMAT_JSON = 1
} raaglie_format;

/* Graph handles. */
raaglie_status raaglie_graph_parse(const char* json_text, raaglie_graph** out);
raaglie_status raaglie_graph_parse_file(const char* path, raaglie_graph** out);
void raaglie_graph_free(raaglie_graph* graph);
int raaglie_graph_vertex_count(const raaglie_graph* graph);
raaglie_status raaglie_graph_serialize(const raaglie_graph* graph, char** out);

/*
 * Lyndon elements of length <= max_len with their standard bracketings,
 * grouped by length.
 */
raaglie_status raaglie_lyndon(const raaglie_graph* graph, int max_len,
                              raaglie_format format, char** out);

/*
 * Basis of the degree-`degree` lower-central-series quotient, as nested
 * commutators of generators.
 */
raaglie_status raaglie_lcs_basis(const raaglie_graph* graph, int degree,
                                 raaglie_format format, char** out);

/*
 * Expansion of a group word under v -> 1 + v, truncated at `truncation`.
 * Word grammar: whitespace-separated "name" or "name^integer" syllables,
 * plus commutator shorthand "[x,y]"; "1" is the identity.
 */
raaglie_status raaglie_magnus(const raaglie_graph* graph, const char* word,
                              int truncation, raaglie_format format, char** out);

/* Canonical fully reduced form of a group word. */
raaglie_status raaglie_normal_form(const raaglie_graph* graph, const char* word,
                                   raaglie_format format, char** out);

/*
 * Filtration-degree verdict for a word at the queried degree.  truncation
 * <= 0 selects the default degree + 1.
 */
raaglie_status raaglie_member(const raaglie_graph* graph, const char* word,
                              int degree, int truncation, raaglie_format format,
                              char** out);

/*
 * Coordinates of the word in the Lyndon basis of the degree-`degree`
 * quotient.  Fails with RAAGLIE_ERR_DOMAIN when the word does not lie at
 * filtration level >= degree.
 */
raaglie_status raaglie_coords(const raaglie_graph* graph, const char* word,
                              int degree, int truncation, raaglie_format format,
                              char** out);

/*
 * Structure constants: coordinates of the bracket of two Lyndon elements
 * (each given as a whitespace-separated trace) in the Lyndon basis.
 */
raaglie_status raaglie_structure(const raaglie_graph* graph, const char* lyndon_a,
                                 const char* lyndon_b, raaglie_format format,
                                 char** out);

/*
 * Growth-series cross-check up to degree max_deg: clique polynomial,
 * Lyndon ranks, and the equality of the rank product with the growth
 * series of the trace monoid.
 */
raaglie_status raaglie_verify_series(const raaglie_graph* graph, int max_deg,
                                     raaglie_format format, char** out);

void raaglie_string_free(char* s);
const char* raaglie_last_error(void);

/* Cap on polynomial term counts (default 1000000). */
void raaglie_set_max_terms(size_t max_terms);

#ifdef __cplusplus
}
#endif

#endif /* RAAGLIE_H */
