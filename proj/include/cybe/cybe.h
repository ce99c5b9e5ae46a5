#ifndef CYBE_H
#define CYBE_H

/* C interface to the cybe shared library.
 *
 * All functionality is driven through documents: JSON texts with an
 * explicit schema_version, a kind (lie_algebra, rmatrix, subalgebra,
 * lattice, equivalence, report) and a body.  Commands consume documents
 * and produce a report (or result) document plus a status that mirrors
 * the CLI exit codes.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct cybe_document cybe_document;

typedef enum cybe_status {
    CYBE_OK = 0,            /* verified / classified / produced */
    CYBE_FAIL = 1,          /* property fails; the report carries a witness */
    CYBE_UNDETERMINED = 2,  /* undetermined or window too narrow */
    CYBE_INPUT_ERROR = 3    /* malformed input, schema mismatch, bad options */
} cybe_status;

const char* cybe_version(void);

/* Parse a document. Returns NULL on failure; *error_out (if non-NULL)
 * receives a message owned by the caller (free with cybe_string_free). */
cybe_document* cybe_document_parse(const char* text, size_t len, char** error_out);

/* Serialize a document; the returned string is owned by the caller. */
char* cybe_document_emit(const cybe_document* doc);

const char* cybe_document_kind(const cybe_document* doc);

void cybe_document_free(cybe_document* doc);

/* Run a command ("verify", "skew-check", "extract", "reconstruct",
 * "normalize", "equiv-apply", "diff-normalize", "cobracket-check",
 * "multipliers", "classify", "lattice-index").  options_json is a JSON
 * object string or NULL; inputs are borrowed.  On success *report_out
 * receives a new document owned by the caller.  The returned status is
 * the CLI exit code of the command. */
cybe_status cybe_run_command(const char* command, const char* options_json,
                             const cybe_document* const* inputs, size_t n_inputs,
                             cybe_document** report_out, char** error_out);

void cybe_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* CYBE_H */
