#ifndef COCHAIN_NET_H
#define COCHAIN_NET_H

/* C interface to the cochain-net simulator. The core is C++; this surface
 * exposes it behind opaque handles and integer status codes so that any
 * runtime able to call C can drive it. All returned strings are heap
 * allocations owned by the caller (release with cn_string_free). */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cn_status {
    CN_OK = 0,
    CN_ERROR = 1,     /* internal failure */
    CN_INVALID = 2,   /* parse or validation failure */
    CN_INFEASIBLE = 3 /* attack finished degenerate / with several candidates */
} cn_status;

/* An opaque parsed scenario. */
typedef struct cn_scenario cn_scenario;

/* Parse a scenario from a file or from memory. On success *out receives a
 * handle to free with cn_scenario_free; on failure it is set to NULL and
 * cn_last_error() describes the problem. */
cn_status cn_scenario_load(const char* path, cn_scenario** out);
cn_status cn_scenario_parse(const char* toml_text, cn_scenario** out);
void cn_scenario_free(cn_scenario* scenario);

/* Run one subcommand. `scenario` may be NULL for scenario-free commands
 * ("dh", "cost"). `flags` holds nflags "key=value" strings, e.g.
 * "path=A,B,C". *json_out receives the full JSON report (also on failures,
 * as {"error": {...}}); release it with cn_string_free. The status value
 * matches the CLI exit code. */
cn_status cn_run(const cn_scenario* scenario, const char* command,
                 const char* const* flags, size_t nflags, char** json_out);

/* Names of every available command as a JSON array. */
char* cn_commands(void);

/* Message for the most recent failure on this thread. */
const char* cn_last_error(void);

void cn_string_free(char* s);

const char* cn_version(void);

#ifdef __cplusplus
}
#endif

#endif /* COCHAIN_NET_H */
