#ifndef MFG_H
#define MFG_H

/* C API for the mean-field-games spectral solver.
 *
 * All entry points are exception-free; failures are reported through the
 * return code and the caller-provided error buffer. Run codes follow the
 * CLI contract: 0 success, 1 error, 2 hypothesis (smallness) failure.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct mfg_config mfg_config;

/* Load and validate a config file. Returns 0 and sets *out on success;
 * returns 1 and writes a diagnostic into errbuf otherwise. */
int mfg_config_load(const char* path, mfg_config** out, char* errbuf, size_t errlen);

/* Parse a config from an in-memory string; same contract as mfg_config_load. */
int mfg_config_parse(const char* text, mfg_config** out, char* errbuf, size_t errlen);

void mfg_config_free(mfg_config* cfg);

/* Execute one batch command ("solve", "check-smallness", "verify-bounds",
 * "continuous-dependence", "weak-star", "oracle-compare"); report files are
 * written into out_dir. seed_override of 0 keeps the config's seed. threads
 * is a parallelism hint only. A human-readable status line is written into
 * msgbuf. Returns 0, 1 or 2 per the contract above. */
int mfg_run(const mfg_config* cfg, const char* command, const char* out_dir,
            unsigned long long seed_override, int threads, char* msgbuf,
            size_t msglen);

/* Canonical serialized form of a loaded config; writes into buf, returns the
 * full length required (excluding the terminator), or -1 on error. */
long mfg_config_serialize(const mfg_config* cfg, char* buf, size_t buflen);

const char* mfg_version(void);

#ifdef __cplusplus
}
#endif

#endif /* MFG_H */
