/* cogsim.h - C interface to the cogsim cognitive-agent simulator.
 *
 * All functions return a cogsim_status; COGSIM_OK is 0. On failure a
 * human-readable detail message is available from cogsim_last_error()
 * until the next failing call on the same thread. Objects returned
 * through out-parameters are owned by the caller and released with the
 * matching *_free function. NULL out-parameters are invalid arguments.
 */

#ifndef COGSIM_H
#define COGSIM_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct cogsim_config cogsim_config;
typedef struct cogsim_agent cogsim_agent;
typedef struct cogsim_result cogsim_result;

typedef enum cogsim_status {
    COGSIM_OK = 0,
    COGSIM_ERR_ARGUMENT = 1,  /* null or out-of-domain argument */
    COGSIM_ERR_CONFIG = 2,    /* configuration invariant violated */
    COGSIM_ERR_PARSE = 3,     /* malformed config/stream/table text */
    COGSIM_ERR_IO = 4,        /* file not readable or writable */
    COGSIM_ERR_DIMENSION = 5, /* vector length does not match k */
    COGSIM_ERR_STREAM = 6,    /* step numbering violation */
    COGSIM_ERR_DOMAIN = 7,    /* unknown label/class without fallback */
    COGSIM_ERR_INTERNAL = 8
} cogsim_status;

/* Scalar results of one cascade step. */
typedef struct cogsim_step_trace {
    long long step;
    double layer_mean[4]; /* mean component of r1..r4 */
    double attention;
    double awareness;
    double consciousness;
    double probability[4];
    double expectation[4];
    double graph_entropy[4];
    double graph_energy[4];
    double intensity[4];
    char top_class[64];
    int semantic_environment; /* -1, 0, 1 */
    int semantic_subjective;
} cogsim_step_trace;

const char *cogsim_version(void);
const char *cogsim_status_name(cogsim_status status);
/* Detail message of the last failing call on this thread ("" if none). */
const char *cogsim_last_error(void);

/* -- configuration ------------------------------------------------- */

cogsim_status cogsim_config_default(cogsim_config **out);
cogsim_status cogsim_config_load(const char *path, cogsim_config **out);
cogsim_status cogsim_config_save(const cogsim_config *cfg, const char *path);
cogsim_status cogsim_config_dimension(const cogsim_config *cfg, size_t *out_k);
void cogsim_config_free(cogsim_config *cfg);

/* -- streaming agent ------------------------------------------------ */

cogsim_status cogsim_agent_new(const cogsim_config *cfg, int support_enabled,
                               cogsim_agent **out);
/* Steps the agent once. Steps are numbered 1,2,3,... internally; label
 * may be NULL for an unlabeled stimulus. out_trace may be NULL. */
cogsim_status cogsim_agent_step(cogsim_agent *agent, const char *label,
                                const double *features, size_t n_features,
                                cogsim_step_trace *out_trace);
void cogsim_agent_free(cogsim_agent *agent);

/* -- batch runs ------------------------------------------------------ */

cogsim_status cogsim_run_file(const cogsim_config *cfg,
                              const char *stimuli_path, int support_enabled,
                              cogsim_result **out);
/* Two runs over the same stream, without and with support. */
cogsim_status cogsim_paired_file(const cogsim_config *cfg,
                                 const char *stimuli_path,
                                 cogsim_result **out_no_support,
                                 cogsim_result **out_with_support);

size_t cogsim_result_steps(const cogsim_result *result);
cogsim_status cogsim_result_trace(const cogsim_result *result, size_t index,
                                  cogsim_step_trace *out_trace);
/* Writes traces.csv, summary.json, graph_nodes.csv, graph_edges.csv. */
cogsim_status cogsim_result_save(const cogsim_result *result,
                                 const char *directory);
/* Writes only the two graph files. */
cogsim_status cogsim_result_save_graphs(const cogsim_result *result,
                                        const char *directory);
void cogsim_result_free(cogsim_result *result);

/* Group-mean comparison of a paired run, written as CSV. */
cogsim_status cogsim_write_delta_report(const cogsim_result *no_support,
                                        const cogsim_result *with_support,
                                        const char *path);

/* -- tools ------------------------------------------------------------ */

/* Recomputes summary.json from a saved traces.csv. */
cogsim_status cogsim_stats_file(const char *traces_csv_path,
                                const char *out_summary_json_path);

/* Suggested sensation/perception/affection bounds: the maximum observed
 * component over the stream, 1.0 when no positive activity occurred. */
cogsim_status cogsim_calibrate_file(const cogsim_config *cfg,
                                    const char *stimuli_path,
                                    double *out_sensation_bound,
                                    double *out_perception_bound,
                                    double *out_affection_bound);

/* Deterministic synthetic episode written as a stimulus stream. */
cogsim_status cogsim_synthesize_episode(const cogsim_config *cfg, size_t steps,
                                        unsigned seed, const char *out_path);

#ifdef __cplusplus
}
#endif

#endif /* COGSIM_H */
