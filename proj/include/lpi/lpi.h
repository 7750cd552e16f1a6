/* SPDX-License-Identifier: Apache-2.0 */
/**
 * \file lpi.h
 * C interface to the laser pulse interference simulator.
 *
 * All functions return an lpi_status. On failure a message for the calling
 * thread is available from lpi_last_error() until the next call.
 * Handles are opaque and owned by the caller; release them with the
 * matching *_free function. Strings returned by accessors stay valid until
 * the owning handle is freed.
 */
#ifndef LPI_LPI_H
#define LPI_LPI_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#    if defined(LPI_BUILDING_LIBRARY)
#        define LPI_API __declspec(dllexport)
#    else
#        define LPI_API __declspec(dllimport)
#    endif
#else
#    define LPI_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lpi_status
{
    LPI_OK = 0,
    LPI_ERR_INVALID_ARGUMENT = 1,
    LPI_ERR_PARSE = 2,
    LPI_ERR_VALIDATION = 3,
    LPI_ERR_NUMERICAL = 4,
    LPI_ERR_SAMPLING = 5,
    LPI_ERR_IO = 6,
    LPI_ERR_INTERNAL = 7
} lpi_status;

typedef struct lpi_scenario lpi_scenario;
typedef struct lpi_result lpi_result;
typedef struct lpi_verify_result lpi_verify_result;

LPI_API char const* lpi_version(void);
LPI_API char const* lpi_status_string(lpi_status status);
/** Message of the last failed call on this thread, "" if none. */
LPI_API char const* lpi_last_error(void);

/* Scenario: one or more runs sharing overrides. */
LPI_API lpi_status lpi_scenario_load_preset(char const* name, lpi_scenario** out);
LPI_API lpi_status lpi_scenario_load_config_file(char const* path, lpi_scenario** out);
LPI_API lpi_status lpi_scenario_load_config_text(char const* text, lpi_scenario** out);
LPI_API void lpi_scenario_free(lpi_scenario* scenario);

LPI_API lpi_status lpi_scenario_run_count(lpi_scenario const* scenario, size_t* count);
LPI_API lpi_status lpi_scenario_run_name(lpi_scenario const* scenario, size_t index,
                                         char const** name);
LPI_API lpi_status lpi_scenario_set_seed(lpi_scenario* scenario, uint64_t seed);
LPI_API lpi_status lpi_scenario_set_iterations(lpi_scenario* scenario, uint64_t iterations);
/** Worker threads for the Monte-Carlo; 0 selects the hardware concurrency. */
LPI_API lpi_status lpi_scenario_set_threads(lpi_scenario* scenario, unsigned threads);
LPI_API lpi_status lpi_scenario_set_emit_samples(lpi_scenario* scenario, int enabled);
/** Full-precision config text of one run, parseable by load_config_text. */
LPI_API lpi_status lpi_scenario_render_config(lpi_scenario const* scenario, size_t index,
                                              char const** text);

/**
 * Run every run of the scenario. When out_dir is non-NULL the output files
 * of each run are written there.
 */
LPI_API lpi_status lpi_scenario_execute(lpi_scenario const* scenario, char const* out_dir,
                                        lpi_result** out);
/** Dynamics and spectrum only; histogram accessors report zero peaks. */
LPI_API lpi_status lpi_scenario_spectrum(lpi_scenario const* scenario, char const* out_dir,
                                         lpi_result** out);

LPI_API void lpi_result_free(lpi_result* result);
LPI_API size_t lpi_result_run_count(lpi_result const* result);
LPI_API char const* lpi_result_run_name(lpi_result const* result, size_t index);
LPI_API lpi_status lpi_result_peak_count(lpi_result const* result, size_t index, size_t* count);
LPI_API lpi_status lpi_result_peak_location(lpi_result const* result, size_t index,
                                            size_t peak, double* location);
LPI_API lpi_status lpi_result_bimodal(lpi_result const* result, size_t index, int* bimodal);
/** Wall-clock seconds of one run: dynamics, spectrum, monte-carlo, total. */
LPI_API lpi_status lpi_result_timings(lpi_result const* result, size_t index, double out[4]);
/** JSON sidecar text for one run. */
LPI_API lpi_status lpi_result_metadata_json(lpi_result const* result, size_t index,
                                            char const** json);
/** Number of files written for one run and their paths. */
LPI_API lpi_status lpi_result_file_count(lpi_result const* result, size_t index, size_t* count);
LPI_API lpi_status lpi_result_file_path(lpi_result const* result, size_t index, size_t file,
                                        char const** path);

/* Analytic-oracle self-check. */
LPI_API lpi_status lpi_verify_run(lpi_verify_result** out);
LPI_API void lpi_verify_free(lpi_verify_result* result);
LPI_API size_t lpi_verify_count(lpi_verify_result const* result);
LPI_API char const* lpi_verify_name(lpi_verify_result const* result, size_t index);
LPI_API int lpi_verify_passed(lpi_verify_result const* result, size_t index);
LPI_API char const* lpi_verify_detail(lpi_verify_result const* result, size_t index);

#ifdef __cplusplus
}
#endif

#endif /* LPI_LPI_H */
