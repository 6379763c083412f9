// Copyright 2026 The FRIO Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FRIO_FRIO_H
#define FRIO_FRIO_H

/* C interface to the FRIO discrimination library. Every function returns a
 * status code; on failure frio_last_error() describes the problem (per thread,
 * valid until the next failing call on that thread). Handles are opaque and
 * must be released with the matching _free function. */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define FRIO_API __attribute__((visibility("default")))
#else
#define FRIO_API
#endif

typedef enum {
    FRIO_OK = 0,
    /* Argument outside the mathematical domain of the operation. */
    FRIO_ERR_DOMAIN = 1,
    /* Malformed configuration, override or data file. */
    FRIO_ERR_CONFIG = 2,
    /* Null pointer or index out of range. */
    FRIO_ERR_ARGUMENT = 3,
    /* File could not be read or written. */
    FRIO_ERR_IO = 4,
    /* Numerical failure or any other unexpected error. */
    FRIO_ERR_RUNTIME = 5
} frio_status;

typedef struct frio_config frio_config;
typedef struct frio_artifacts frio_artifacts;

FRIO_API const char *frio_version(void);
FRIO_API const char *frio_last_error(void);
FRIO_API const char *frio_status_name(frio_status s);

/* Closed forms. Angles are in radians. */
FRIO_API frio_status frio_q_mc(double theta, double *out);
FRIO_API frio_status frio_pe_min(int n, double q, double q_mc, double *out);
FRIO_API frio_status frio_success_probability(double theta, double theta_out, double *out);
FRIO_API frio_status frio_me_error_rate(int n, double theta_out, double *out);
FRIO_API frio_status frio_probabilities(int n, double theta, double theta_out, double *p_error, double *p_correct,
                                        double *q_inconclusive);

/* Separation angle implemented at gray level gl by a calibration CSV. */
FRIO_API frio_status frio_calibration_theta(const char *csv_path, int gl, double theta, double *out);

/* Configuration. A default configuration is valid as is. */
FRIO_API frio_status frio_config_new(frio_config **out);
/* Relative paths inside json_text are resolved against base_dir (may be NULL for "."). */
FRIO_API frio_status frio_config_from_json(const char *json_text, const char *base_dir, frio_config **out);
FRIO_API frio_status frio_config_load(const char *path, frio_config **out);
/* Applies a dotted key=value override and revalidates; the handle is unchanged on failure. */
FRIO_API frio_status frio_config_set(frio_config *cfg, const char *assignment);
FRIO_API void frio_config_free(frio_config *cfg);

/* Commands: curves, sweep, bloch, oracle, fitdemo, calibration. passed (may be
 * NULL) receives 0 when the oracle gap check fails, 1 otherwise. */
FRIO_API frio_status frio_run(const char *verb, const frio_config *cfg, frio_artifacts **out, int *passed);
FRIO_API size_t frio_artifacts_count(const frio_artifacts *a);
FRIO_API const char *frio_artifacts_name(const frio_artifacts *a, size_t i);
FRIO_API const char *frio_artifacts_content(const frio_artifacts *a, size_t i, size_t *length);
FRIO_API const char *frio_artifacts_summary(const frio_artifacts *a);
FRIO_API void frio_artifacts_free(frio_artifacts *a);

#ifdef __cplusplus
}
#endif

#endif
