/*
 * Copyright 2026 The symvqc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to symvqc.
 *
 * Objects are opaque handles created by *_build / *_run / *_from_json and
 * released by the matching *_free. Every fallible call returns a
 * symvqc_status; on failure symvqc_last_error() describes the problem for
 * the calling thread. Strings returned through char** are owned by the
 * caller and released with symvqc_string_free.
 */
#ifndef SYMVQC_SYMVQC_H
#define SYMVQC_SYMVQC_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define SYMVQC_API __declspec(dllexport)
#else
#define SYMVQC_API __attribute__((visibility("default")))
#endif

typedef enum symvqc_status {
    SYMVQC_OK = 0,
    SYMVQC_ERR_NULL_ARGUMENT = 1,
    SYMVQC_ERR_INVALID_ARGUMENT = 2,
    SYMVQC_ERR_PARSE = 3,
    SYMVQC_ERR_OUT_OF_RANGE = 4,
    SYMVQC_ERR_RUNTIME = 5
} symvqc_status;

typedef struct symvqc_circuit symvqc_circuit;
typedef struct symvqc_fidelity_result symvqc_fidelity_result;
typedef struct symvqc_vqe_result symvqc_vqe_result;

SYMVQC_API const char *symvqc_version(void);
SYMVQC_API const char *symvqc_status_string(symvqc_status status);
/* Message for the last failed call on this thread ("" if none). */
SYMVQC_API const char *symvqc_last_error(void);
SYMVQC_API void symvqc_string_free(char *s);

/* ---- circuits ---- */

/* gate: "a" or "b". */
SYMVQC_API symvqc_status symvqc_circuit_build_brickwall(size_t sites, size_t particles, const char *gate,
                                                        symvqc_circuit **out);
/* Five-gate swap-augmented circuit for four sites and two particles. */
SYMVQC_API symvqc_status symvqc_circuit_build_swap24(const char *gate, symvqc_circuit **out);
SYMVQC_API symvqc_status symvqc_circuit_from_json(const char *json, symvqc_circuit **out);
SYMVQC_API symvqc_status symvqc_circuit_to_json(const symvqc_circuit *c, char **out);
SYMVQC_API void symvqc_circuit_free(symvqc_circuit *c);

typedef struct symvqc_circuit_info {
    size_t num_qubits;
    size_t particles;
    size_t parameterized_gates;
    size_t free_parameters;
    size_t cnots;
} symvqc_circuit_info;

SYMVQC_API symvqc_status symvqc_circuit_get_info(const symvqc_circuit *c, symvqc_circuit_info *info);

/* ---- fidelity span test ---- */

typedef enum symvqc_target_source {
    /* Haar-random states in the circuit's particle-number sector. */
    SYMVQC_TARGET_HAAR = 0,
    /* States prepared by the circuit itself at random parameters. */
    SYMVQC_TARGET_CIRCUIT = 1
} symvqc_target_source;

typedef struct symvqc_fidelity_options {
    size_t targets;
    uint64_t seed;
    symvqc_target_source source;
    /* Objective evaluations per start. */
    size_t max_iterations;
    /* Random starts per target (stops early once a start reaches 1 - 1e-9). */
    size_t starts;
} symvqc_fidelity_options;

SYMVQC_API void symvqc_fidelity_options_init(symvqc_fidelity_options *opts);
SYMVQC_API symvqc_status symvqc_fidelity_run(const symvqc_circuit *c, const symvqc_fidelity_options *opts,
                                             symvqc_fidelity_result **out);
SYMVQC_API size_t symvqc_fidelity_result_count(const symvqc_fidelity_result *r);
SYMVQC_API double symvqc_fidelity_result_value(const symvqc_fidelity_result *r, size_t index);
SYMVQC_API double symvqc_fidelity_result_mean(const symvqc_fidelity_result *r);
/* "target,fidelity" rows. */
SYMVQC_API symvqc_status symvqc_fidelity_result_csv(const symvqc_fidelity_result *r, char **out);
SYMVQC_API void symvqc_fidelity_result_free(symvqc_fidelity_result *r);

/* ---- VQE on the XXZ chain ---- */

typedef struct symvqc_vqe_options {
    double gamma;
    /* "open" or "periodic". */
    const char *boundary;
    /* 0 = exact expectation values; otherwise shots per measurement group. */
    size_t shots;
    double p1;
    double p2;
    double p_readout;
    /* Trajectories per energy evaluation when p1 or p2 is non-zero. */
    size_t trajectories;
    size_t trials;
    uint64_t seed;
    /* "nelder-mead" or "spsa". */
    const char *optimizer;
    size_t max_iterations;
    size_t starts;
    /* Worker threads for independent trials; results do not depend on it. */
    size_t threads;
} symvqc_vqe_options;

SYMVQC_API void symvqc_vqe_options_init(symvqc_vqe_options *opts);
SYMVQC_API symvqc_status symvqc_vqe_run(const symvqc_circuit *c, const symvqc_vqe_options *opts,
                                        symvqc_vqe_result **out);
/* Exact ground energy of the model in the circuit's particle-number sector. */
SYMVQC_API double symvqc_vqe_result_reference_energy(const symvqc_vqe_result *r);
SYMVQC_API size_t symvqc_vqe_result_steps(const symvqc_vqe_result *r);
SYMVQC_API size_t symvqc_vqe_result_trials(const symvqc_vqe_result *r);
/* Mean of (trace - reference) at the last step. */
SYMVQC_API double symvqc_vqe_result_final_mean_delta(const symvqc_vqe_result *r);
/* Lowest final energy over trials. */
SYMVQC_API double symvqc_vqe_result_best_energy(const symvqc_vqe_result *r);
SYMVQC_API double symvqc_vqe_result_trial_final_energy(const symvqc_vqe_result *r, size_t trial);
/* "step,delta_e_mean,delta_e_stderr" rows. */
SYMVQC_API symvqc_status symvqc_vqe_result_csv(const symvqc_vqe_result *r, char **out);
SYMVQC_API void symvqc_vqe_result_free(symvqc_vqe_result *r);

/* ---- self checks ---- */

/* suite: "gates", "symmetry", "mapping" or "all". Writes a table with one
 * line per check to *report and sets *all_passed to 0 or 1. */
SYMVQC_API symvqc_status symvqc_verify(const char *suite, char **report, int *all_passed);

#ifdef __cplusplus
}
#endif

#endif /* SYMVQC_SYMVQC_H */
