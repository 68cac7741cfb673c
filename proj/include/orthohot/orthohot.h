/* Copyright 2026 The orthohot Authors
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* orthohot: fixed-side square and cube hotspots of orthogonal trajectories.
 *
 * C interface to the shared library. All objects are opaque handles owned
 * by the library; every function that can fail returns an oht_status, with
 * a human-readable message available from oht_last_error() (thread-local).
 * Exact-mode numbers cross the boundary as strings so no precision is lost.
 */

#ifndef ORTHOHOT_ORTHOHOT_H
#define ORTHOHOT_ORTHOHOT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define OHT_API __declspec(dllexport)
#else
#define OHT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum oht_status {
  OHT_OK = 0,
  OHT_ERR_PARSE = 1,               /* malformed trajectory or record text */
  OHT_ERR_NON_MONOTONE_TIME = 2,   /* timestamps not strictly increasing */
  OHT_ERR_NON_ORTHOGONAL_STEP = 3, /* a step changes two coordinates */
  OHT_ERR_EMPTY_TRAJECTORY = 4,
  OHT_ERR_INVALID_ARGUMENT = 5, /* bad enum/flag combination, side <= 0, ... */
  OHT_ERR_IO = 6,
  OHT_ERR_INTERNAL = 7
} oht_status;

typedef enum oht_algo {
  OHT_ALGO_EXACT = 0,   /* brute-force candidate grid; the ground truth */
  OHT_ALGO_QUARTER = 1, /* corner-anchored Fenwick sweep, factor 1/4 */
  OHT_ALGO_HALF = 2     /* kinetic tournament sweep, factor 1/2 */
} oht_algo;

typedef enum oht_mode {
  OHT_MODE_EXACT = 0, /* exact rational arithmetic */
  OHT_MODE_FLOAT = 1  /* double precision; for benchmarking */
} oht_mode;

typedef struct oht_trajectory oht_trajectory;
typedef struct oht_result oht_result;

OHT_API const char* oht_status_name(oht_status status);

/* Message for the most recent failure on this thread; never NULL. */
OHT_API const char* oht_last_error(void);

/* --- trajectories ------------------------------------------------------- */

/* Text format: one vertex per line, `t,x,y` or `t,x,y,z`, finite decimal
 * numbers, `#` comments and an optional `t,x,y[,z]` header allowed.
 * Building validates monotone timestamps and axis-parallel steps. */
OHT_API oht_status oht_trajectory_parse_text(const char* text, oht_trajectory** out);
OHT_API oht_status oht_trajectory_load(const char* path, oht_trajectory** out);
OHT_API oht_status oht_trajectory_save(const oht_trajectory* t, const char* path);

/* kind: "walk", "cluster" or "comb"; dim 2 or 3. Deterministic per seed. */
OHT_API oht_status oht_trajectory_generate(const char* kind, uint64_t n, uint64_t seed, int dim,
                                           oht_trajectory** out);

OHT_API int oht_trajectory_dim(const oht_trajectory* t);
OHT_API size_t oht_trajectory_edge_count(const oht_trajectory* t);
OHT_API double oht_trajectory_total_duration(const oht_trajectory* t);

/* Endpoints and duration of edge `index` (coordinates rounded to double;
 * unused components are set to 0). */
OHT_API oht_status oht_trajectory_edge(const oht_trajectory* t, size_t index, double a[3],
                                       double b[3], double* duration);

OHT_API void oht_trajectory_free(oht_trajectory* t);

/* --- hotspot search ------------------------------------------------------ */

/* side: positive decimal (or p/q) text, parsed exactly in exact mode.
 * 3D trajectories route quarter/half through the slab reduction; exact runs
 * the 3D candidate grid. trace_path (may be NULL) writes the kinetic event
 * trace and is only supported for OHT_ALGO_HALF on 2D input. */
OHT_API oht_status oht_find_hotspot(const oht_trajectory* t, oht_algo algo, const char* side,
                                    oht_mode mode, const char* trace_path, oht_result** out);

/* The structured-text record (also the CLI's stdout format). */
OHT_API const char* oht_result_text(const oht_result* r);

/* Exact field text by key ("weight", "x", "side", ...); NULL if unknown. */
OHT_API const char* oht_result_field(const oht_result* r, const char* key);

OHT_API int oht_result_dim(const oht_result* r);
OHT_API double oht_result_weight(const oht_result* r);
OHT_API double oht_result_coord(const oht_result* r, int axis); /* 0=x 1=y 2=z */
OHT_API double oht_result_side(const oht_result* r);
OHT_API uint64_t oht_result_events(const oht_result* r);
OHT_API uint64_t oht_result_winner_changes(const oht_result* r);
OHT_API uint64_t oht_result_stale_events(const oht_result* r);
OHT_API uint64_t oht_result_runtime_ns(const oht_result* r);

OHT_API oht_status oht_result_parse_text(const char* text, oht_result** out);
OHT_API oht_status oht_result_load(const char* path, oht_result** out);
OHT_API void oht_result_free(oht_result* r);

/* --- plotting ------------------------------------------------------------ */

/* Static SVG of the trajectory (top view for 3D) with the result's square
 * overlaid when result is non-NULL. */
OHT_API oht_status oht_plot_svg(const oht_trajectory* t, const oht_result* result,
                                const char* out_path);

#ifdef __cplusplus
}
#endif

#endif /* ORTHOHOT_ORTHOHOT_H */
