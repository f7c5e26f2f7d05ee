/* Copyright 2026 The gradedcartan Authors
 *
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

/* C interface to the graded Cartan calculus engine.
 *
 * All state lives in an opaque workspace handle.  Inputs are expression
 * strings resolved against the workspace; outputs are freshly allocated
 * canonical text, released with gc_string_free.  Every function returns
 * GC_OK or an error status; gc_last_error() describes the most recent
 * failure on the calling thread.
 */

#ifndef GRADEDCARTAN_H
#define GRADEDCARTAN_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct gc_workspace gc_workspace;

typedef enum gc_status {
  GC_OK = 0,
  GC_ERR_PARSE = 1,
  GC_ERR_VERSION = 2,
  GC_ERR_UNBOUND_NAME = 3,
  GC_ERR_DUPLICATE_NAME = 4,
  GC_ERR_TYPE_MISMATCH = 5,
  GC_ERR_DIMENSION = 6,
  GC_ERR_INDEX = 7,
  GC_ERR_ODD_POWER = 8,
  GC_ERR_OMEGA = 9,
  GC_ERR_DECODE = 10,
  GC_ERR_CALIBRATION = 11,
  GC_ERR_SOLVE = 12,
  GC_ERR_IO = 13,
  GC_ERR_INTERNAL = 14
} gc_status;

const char* gc_version(void);

/* Message for the last failing call on this thread; never NULL. */
const char* gc_last_error(void);

void gc_string_free(char* s);

gc_status gc_workspace_load_file(const char* path, gc_workspace** out);
gc_status gc_workspace_load_text(const char* text, gc_workspace** out);
gc_status gc_workspace_save_text(const gc_workspace* ws, char** out);
void gc_workspace_free(gc_workspace* ws);

/* Polynomial-valued operations; *out receives canonical expression text. */
gc_status gc_eval(const gc_workspace* ws, const char* expr, char** out);
gc_status gc_epb(const gc_workspace* ws, const char* a, const char* b,
                 char** out);
gc_status gc_ext_d(const gc_workspace* ws, const char* form, char** out);
gc_status gc_interior(const gc_workspace* ws, const char* field,
                      const char* form, char** out);
gc_status gc_lie_derivative(const gc_workspace* ws, const char* field,
                            const char* arg, char** out);
gc_status gc_flat(const gc_workspace* ws, const char* field, char** out);
gc_status gc_sharp(const gc_workspace* ws, const char* fn, char** out);

/* Bracket operations; *out receives one "index-tuple : polynomial" line per
 * component, sorted by tuple, or "0" for an empty result. */
gc_status gc_lie_bracket(const gc_workspace* ws, const char* a, const char* b,
                         char** out);
gc_status gc_sn_bracket(const gc_workspace* ws, const char* a, const char* b,
                        char** out);
gc_status gc_fn_bracket(const gc_workspace* ws, const char* a, const char* b,
                        char** out);
gc_status gc_nr_bracket(const gc_workspace* ws, const char* a, const char* b,
                        char** out);

/* The five fixed charges of the workspace, one "name = polynomial" line each. */
gc_status gc_charges(const gc_workspace* ws, char** out);

/* Measured bracket normalization constants, one "k_name = value" line each. */
gc_status gc_calibrate(char** out);

/* Runs the built-in identity battery.  *report receives the per-suite text,
 * *failures the number of failed checks.  Returns GC_OK when the battery ran,
 * even if some checks failed. */
gc_status gc_verify(uint64_t seed, unsigned cases, char** report,
                    unsigned* failures);

#ifdef __cplusplus
}
#endif

#endif /* GRADEDCARTAN_H */
