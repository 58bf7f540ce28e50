/* Copyright 2026 The diacat Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
/* C interface to diacat. Objects are opaque handles; every call returns a
 * status and leaves a message in diacat_last_error() on failure. Strings
 * handed out by the library are released with diacat_string_free(). */

#ifndef DIACAT_H
#define DIACAT_H

#include <stddef.h>
#include <stdint.h>

#if defined(DIACAT_BUILDING_LIBRARY)
#define DIACAT_API __attribute__((visibility("default")))
#else
#define DIACAT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum diacat_status {
  DIACAT_OK = 0,
  DIACAT_MATH_FAILURE = 1,  /* a check failed or an object is invalid */
  DIACAT_INPUT_ERROR = 2,   /* parse, shape, field, flavor or name errors */
  DIACAT_RESOURCE_CAP = 3,  /* dimension cap or hom-search budget */
  DIACAT_INTERNAL_ERROR = 4,
  DIACAT_INVALID_ARGUMENT = 5 /* NULL where a value was required */
} diacat_status;

typedef struct diacat_object diacat_object;

DIACAT_API const char *diacat_version(void);

/* Message and error name of the last failing call on this thread; "" when
 * the last call succeeded. Valid until the next call on the thread. */
DIACAT_API const char *diacat_last_error(void);
DIACAT_API const char *diacat_last_error_kind(void);

DIACAT_API void diacat_string_free(char *s);

/* Parses a JSON document (algebra, crossed module, cat1 object or internal
 * category). Only the structure is validated here. */
DIACAT_API diacat_status diacat_load_document(const char *json, diacat_object **out);
DIACAT_API diacat_status diacat_load_fixture(const char *name, diacat_object **out);
DIACAT_API void diacat_object_free(diacat_object *obj);

/* "algebra", "xmod", "cat1" or "internal"; NULL for a NULL handle. */
DIACAT_API const char *diacat_object_kind(const diacat_object *obj);
/* Fixture name, or "" for parsed and constructed objects. */
DIACAT_API const char *diacat_object_name(const diacat_object *obj);
DIACAT_API diacat_status diacat_object_to_document(const diacat_object *obj, char **json);

/* Runs the flavor checker. DIACAT_OK on PASS, DIACAT_MATH_FAILURE on FAIL;
 * the report is written in both cases. */
DIACAT_API diacat_status diacat_check(const diacat_object *obj, char **report);

/* Builds `kind` from the inputs at truncation trunc (0 means 2). out and
 * report may each be NULL. */
DIACAT_API diacat_status diacat_construct(const char *kind, const diacat_object *const *inputs,
                                          size_t n_inputs, size_t trunc, diacat_object **out,
                                          char **report);

/* Runs a verification battery. With n_objects == 0 the bundled battery is
 * used. DIACAT_OK when every item passes, DIACAT_MATH_FAILURE otherwise;
 * the report is written in both cases. */
DIACAT_API diacat_status diacat_verify(const char *what, const diacat_object *const *objects,
                                       size_t n_objects, size_t trunc, uint64_t seed,
                                       char **report);

/* JSON listings: [{"kind","name","note"}...], construction kinds, square ids. */
DIACAT_API diacat_status diacat_fixture_names(char **json);
DIACAT_API diacat_status diacat_construct_kinds(char **json);
DIACAT_API diacat_status diacat_square_ids(char **json);

#ifdef __cplusplus
}
#endif

#endif
