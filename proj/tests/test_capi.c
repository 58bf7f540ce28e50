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
/* Exercises the C interface through opaque handles only. */

#include <stdio.h>
#include <string.h>

#include "diacat/diacat.h"

static int failures = 0;

#define EXPECT(cond)                                                  \
  do {                                                                \
    if (!(cond)) {                                                    \
      fprintf(stderr, "%s:%d: EXPECT(%s) failed: %s\n", __FILE__,     \
              __LINE__, #cond, diacat_last_error());                  \
      ++failures;                                                     \
    }                                                                 \
  } while (0)

static int contains(const char *s, const char *needle) {
  return s != NULL && strstr(s, needle) != NULL;
}

int main(void) {
  diacat_object *ffe = NULL, *bad = NULL, *parsed = NULL, *ud = NULL, *none = NULL;
  char *report = NULL, *doc = NULL;

  EXPECT(strcmp(diacat_version(), "1.0.0") == 0);

  EXPECT(diacat_load_fixture("leibniz-ff-e", &ffe) == DIACAT_OK);
  EXPECT(strcmp(diacat_object_kind(ffe), "algebra") == 0);
  EXPECT(strcmp(diacat_object_name(ffe), "leibniz-ff-e") == 0);
  EXPECT(diacat_check(ffe, &report) == DIACAT_OK);
  EXPECT(contains(report, "\"verdict\""));
  diacat_string_free(report);
  report = NULL;

  EXPECT(diacat_object_to_document(ffe, &doc) == DIACAT_OK);
  EXPECT(diacat_load_document(doc, &parsed) == DIACAT_OK);
  EXPECT(strcmp(diacat_object_name(parsed), "") == 0);
  diacat_string_free(doc);

  EXPECT(diacat_load_fixture("dias-bad-1", &bad) == DIACAT_OK);
  EXPECT(diacat_check(bad, &report) == DIACAT_MATH_FAILURE);
  EXPECT(contains(report, "FAIL"));
  diacat_string_free(report);
  report = NULL;

  {
    const diacat_object *in[1] = {parsed};
    EXPECT(diacat_construct("Ud", in, 1, 2, &ud, &report) == DIACAT_OK);
    EXPECT(strcmp(diacat_object_kind(ud), "algebra") == 0);
    diacat_string_free(report);
    report = NULL;
    EXPECT(diacat_construct("no-such-kind", in, 1, 2, NULL, NULL) == DIACAT_INPUT_ERROR);
    EXPECT(strcmp(diacat_last_error_kind(), "UnknownName") == 0);
  }

  EXPECT(diacat_verify("square:LbDias-XUd-J0", NULL, 0, 2, 1, &report) == DIACAT_OK);
  diacat_string_free(report);
  report = NULL;

  EXPECT(diacat_load_document("{\"field\": \"Q\", \"flavor\": \"as\", \"dim\": 1, "
                              "\"product\": [[0, 0, 0, \"1/0\"]]}",
                              &none) == DIACAT_INPUT_ERROR);
  EXPECT(none == NULL);
  EXPECT(strlen(diacat_last_error()) > 0);
  EXPECT(diacat_load_fixture("no-such-fixture", &none) == DIACAT_INPUT_ERROR);
  EXPECT(diacat_check(NULL, &report) == DIACAT_INVALID_ARGUMENT);
  EXPECT(diacat_object_kind(NULL) == NULL);

  EXPECT(diacat_fixture_names(&doc) == DIACAT_OK);
  EXPECT(contains(doc, "xlb-ideal"));
  diacat_string_free(doc);
  EXPECT(diacat_square_ids(&doc) == DIACAT_OK);
  EXPECT(contains(doc, "top-inner"));
  diacat_string_free(doc);
  EXPECT(diacat_construct_kinds(&doc) == DIACAT_OK);
  EXPECT(contains(doc, "XUd"));
  diacat_string_free(doc);
  EXPECT(strcmp(diacat_last_error(), "") == 0);

  diacat_object_free(ffe);
  diacat_object_free(bad);
  diacat_object_free(parsed);
  diacat_object_free(ud);
  diacat_object_free(NULL);

  if (failures)
    fprintf(stderr, "%d failure(s)\n", failures);
  else
    printf("c api: all checks passed\n");
  return failures ? 1 : 0;
}
