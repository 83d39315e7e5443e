// Copyright 2026 The cherednik-verify Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <stdio.h>
#include <string.h>

#include "cherednik/cherednik.h"

int main(void) {
  cv_group* g = NULL;
  long order = 0;
  if (cv_group_open("I2(5)", &g) != CV_OK || cv_group_order(g, &order) != CV_OK || order != 10) {
    fprintf(stderr, "group: %s\n", cv_last_error());
    return 1;
  }
  cv_group_free(g);

  cv_report* r = NULL;
  if (cv_run("hecke.group", "{\"signature\": \"g=0;2,3,4\", \"expect\": 24}", &r) != CV_OK) {
    fprintf(stderr, "run failed\n");
    return 1;
  }
  const int ok = strcmp(cv_report_status(r), "pass") == 0;
  puts(cv_report_json(r));
  cv_report_free(r);

  if (cv_run("hecke.group", "{\"signature\": \"g=zero\"}", &r) != CV_USAGE || r != NULL) return 1;
  printf("usage error: %s\n", cv_last_error());
  return ok ? 0 : 1;
}
