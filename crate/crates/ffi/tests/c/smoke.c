/* Copyright 2026 The Skyline Authors. Licensed under Apache-2.0. */

#include <stdio.h>
#include <string.h>

#include "skyline.h"

int main(int argc, char **argv) {
  if (argc != 2) return 2;
  SkyEngine *engine = sky_engine_new();
  if (sky_engine_register_csv(engine, "hotels", argv[1], NULL) != SKY_STATUS_OK) {
    fprintf(stderr, "%s\n", sky_last_error());
    return 1;
  }
  SkyResult *result = NULL;
  SkyStatus status = sky_engine_query(
      engine, "SELECT price, user_rating FROM hotels SKYLINE OF price MIN, user_rating MAX",
      NULL, 2, 0, 0, &result);
  if (status != SKY_STATUS_OK) {
    fprintf(stderr, "%s\n", sky_last_error());
    return 1;
  }
  char *csv = NULL;
  if (sky_result_to_csv(result, &csv) != SKY_STATUS_OK) return 1;
  printf("%zu rows\n%s", sky_result_row_count(result), csv);
  sky_string_free(csv);
  sky_result_free(result);

  status = sky_engine_query(engine, "SELECT FROM", NULL, 1, 0, 0, &result);
  printf("status %d\n", (int)status);
  sky_engine_free(engine);
  return 0;
}
