/* Exercises the C interface from plain C. argv[1] is the tables directory. */
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "stonedual/stonedual.h"

static int failures = 0;

#define EXPECT(cond)                                             \
  do {                                                           \
    if (!(cond)) {                                               \
      fprintf(stderr, "%s:%d: failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                \
    }                                                            \
  } while (0)

static int has(const char* s, const char* needle) { return s && strstr(s, needle) != NULL; }

int main(int argc, char** argv) {
  char path[4096];
  char* out = NULL;
  int flag = -1;
  sd_table* t = NULL;

  if (argc < 2) {
    fprintf(stderr, "usage: test_capi TABLES_DIR\n");
    return 2;
  }
  EXPECT(sd_version() != NULL && strlen(sd_version()) > 0);

  EXPECT(sd_poly_mul(2, 1, "a^-1", "a", &out) == SD_OK);
  EXPECT(out && strcmp(out, "1") == 0);
  sd_string_free(out), out = NULL;
  EXPECT(sd_poly_mul(2, 1, "a^-1", "b", &out) == SD_OK);
  EXPECT(out && strcmp(out, "0") == 0);
  sd_string_free(out), out = NULL;
  EXPECT(sd_poly_leq(2, 1, "aa.aa^-1", "a.a^-1", &flag) == SD_OK && flag == 1);
  EXPECT(sd_poly_arrow(2, 1, "1", "{a.a^-1,b.b^-1}", &flag) == SD_OK && flag == 1);
  EXPECT(sd_poly_arrow(2, 1, "1", "{a.a^-1}", &flag) == SD_OK && flag == 0);

  EXPECT(sd_poly_mul(2, 1, "c", "a", &out) == SD_ERR_PARSE);
  EXPECT(out == NULL);
  EXPECT(strlen(sd_last_error()) > 0);
  EXPECT(sd_poly_mul(2, 1, NULL, "a", &out) == SD_ERR_USAGE);

  EXPECT(sd_mpc_check(2, "{a,ba,bb}", &flag) == SD_OK && flag == 1);
  EXPECT(sd_mpc_check(2, "{a,ba}", &flag) == SD_OK && flag == 0);
  EXPECT(sd_mpc_kraft(2, "{a,ba}", &out) == SD_OK);
  EXPECT(out && strcmp(out, "3/4") == 0);
  sd_string_free(out), out = NULL;

  snprintf(path, sizeof path, "%s/i3.tbl", argv[1]);
  EXPECT(sd_table_load(path, &t) == SD_OK);
  if (t) {
    EXPECT(sd_table_size(t) == 34);
    EXPECT(sd_table_classify(t, &out) == SD_OK);
    EXPECT(has(out, "\"k\":3"));
    sd_string_free(out), out = NULL;
    sd_table_free(t), t = NULL;
  }

  snprintf(path, sizeof path, "%s/not_inverse.tbl", argv[1]);
  EXPECT(sd_table_load(path, &t) == SD_OK);
  if (t) {
    EXPECT(sd_table_validate(t, &out) == SD_OK);
    EXPECT(has(out, "false"));
    sd_string_free(out), out = NULL;
    EXPECT(sd_table_classify(t, &out) == SD_ERR_DOMAIN);
    sd_table_free(t), t = NULL;
  }

  snprintf(path, sizeof path, "%s/does_not_exist.tbl", argv[1]);
  EXPECT(sd_table_load(path, &t) == SD_ERR_PARSE);
  EXPECT(t == NULL);

  EXPECT(sd_table_symmetric(2, &t) == SD_OK);
  if (t) {
    EXPECT(sd_table_dualize(t, &out, NULL) == SD_OK);
    EXPECT(has(out, "\"roundtrip\":true"));
    sd_string_free(out), out = NULL;
    sd_table_free(t), t = NULL;
  }

  EXPECT(sd_tp_eq(2, 1, "{a,b}->{a,b}", "{aa,ab,b}->{aa,ab,b}", &flag) == SD_OK && flag == 1);
  EXPECT(sd_tp_inv(2, 1, "{a,b}->{a,b}:perm=[1,0]", &out) == SD_OK);
  EXPECT(out && strcmp(out, "{a,b}->{a,b}:perm=[1,0]") == 0);
  sd_string_free(out), out = NULL;

  EXPECT(sd_selftest("nope", 0, 10, &out) == SD_ERR_DOMAIN);
  sd_string_free(NULL);

  if (failures) fprintf(stderr, "%d failures\n", failures);
  else printf("c api: all checks passed\n");
  return failures ? 1 : 0;
}
