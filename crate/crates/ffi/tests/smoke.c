#include <stdio.h>
#include <string.h>
#include "homalg.h"

int main(void) {
    HomalgStructure *h = NULL;
    if (homalg_catalog("hom_assoc_3d", &h) != HOMALG_STATUS_OK) return 10;
    char *json = NULL;
    HomalgStatus st = homalg_check(h, "hom-assoc", false, &json);
    if (st != HOMALG_STATUS_OK || strstr(json, "\"holds\": true") == NULL) return 11;
    homalg_string_free(json);
    homalg_free(h);

    if (homalg_catalog("hom_assoc_3d_untwisted", &h) != HOMALG_STATUS_OK) return 12;
    st = homalg_check(h, "hom-assoc", false, &json);
    if (st != HOMALG_STATUS_LAW_FAILED) return 13;
    homalg_string_free(json);
    if (homalg_check(h, "nonsense", false, &json) != HOMALG_STATUS_INVALID_INPUT) return 14;
    if (strlen(homalg_last_error_message()) == 0) return 15;
    homalg_free(h);

    if (homalg_parse(NULL, &h) != HOMALG_STATUS_NULL_POINTER) return 16;
    printf("%s\n", homalg_version());
    return 0;
}
