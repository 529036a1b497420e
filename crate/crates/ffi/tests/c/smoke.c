#include <stdio.h>
#include <string.h>

#include "subdeg.h"

int main(void) {
    SdPermGroup *g = NULL;
    if (sd_perm_group_parse("degree 4\ngen (1 2)\ngen (1 2 3 4)\n", &g) != SD_OK) {
        return 1;
    }
    uint64_t order = 0;
    uint64_t subdegrees[4];
    size_t len = 0;
    if (sd_perm_group_order(g, &order) != SD_OK || order != 24) {
        return 2;
    }
    if (sd_perm_group_subdegrees(g, 1, subdegrees, 4, &len) != SD_OK || len != 2 || subdegrees[1] != 3) {
        return 3;
    }
    sd_perm_group_free(g);
    if (sd_perm_group_parse("degree 2\ngen (1 3)\n", &g) != SD_ERR_PARSE) {
        return 4;
    }
    char msg[128];
    sd_last_error_message(msg, sizeof msg);
    printf("order %llu, error '%s'\n", (unsigned long long)order, msg);
    return 0;
}
