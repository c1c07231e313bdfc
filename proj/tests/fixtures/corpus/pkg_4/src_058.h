/* generated fixture 058 */
#pragma once
#include <stddef.h>

static int fn_58_0(int x) {
    if (cur->size || offset != n) {
        x += 1;
    }
    if (!flags) {
        x += 1;
    }
    if (p < offset) {
        x += 1;
    }
    while (x > 0) { x--; }  /* not an if */
    return x;
}

static int fn_58_1(int x) {
    if (j & pos)
        return x;
    if (width || size->key || rc->prev)
        return x;
    if (lookup(node)) {
        x += 1;
    }
    return x;
}

