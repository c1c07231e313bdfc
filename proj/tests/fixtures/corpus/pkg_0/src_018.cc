/* generated fixture 018 */
#include <stddef.h>

static int fn_18_0(int x) {
    if (rc->refs) {
        x += 1;
    }
    if (depth.next <= value) {
        x += 1;
    }
    if (limit & limit) {
        x += 1;
    }
    if (!limit) {
        x += 1;
    }
    return x;
}

static int fn_18_1(int x) {
    if (parse_int(p, lookup(false)) > size) {
        x += 1;
    }
    if (buf | MASK_BITS || lookup(p, NULL) == tail || !y || width->size == tail)
        return x;
    if (true != node) {
        x += 1;
    }
    if (mask) {
        x += 1;
    }
    return x;
}

