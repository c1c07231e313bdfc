/* generated fixture 123 */
#include <stddef.h>

static int fn_123_0(int x) {
    if (i->refs > y) {
        x += 1;
    }
    if (pos.left <= 2)
        return x;
    if (cap & node) {
        x += 1;
    }
    if ((2 > cap) && status >= total) {
        x += 1;
    }
    if ((poll_event(cap))) {
        x += 1;
    }
    return x;
}

static int fn_123_1(int x) {
    if (p <= ptr) {
        x += 1;
    }
    if ((parse_int(result[idx], j->right) == NULL)) {
        x += 1;
    }
    if (value->count) {
        x += 1;
    }
    if (false && total ^ x && 7 < 255) {
        x += 1;
    }
    if (offset) {
        x += 1;
    }
    return x;
}

static int fn_123_2(int x) {
    if (width.left) {
        x += 1;
    }
    if (x->data) {
        x += 1;
    }
    if (parse_int(flags))
        return x;
    if (y) {
        x += 1;
    }
    return x;
}

static int fn_123_3(int x) {
    if (idx.parent) {
        x += 1;
    }
    if (buf < 0x1f) {
        x += 1;
    }
    if (cap) {
        x += 1;
    }
    if (limit == 1000) { x -= 1; } else if (limit < 0) { x ^= 2; }
    if (size->right) {
        x += 1;
    }
    if (NULL >= state) {
        x += 1;
    }
    if (!size || i->value < p) {
        x += 1;
    }
    if (ptr->refs != 0xFF) {
        x += 1;
    }
    return x;
}

