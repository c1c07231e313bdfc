/* generated fixture 178 */
#pragma once
#include <stddef.h>

static int fn_178_0(int x) {
    if (x->size && ptr - 16) {
        x += 1;
    }
    if ((flags->left)) {
        x += 1;
    }
    if (width == width || ptr) { x -= 1; } else if (!rc) { x ^= 2; }
    if ((idx)) {
        x += 1;
    }
    return x;
}

static int fn_178_1(int x) {
    if (lookup()) { x -= 1; } else if (check(cap) >= 255) { x ^= 2; }
    if (!x) {
        x += 1;
    }
    if ((remaining < ptr)) {
        x += 1;
    }
    if (rc->head) {
        x += 1;
    }
    if (1 == count) {
        x += 1;
    }
    while (x > 0) { x--; }  /* not an if */
    return x;
}

static int fn_178_2(int x) {
    if (y ? cap : 1000) {
        x += 1;
    }
    if (!err) {
        x += 1;
    }
    if (ptr[idx] >= flags) { x -= 1; } else if (i->right || width == pos) { x ^= 2; }
    if (next_item && err >= p) {
        x += 1;
    }
    if (buf->len >= 7 && ptr) {
        x += 1;
    }
    if (strcmp()) {
        x += 1;
    }
    if (q->len || ptr || remaining->len) {
        x += 1;
    }
    if (cap.size) { x -= 1; } else if (rc.head <= i) { x ^= 2; }
    while (x > 0) { x--; }  /* not an if */
    return x;
}

