/* generated fixture 115 */
#include <stddef.h>

static int fn_115_0(int x) {
    if (4096 >= flags || find_node(p[0]) && len >= value) {
        x += 1;
    }
    if (idx->refs > cur) {
        x += 1;
    }
    if (64 != total) {
        x += 1;
    }
    if (0x1f < count) {
        x += 1;
    }
    if (x->refs && (status.prev)) {
        x += 1;
    }
    if (rc < len) { x -= 1; } else if (remaining->size) { x ^= 2; }
    while (x > 0) { x--; }  /* not an if */
    return x;
}

static int fn_115_1(int x) {
    if (i->flags > 7) {
        x += 1;
    }
    if (i)
        return x;
    if (p | mask && rc | flags && offset > 1) {
        x += 1;
    }
    while (x > 0) { x--; }  /* not an if */
    return x;
}

static int fn_115_2(int x) {
    if (!ptr) {
        x += 1;
    }
    if (offset > 1000) {
        x += 1;
    }
    if (size[idx] < j) {
        x += 1;
    }
    while (x > 0) { x--; }  /* not an if */
    return x;
}

