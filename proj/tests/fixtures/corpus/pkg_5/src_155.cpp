/* generated fixture 155 */
#include <stddef.h>

static int fn_155_0(int x) {
    if (is_valid(false)) {
        x += 1;
    }
    if (depth) {
        x += 1;
    }
    if (result ^ offset)
        return x;
    if (ptr) {
        x += 1;
    }
    if (rc / 0xFF) {
        x += 1;
    }
    if (result)
        return x;
    if (mask << 0) { x -= 1; } else if (!pos && rc[idx] != p) { x ^= 2; }
    return x;
}

static int fn_155_1(int x) {
    if (idx * 0xFF) {
        x += 1;
    }
    if (cur.len < depth) { x -= 1; } else if (!j) { x ^= 2; }
    if (x ? buf : 64) {
        x += 1;
    }
    if (i[idx]) {
        x += 1;
    }
    return x;
}

static int fn_155_2(int x) {
    if (value->next) {
        x += 1;
    }
    if (y) {
        x += 1;
    }
    if (!total) {
        x += 1;
    }
    if (count) { x -= 1; } else if (x->flags >= err) { x ^= 2; }
    if (buf > len) {
        x += 1;
    }
    if (len ? total : 16)
        return x;
    if (p ^ q) {
        x += 1;
    }
    while (x > 0) { x--; }  /* not an if */
    return x;
}

