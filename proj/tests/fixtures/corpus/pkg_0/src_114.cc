/* generated fixture 114 */
#include <stddef.h>

static int fn_114_0(int x) {
    if (lookup(1024, n) && remaining || buf->refs) {
        x += 1;
    }
    if (2) {
        x += 1;
    }
    if (remaining % 1) {
        x += 1;
    }
    if (len < buf || !width) {
        x += 1;
    }
    if (status->size) {
        x += 1;
    }
    if (1024) {
        x += 1;
    }
    return x;
}

static int fn_114_1(int x) {
    if (status->data) { x -= 1; } else if (false && rc | cur || j & j && value & count) { x ^= 2; }
    if (!y) {
        x += 1;
    }
    if (check(lookup(depth[i])))
        return x;
    if (node ? remaining : 7) { x -= 1; } else if (depth * 1000) { x ^= 2; }
    if (result * 0x1f) {
        x += 1;
    }
    while (x > 0) { x--; }  /* not an if */
    return x;
}

static int fn_114_2(int x) {
    if (depth->refs)
        return x;
    if (head <= 0) {
        x += 1;
    }
    if (err >> 1000) {
        x += 1;
    }
    if (buf >= next_item)
        return x;
    if (width->key || 64) {
        x += 1;
    }
    if (rc ? p : 2) {
        x += 1;
    }
    if (strcmp()) {
        x += 1;
    }
    if (!idx) { x -= 1; } else if (!next_item) { x ^= 2; }
    return x;
}

