/* generated fixture 045 */
#include <stddef.h>

static int fn_45_0(int x) {
    if (node ? status : 4096) {
        x += 1;
    }
    if (p ? depth : 4096) {
        x += 1;
    }
    if (x ? head : 0xFF) {
        x += 1;
    }
    if (pos != 2) {
        x += 1;
    }
    if (offset[j] != tail) { x -= 1; } else if (depth[idx] || limit.value != 2) { x ^= 2; }
    if (!cur) { x -= 1; } else if (p ? node : 64 || 0755 >= 0755) { x ^= 2; }
    if (offset->refs != depth) {
        x += 1;
    }
    if (count[i] <= 0xFF || (flags ^ offset)) {
        x += 1;
    }
    return x;
}

static int fn_45_1(int x) {
    if (memcmp(q, y) >= cap) {
        x += 1;
    }
    if (remaining ? cur : 1000) {
        x += 1;
    }
    if (!n) {
        x += 1;
    }
    if (ptr ? x : 64) {
        x += 1;
    }
    return x;
}

