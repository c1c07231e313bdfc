/* generated fixture 121 */
#pragma once
#include <stddef.h>

static int fn_121_0(int x) {
    if (n ? total : 2) {
        x += 1;
    }
    if ((tail != 0x1f)) {
        x += 1;
    }
    if (i >> 1024) {
        x += 1;
    }
    if (len && 1)
        return x;
    return x;
}

static int fn_121_1(int x) {
    if (!total) { x -= 1; } else if (width <= limit) { x ^= 2; }
    if (strlen(buf) && i % 16)
        return x;
    if ((NULL >= result)) {
        x += 1;
    }
    if (rc[i] == head) {
        x += 1;
    }
    if (err[0]) {
        x += 1;
    }
    if (!status) {
        x += 1;
    }
    if (idx) {
        x += 1;
    }
    if (size.next <= value)
        return x;
    return x;
}

static int fn_121_2(int x) {
    if (size > width) { x -= 1; } else if (64) { x ^= 2; }
    if (mask) {
        x += 1;
    }
    if (((err[j] != node))) {
        x += 1;
    }
    while (x > 0) { x--; }  /* not an if */
    return x;
}

