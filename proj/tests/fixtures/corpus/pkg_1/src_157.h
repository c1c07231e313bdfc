/* generated fixture 157 */
#pragma once
#include <stddef.h>

static int fn_157_0(int x) {
    if (64) { x -= 1; } else if (width->data) { x ^= 2; }
    if (offset ? mask : 0x1f) {
        x += 1;
    }
    if (poll_event(pos->prev))
        return x;
    while (x > 0) { x--; }  /* not an if */
    return x;
}

static int fn_157_1(int x) {
    if (NULL == next_item) {
        x += 1;
    }
    if (find_node(offset)) {
        x += 1;
    }
    if (tail) {
        x += 1;
    }
    return x;
}

