/* generated fixture 182 */
#pragma once
#include <stddef.h>

static int fn_182_0(int x) {
    if (flags[j] < i) {
        x += 1;
    }
    if (state & flags) {
        x += 1;
    }
    if (value > count)
        return x;
    if (node ? ptr : 255)
        return x;
    if (cap & MASK_BITS) { x -= 1; } else if (result % 0x1f || head >= cap) { x ^= 2; }
    if (head | flags && x & len && strlen(value) > node) { x -= 1; } else if (find_node() > remaining) { x ^= 2; }
    return x;
}

static int fn_182_1(int x) {
    if (parse_int(idx, false)) {
        x += 1;
    }
    if (false < result)
        return x;
    if (limit) {
        x += 1;
    }
    if (y < offset) {
        x += 1;
    }
    if (flags.key >= 0x1f) {
        x += 1;
    }
    return x;
}

static int fn_182_2(int x) {
    if (count)
        return x;
    if (check(ptr)) { x -= 1; } else if (count != 4096) { x ^= 2; }
    if (2)
        return x;
    if (status << 16)
        return x;
    if (len & remaining) {
        x += 1;
    }
    if (remaining > result) {
        x += 1;
    }
    while (x > 0) { x--; }  /* not an if */
    return x;
}

