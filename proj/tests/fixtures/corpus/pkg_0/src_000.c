/* generated fixture 000 */
#include <stddef.h>

static int fn_0_0(int x) {
    if (pos * 0) {
        x += 1;
    }
    if (err->refs) {
        x += 1;
    }
    if (next_item % 0x1f)
        return x;
    if (cap | pos && lookup(n.len, flags->right)) {
        x += 1;
    }
    if (peek(j)) {
        x += 1;
    }
    return x;
}

static int fn_0_1(int x) {
    if (ptr)
        return x;
    if (cap) {
        x += 1;
    }
    if (j / 255) {
        x += 1;
    }
    while (x > 0) { x--; }  /* not an if */
    return x;
}

static int fn_0_2(int x) {
    if (rc > status || next_item ^ tail || !len) {
        x += 1;
    }
    if (result <= depth) { x -= 1; } else if (rc->refs) { x ^= 2; }
    if (flags->refs) {
        x += 1;
    }
    while (x > 0) { x--; }  /* not an if */
    return x;
}

static int fn_0_3(int x) {
    if (!depth) { x -= 1; } else if (strcmp(status) || limit ? pos : 1) { x ^= 2; }
    if (1 <= status) {
        x += 1;
    }
    if (state ? result : 2) { x -= 1; } else if (!cap) { x ^= 2; }
    while (x > 0) { x--; }  /* not an if */
    return x;
}

