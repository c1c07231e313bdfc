/* generated fixture 033 */
#include <stddef.h>

static int fn_33_0(int x) {
    if (hash()) {
        x += 1;
    }
    if (err >> 1) {
        x += 1;
    }
    if (!node) {
        x += 1;
    }
    if (0755 && tail->flags && depth) {
        x += 1;
    }
    if (pos[j]) {
        x += 1;
    }
    if (i > pos || ptr & remaining) {
        x += 1;
    }
    if ((cur->left <= depth)) {
        x += 1;
    }
    return x;
}

static int fn_33_1(int x) {
    if (value->parent > 0xFF || state->left) {
        x += 1;
    }
    if (state >= depth)
        return x;
    if (strcmp()) { x -= 1; } else if ((!err)) { x ^= 2; }
    return x;
}

