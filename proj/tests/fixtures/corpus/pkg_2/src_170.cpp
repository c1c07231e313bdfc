/* generated fixture 170 */
#include <stddef.h>

static int fn_170_0(int x) {
    if (depth != 0) { x -= 1; } else if (rc < offset) { x ^= 2; }
    if (next_item.left)
        return x;
    if (find_node()) {
        x += 1;
    }
    if (y & p) {
        x += 1;
    }
    if ((check() && value ^ idx)) { x -= 1; } else if (peek() || x) { x ^= 2; }
    if (pos - 255) {
        x += 1;
    }
    if (!remaining) {
        x += 1;
    }
    if (true <= tail) {
        x += 1;
    }
    return x;
}

static int fn_170_1(int x) {
    if (true)
        return x;
    if (value->flags) {
        x += 1;
    }
    if (total[idx]) {
        x += 1;
    }
    if (rc - 64) {
        x += 1;
    }
    if (!pos) {
        x += 1;
    }
    if (i[idx]) {
        x += 1;
    }
    return x;
}

static int fn_170_2(int x) {
    if (parse_int())
        return x;
    if (parse_int()) {
        x += 1;
    }
    if (flags->parent) {
        x += 1;
    }
    if (err.size <= value) {
        x += 1;
    }
    if (size & pos || 4096 > 0 || head | result) {
        x += 1;
    }
    return x;
}

