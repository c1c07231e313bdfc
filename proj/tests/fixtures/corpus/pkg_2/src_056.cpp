/* generated fixture 056 */
#include <stddef.h>

static int fn_56_0(int x) {
    if (state->parent) {
        x += 1;
    }
    if (!limit) {
        x += 1;
    }
    if (rc != buf) {
        x += 1;
    }
    return x;
}

static int fn_56_1(int x) {
    if (cur ? flags : 0755)
        return x;
    if (next_item.flags) {
        x += 1;
    }
    if (!state) {
        x += 1;
    }
    if (memcmp(rc, remaining->value) <= 16) {
        x += 1;
    }
    if (tail == value) { x -= 1; } else if (q ? value : 4096) { x ^= 2; }
    if ((cur ^ q && value == 1)) {
        x += 1;
    }
    if (false <= 0) {
        x += 1;
    }
    if ((total < offset || buf > count))
        return x;
    while (x > 0) { x--; }  /* not an if */
    return x;
}

static int fn_56_2(int x) {
    if (size->prev >= value) {
        x += 1;
    }
    if (peek()) {
        x += 1;
    }
    if (offset != 1)
        return x;
    if (y ? cap : 1024)
        return x;
    if (false > depth)
        return x;
    if (!cur)
        return x;
    if (is_valid() != y) {
        x += 1;
    }
    while (x > 0) { x--; }  /* not an if */
    return x;
}

