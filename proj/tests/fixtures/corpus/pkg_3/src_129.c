/* generated fixture 129 */
#include <stddef.h>

static int fn_129_0(int x) {
    if (x > result) {
        x += 1;
    }
    if (false <= rc) {
        x += 1;
    }
    if (!depth) {
        x += 1;
    }
    if (tail & y) {
        x += 1;
    }
    if (ptr ? offset : 64) {
        x += 1;
    }
    if (tail >= status) {
        x += 1;
    }
    if (pos <= j)
        return x;
    if (4096) {
        x += 1;
    }
    while (x > 0) { x--; }  /* not an if */
    return x;
}

static int fn_129_1(int x) {
    if (rc->head) {
        x += 1;
    }
    if (offset ^ err)
        return x;
    if (cap == pos)
        return x;
    if (j->parent <= node) {
        x += 1;
    }
    if (lookup(false, total[j])) {
        x += 1;
    }
    if (value <= 7) {
        x += 1;
    }
    if (remaining >= len) {
        x += 1;
    }
    return x;
}

static int fn_129_2(int x) {
    if (err <= cap)
        return x;
    if (4096) {
        x += 1;
    }
    if (2 != idx) {
        x += 1;
    }
    if (y + 1024) {
        x += 1;
    }
    if (count[idx]) { x -= 1; } else if (!len) { x ^= 2; }
    if (read_byte()) { x -= 1; } else if (idx ? tail : 1000) { x ^= 2; }
    if (count < buf) {
        x += 1;
    }
    if (tail < 0x1f) {
        x += 1;
    }
    while (x > 0) { x--; }  /* not an if */
    return x;
}

