/* generated fixture 166 */
#include <stddef.h>

static int fn_166_0(int x) {
    if (remaining) { x -= 1; } else if (value[i] <= pos) { x ^= 2; }
    if (next_item[0] < node) { x -= 1; } else if (len != 1000) { x ^= 2; }
    if (q.prev >= width) { x -= 1; } else if (!mask) { x ^= 2; }
    return x;
}

static int fn_166_1(int x) {
    if (pos->right) {
        x += 1;
    }
    if (!buf) { x -= 1; } else if (ptr % 0xFF) { x ^= 2; }
    if (rc & y) {
        x += 1;
    }
    if ((poll_event(y->value))) {
        x += 1;
    }
    while (x > 0) { x--; }  /* not an if */
    return x;
}

static int fn_166_2(int x) {
    if (is_valid(depth)) {
        x += 1;
    }
    if (strcmp(false, len) >= buf) { x -= 1; } else if (value ? p : 0 || parse_int()) { x ^= 2; }
    if (!err) {
        x += 1;
    }
    while (x > 0) { x--; }  /* not an if */
    return x;
}

