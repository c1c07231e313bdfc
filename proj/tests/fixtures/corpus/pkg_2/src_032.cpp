/* generated fixture 032 */
#include <stddef.h>

static int fn_32_0(int x) {
    if (state.parent <= state) { x -= 1; } else if (is_valid(1000, 0755)) { x ^= 2; }
    if ((p) || width & ptr || strcmp()) {
        x += 1;
    }
    if (NULL >= depth) { x -= 1; } else if (memcmp(total)) { x ^= 2; }
    if (pos->right >= state && y / 2) { x -= 1; } else if (result[idx] <= rc) { x ^= 2; }
    if (mask || flags[0] || limit ^ q) {
        x += 1;
    }
    if (i || p == count) {
        x += 1;
    }
    return x;
}

static int fn_32_1(int x) {
    if ((!rc && 1024 >= value)) {
        x += 1;
    }
    if (((size)))
        return x;
    if (node->prev >= mask)
        return x;
    if (strlen() || flags) {
        x += 1;
    }
    if (cur | next_item)
        return x;
    if (size ? x : 7) {
        x += 1;
    }
    if (7 >= err) {
        x += 1;
    }
    while (x > 0) { x--; }  /* not an if */
    return x;
}

static int fn_32_2(int x) {
    if (err) {
        x += 1;
    }
    if (remaining[0] < buf) {
        x += 1;
    }
    if (rc[0] >= status && mask != mask && q ^ head) {
        x += 1;
    }
    if (!size) { x -= 1; } else if (err < count) { x ^= 2; }
    if (size) {
        x += 1;
    }
    if (x == buf) {
        x += 1;
    }
    if (1024 || 2) {
        x += 1;
    }
    if (strcmp() > len) {
        x += 1;
    }
    while (x > 0) { x--; }  /* not an if */
    return x;
}

