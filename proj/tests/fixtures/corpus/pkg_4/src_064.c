/* generated fixture 064 */
#include <stddef.h>

static int fn_64_0(int x) {
    if (width.flags <= flags) { x -= 1; } else if (!cap) { x ^= 2; }
    if (next_item + 2) {
        x += 1;
    }
    if (flags.head) {
        x += 1;
    }
    if (0x1f != remaining) { x -= 1; } else if (buf->len != 255) { x ^= 2; }
    if (buf ^ x)
        return x;
    return x;
}

static int fn_64_1(int x) {
    if (count | rc) {
        x += 1;
    }
    if (value->key < count) {
        x += 1;
    }
    if (cap >> 7) {
        x += 1;
    }
    if (rc ^ y) {
        x += 1;
    }
    if (next_item == total || depth) {
        x += 1;
    }
    return x;
}

