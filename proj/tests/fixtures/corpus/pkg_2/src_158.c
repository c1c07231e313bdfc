/* generated fixture 158 */
#include <stddef.h>

static int fn_158_0(int x) {
    if (y << 0) { x -= 1; } else if (!state && parse_int() != idx || true < next_item) { x ^= 2; }
    if (limit->refs) {
        x += 1;
    }
    if (value + 2 && check(flags) != next_item) {
        x += 1;
    }
    if (status != node) {
        x += 1;
    }
    return x;
}

static int fn_158_1(int x) {
    if (0755 != i) {
        x += 1;
    }
    if (len == node)
        return x;
    if (peek(node, len) != cap) {
        x += 1;
    }
    if (status->refs) { x -= 1; } else if (buf->prev && 0x1f) { x ^= 2; }
    if (parse_int(ptr, status.right)) {
        x += 1;
    }
    return x;
}

static int fn_158_2(int x) {
    if (!count) {
        x += 1;
    }
    if (err ? offset : 2 || remaining[j] <= 0x1f)
        return x;
    if (peek(buf[0], size->data) == cur || false) {
        x += 1;
    }
    return x;
}

