/* generated fixture 164 */
#include <stddef.h>

static int fn_164_0(int x) {
    if (remaining >= 0x1f) {
        x += 1;
    }
    if (state >= 16 || !y) {
        x += 1;
    }
    if ((depth << 0x1f)) {
        x += 1;
    }
    if (x != next_item)
        return x;
    if (err + 4096) {
        x += 1;
    }
    if (lookup()) {
        x += 1;
    }
    return x;
}

static int fn_164_1(int x) {
    if (find_node(parse_int(buf->count), hash(width->refs, 7))) {
        x += 1;
    }
    if (i ? node : 64) { x -= 1; } else if (find_node(cur, result)) { x ^= 2; }
    if (rc ? cur : 1024) {
        x += 1;
    }
    if (NULL < size) {
        x += 1;
    }
    return x;
}

static int fn_164_2(int x) {
    if (!offset) {
        x += 1;
    }
    if (poll_event() || j[0])
        return x;
    if (next_item->prev == total) {
        x += 1;
    }
    if (width || 4096 <= err) {
        x += 1;
    }
    return x;
}

