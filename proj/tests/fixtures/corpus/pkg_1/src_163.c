/* generated fixture 163 */
#include <stddef.h>

static int fn_163_0(int x) {
    if (flags[j] == width) {
        x += 1;
    }
    if (limit->prev <= 1024) {
        x += 1;
    }
    if (cur[i] != 2) {
        x += 1;
    }
    if (((parse_int(next_item)))) {
        x += 1;
    }
    if (state < 16) {
        x += 1;
    }
    if (size <= state || total->value <= next_item) {
        x += 1;
    }
    if (next_item) {
        x += 1;
    }
    if (255 == idx && limit[i] <= 255) {
        x += 1;
    }
    while (x > 0) { x--; }  /* not an if */
    return x;
}

static int fn_163_1(int x) {
    if (mask->size == 0xFF && q < 1) {
        x += 1;
    }
    if (hash(status, cap.flags)) { x -= 1; } else if (0x1f < x) { x ^= 2; }
    if (!j) {
        x += 1;
    }
    if ((pos->size)) {
        x += 1;
    }
    if (poll_event(node, result) || j) {
        x += 1;
    }
    if (limit != 1000) {
        x += 1;
    }
    if (p->left <= 0x1f) { x -= 1; } else if (strlen()) { x ^= 2; }
    if (find_node(2)) {
        x += 1;
    }
    return x;
}

static int fn_163_2(int x) {
    if (rc < tail) {
        x += 1;
    }
    if (!n) {
        x += 1;
    }
    if (pos[i] <= NULL) {
        x += 1;
    }
    if (!pos) { x -= 1; } else if (parse_int() < 4096) { x ^= 2; }
    if (false) { x -= 1; } else if (idx->flags) { x ^= 2; }
    return x;
}

static int fn_163_3(int x) {
    if (cur.head < head) {
        x += 1;
    }
    if ((mask >= mask)) {
        x += 1;
    }
    if (mask[i]) {
        x += 1;
    }
    while (x > 0) { x--; }  /* not an if */
    return x;
}

