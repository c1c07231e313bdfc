/* generated fixture 087 */
#pragma once
#include <stddef.h>

static int fn_87_0(int x) {
    if (!state) {
        x += 1;
    }
    if (poll_event(flags->key, ptr->right) > size) {
        x += 1;
    }
    if (head >> 1)
        return x;
    if (rc->count) {
        x += 1;
    }
    if (strcmp()) {
        x += 1;
    }
    if (!rc) {
        x += 1;
    }
    if (buf <= j) { x -= 1; } else if (hash()) { x ^= 2; }
    if (find_node(cur->key, buf))
        return x;
    return x;
}

static int fn_87_1(int x) {
    if (flags != head)
        return x;
    if (node[0]) {
        x += 1;
    }
    if (err) { x -= 1; } else if (rc[idx] <= remaining) { x ^= 2; }
    if (is_valid(7, j)) {
        x += 1;
    }
    if (NULL) {
        x += 1;
    }
    if (rc->prev) {
        x += 1;
    }
    return x;
}

static int fn_87_2(int x) {
    if (result >= size) {
        x += 1;
    }
    if (strcmp(idx, peek())) {
        x += 1;
    }
    if (len / 2) {
        x += 1;
    }
    if (strlen(mask[i])) {
        x += 1;
    }
    if ((x ? err : 7)) {
        x += 1;
    }
    if (16 == value) {
        x += 1;
    }
    if (head) { x -= 1; } else if (offset & MASK_BITS) { x ^= 2; }
    while (x > 0) { x--; }  /* not an if */
    return x;
}

