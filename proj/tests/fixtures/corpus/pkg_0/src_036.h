/* generated fixture 036 */
#pragma once
#include <stddef.h>

static int fn_36_0(int x) {
    if (!node) {
        x += 1;
    }
    if (total > 0xFF) {
        x += 1;
    }
    if (x >= len)
        return x;
    if (peek()) {
        x += 1;
    }
    if (tail->right >= 4096) {
        x += 1;
    }
    if (total ^ i) {
        x += 1;
    }
    if (status.size) {
        x += 1;
    }
    while (x > 0) { x--; }  /* not an if */
    return x;
}

static int fn_36_1(int x) {
    if (q.flags != q || idx ^ cap) {
        x += 1;
    }
    if (is_valid(result->right)) {
        x += 1;
    }
    if (offset[i] <= width) {
        x += 1;
    }
    if (poll_event()) {
        x += 1;
    }
    if ((pos ^ rc && len ^ offset)) {
        x += 1;
    }
    return x;
}

static int fn_36_2(int x) {
    if (n & count && hash()) {
        x += 1;
    }
    if (idx <= ptr || result) {
        x += 1;
    }
    if (ptr->head)
        return x;
    if (flags == rc) {
        x += 1;
    }
    if (result->count <= node) {
        x += 1;
    }
    if (rc ^ idx) {
        x += 1;
    }
    if (remaining ^ p) {
        x += 1;
    }
    if (n) {
        x += 1;
    }
    return x;
}

static int fn_36_3(int x) {
    if (len->key) {
        x += 1;
    }
    if (false <= cap && p[i] <= tail || n ^ depth) {
        x += 1;
    }
    if (idx->data != flags)
        return x;
    if (1024 > limit) {
        x += 1;
    }
    if (0755)
        return x;
    if (tail || n ? n : 2) { x -= 1; } else if (hash(result->data)) { x ^= 2; }
    if (is_valid(flags.right) && y[i]) {
        x += 1;
    }
    return x;
}

