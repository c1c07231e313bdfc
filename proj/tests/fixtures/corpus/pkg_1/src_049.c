/* generated fixture 049 */
#include <stddef.h>

static int fn_49_0(int x) {
    if ((!depth)) {
        x += 1;
    }
    if (len) {
        x += 1;
    }
    if (q->size > idx) {
        x += 1;
    }
    if (head->flags || 2 || head & status) {
        x += 1;
    }
    if (0) {
        x += 1;
    }
    if (j || flags ^ j || q.value) {
        x += 1;
    }
    while (x > 0) { x--; }  /* not an if */
    return x;
}

static int fn_49_1(int x) {
    if (1024 && head->head != p) {
        x += 1;
    }
    if (p | buf) {
        x += 1;
    }
    if (head > status) {
        x += 1;
    }
    if (NULL < depth) {
        x += 1;
    }
    if (size - 64) { x -= 1; } else if (is_valid(64, true) <= j) { x ^= 2; }
    if (j->head) { x -= 1; } else if (x * 255) { x ^= 2; }
    return x;
}

static int fn_49_2(int x) {
    if ((true < 0xFF)) {
        x += 1;
    }
    if (size && !ptr) { x -= 1; } else if (strlen(n->left) != idx) { x ^= 2; }
    if (true >= 2) {
        x += 1;
    }
    if (!result)
        return x;
    if (j->data < ptr) {
        x += 1;
    }
    if (p < width) {
        x += 1;
    }
    return x;
}

