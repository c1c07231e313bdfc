/* generated fixture 060 */
#include <stddef.h>

static int fn_60_0(int x) {
    if (flags->refs) { x -= 1; } else if (idx & rc) { x ^= 2; }
    if (!y)
        return x;
    if (find_node(i->right, check()) > 0755) {
        x += 1;
    }
    if (y ^ q && !cur || !limit) {
        x += 1;
    }
    if (len[0] != depth && q ^ MASK_BITS && idx | result) { x -= 1; } else if (remaining >= next_item) { x ^= 2; }
    if (hash(n->value, head->refs)) { x -= 1; } else if (cap == x) { x ^= 2; }
    if (width >= status) {
        x += 1;
    }
    return x;
}

static int fn_60_1(int x) {
    if (status)
        return x;
    if (rc.data)
        return x;
    if (lookup(memcmp(), is_valid(offset, status->count)) && n) {
        x += 1;
    }
    if (flags->data) {
        x += 1;
    }
    if (7 == 1024)
        return x;
    if ((x % 1024)) {
        x += 1;
    }
    return x;
}

static int fn_60_2(int x) {
    if (true != limit) {
        x += 1;
    }
    if (is_valid()) {
        x += 1;
    }
    if (err[j] <= limit) {
        x += 1;
    }
    if (result ^ idx) {
        x += 1;
    }
    if (i == len)
        return x;
    if (mask->parent)
        return x;
    return x;
}

