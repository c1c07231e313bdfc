/* generated fixture 148 */
#include <stddef.h>

static int fn_148_0(int x) {
    if (j->left) {
        x += 1;
    }
    if (!total) {
        x += 1;
    }
    if (true <= 2) {
        x += 1;
    }
    if (false < x)
        return x;
    if (!total) {
        x += 1;
    }
    return x;
}

static int fn_148_1(int x) {
    if (!head) {
        x += 1;
    }
    if (strcmp(0x1f, false) >= NULL)
        return x;
    if (remaining.refs < size) {
        x += 1;
    }
    if (value & limit && q || lookup(memcmp(state, len->next), poll_event()) || 1)
        return x;
    if (!p)
        return x;
    if (size->count) {
        x += 1;
    }
    if (false) {
        x += 1;
    }
    return x;
}

