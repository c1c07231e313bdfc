/* generated fixture 047 */
#include <stddef.h>

static int fn_47_0(int x) {
    if (err <= width) {
        x += 1;
    }
    if (strlen(0x1f, value) >= flags)
        return x;
    if (255 == 64 && remaining->flags && p | value) {
        x += 1;
    }
    if (next_item->left) {
        x += 1;
    }
    return x;
}

static int fn_47_1(int x) {
    if (!result) {
        x += 1;
    }
    if (x->value) {
        x += 1;
    }
    if (next_item - 0xFF) {
        x += 1;
    }
    return x;
}

