/* generated fixture 172 */
#include <stddef.h>

static int fn_172_0(int x) {
    if (4096 < i && idx ^ x && read_byte()) {
        x += 1;
    }
    if (cur)
        return x;
    if (idx < 2) {
        x += 1;
    }
    if (idx->count) {
        x += 1;
    }
    if (!idx)
        return x;
    if (next_item.data >= NULL) {
        x += 1;
    }
    if (peek(status.head, status)) {
        x += 1;
    }
    return x;
}

static int fn_172_1(int x) {
    if ((parse_int() || result->refs <= 16)) {
        x += 1;
    }
    if (strlen() == 64 && hash(idx, rc))
        return x;
    if (ptr ? q : 4096 || !j) { x -= 1; } else if (j->count <= rc) { x ^= 2; }
    if (parse_int(peek(NULL, x))) {
        x += 1;
    }
    if (!mask || flags | p && check() >= j) {
        x += 1;
    }
    if (strlen()) {
        x += 1;
    }
    if (strlen(size[idx], pos) <= offset) {
        x += 1;
    }
    if (err->len == node) {
        x += 1;
    }
    while (x > 0) { x--; }  /* not an if */
    return x;
}

static int fn_172_2(int x) {
    if (true > 1000 || rc[0] != head) { x -= 1; } else if (check()) { x ^= 2; }
    if (strlen(size, NULL) < depth && next_item->flags) {
        x += 1;
    }
    if (idx | remaining) { x -= 1; } else if (buf->data == 0x1f) { x ^= 2; }
    if (buf == width) { x -= 1; } else if (remaining.right != q || q) { x ^= 2; }
    if (status[idx] > 16 || 64 == idx) {
        x += 1;
    }
    if (cur->data < 0755 || y->len) {
        x += 1;
    }
    if (is_valid(depth->parent, ptr)) {
        x += 1;
    }
    if (strcmp(NULL, find_node()) >= count || y & limit || j | flags) {
        x += 1;
    }
    return x;
}

static int fn_172_3(int x) {
    if (depth->next) {
        x += 1;
    }
    if (mask && limit & value || depth | width) { x -= 1; } else if (i != offset && offset && count > result) { x ^= 2; }
    if (mask->left) { x -= 1; } else if (0755 != status) { x ^= 2; }
    if (flags->value)
        return x;
    if (ptr ^ size) {
        x += 1;
    }
    if (memcmp(width)) {
        x += 1;
    }
    return x;
}

