#include "core/symbol_table.hpp"

#include <algorithm>
#include <stdexcept>

#include "core/errors.hpp"

namespace idioscan {

const char* symbol_class_name(SymbolClass c) {
    switch (c) {
        case SymbolClass::StructuralOpen: return "open";
        case SymbolClass::StructuralClose: return "close";
        case SymbolClass::NodeType: return "node";
        case SymbolClass::OpChar: return "op";
    }
    return "?";
}

bool symbol_class_from_name(std::string_view name, SymbolClass& out) {
    if (name == "open") out = SymbolClass::StructuralOpen;
    else if (name == "close") out = SymbolClass::StructuralClose;
    else if (name == "node") out = SymbolClass::NodeType;
    else if (name == "op") out = SymbolClass::OpChar;
    else return false;
    return true;
}

SymbolTable SymbolTable::builtin() {
    std::vector<std::pair<SymbolId, Entry>> entries;
    entries.push_back({0, {SymbolClass::StructuralOpen, "("}});
    entries.push_back({1, {SymbolClass::StructuralClose, ")"}});

    std::vector<std::string> node_names;
    for (std::size_t i = 0; i < kNodeTypeCount; ++i)
        node_names.push_back(node_type_name(static_cast<NodeType>(i)));
    std::sort(node_names.begin(), node_names.end());
    SymbolId next = 2;
    for (const std::string& n : node_names) entries.push_back({next++, {SymbolClass::NodeType, n}});

    // ASCII order keeps symbol-sequence order aligned with text order.
    for (char c : std::string_view("!%&*+,-/:<=>?^|~"))
        entries.push_back({next++, {SymbolClass::OpChar, std::string(1, c)}});
    return SymbolTable(std::move(entries));
}

SymbolTable::SymbolTable(std::vector<std::pair<SymbolId, Entry>> entries) {
    SymbolId max_id = 0;
    for (const auto& [id, entry] : entries) {
        if (id == kUnknownSymbol) throw std::invalid_argument("symbol id 0xFFFF is reserved");
        max_id = std::max(max_id, id);
    }
    if (entries.empty()) throw std::invalid_argument("empty symbol table");
    slots_.resize(static_cast<std::size_t>(max_id) + 1);
    for (auto& [id, entry] : entries) {
        Slot& s = slots_[id];
        if (s.used) throw std::invalid_argument("duplicate symbol id " + std::to_string(id));
        s.used = true;
        s.cls = entry.cls;
        s.name = std::move(entry.name);
    }
    index_slots();
}

void SymbolTable::index_slots() {
    node_ids_.assign(kNodeTypeCount, kUnknownSymbol);
    op_ids_.assign(256, kUnknownSymbol);
    bool have_open = false;
    bool have_close = false;
    valid_count_ = 0;
    alphabet_.clear();
    for (std::size_t i = 0; i < slots_.size(); ++i) {
        Slot& s = slots_[i];
        if (!s.used) continue;
        ++valid_count_;
        alphabet_.push_back(static_cast<SymbolId>(i));
        switch (s.cls) {
            case SymbolClass::StructuralOpen:
                if (have_open) throw std::invalid_argument("duplicate structural open symbol");
                if (s.name != "(") throw std::invalid_argument("open symbol must be named '('");
                have_open = true;
                open_id_ = static_cast<SymbolId>(i);
                break;
            case SymbolClass::StructuralClose:
                if (have_close) throw std::invalid_argument("duplicate structural close symbol");
                if (s.name != ")") throw std::invalid_argument("close symbol must be named ')'");
                have_close = true;
                close_id_ = static_cast<SymbolId>(i);
                break;
            case SymbolClass::NodeType: {
                NodeType t;
                if (!node_type_from_name(s.name, t))
                    throw std::invalid_argument("unknown node type name '" + s.name + "'");
                if (node_ids_[static_cast<std::size_t>(t)] != kUnknownSymbol)
                    throw std::invalid_argument("duplicate node type '" + s.name + "'");
                s.ntype = t;
                node_ids_[static_cast<std::size_t>(t)] = static_cast<SymbolId>(i);
                break;
            }
            case SymbolClass::OpChar: {
                if (s.name.size() != 1 || !is_op_char(s.name[0]))
                    throw std::invalid_argument("op symbol must be a single operator character, got '" +
                                                s.name + "'");
                unsigned char c = static_cast<unsigned char>(s.name[0]);
                if (op_ids_[c] != kUnknownSymbol)
                    throw std::invalid_argument("duplicate op character '" + s.name + "'");
                s.opch = s.name[0];
                op_ids_[c] = static_cast<SymbolId>(i);
                break;
            }
        }
    }
    if (!have_open || !have_close)
        throw std::invalid_argument("symbol table must define one open and one close symbol");
}

bool SymbolTable::has(SymbolId id) const { return id < slots_.size() && slots_[id].used; }

SymbolClass SymbolTable::cls(SymbolId id) const { return slots_[id].cls; }

const std::string& SymbolTable::name(SymbolId id) const { return slots_[id].name; }

NodeType SymbolTable::node_type(SymbolId id) const { return slots_[id].ntype; }

char SymbolTable::op_char(SymbolId id) const { return slots_[id].opch; }

bool SymbolTable::find_node(std::string_view node_name, SymbolId& out) const {
    NodeType t;
    if (!node_type_from_name(node_name, t)) return false;
    SymbolId id = node_ids_[static_cast<std::size_t>(t)];
    if (id == kUnknownSymbol) return false;
    out = id;
    return true;
}

bool SymbolTable::find_op(char c, SymbolId& out) const {
    SymbolId id = op_ids_[static_cast<unsigned char>(c)];
    if (id == kUnknownSymbol) return false;
    out = id;
    return true;
}

bool SymbolTable::same_alphabet(const SymbolTable& other) const {
    if (slots_.size() != other.slots_.size()) return false;
    for (std::size_t i = 0; i < slots_.size(); ++i) {
        const Slot& a = slots_[i];
        const Slot& b = other.slots_[i];
        if (a.used != b.used) return false;
        if (a.used && (a.cls != b.cls || a.name != b.name)) return false;
    }
    return true;
}

void SymbolTable::for_each(const std::function<void(SymbolId, const Entry&)>& fn) const {
    for (std::size_t i = 0; i < slots_.size(); ++i) {
        if (!slots_[i].used) continue;
        Entry e{slots_[i].cls, slots_[i].name};
        fn(static_cast<SymbolId>(i), e);
    }
}

namespace {

void encode_node(const SymbolTable& table, const ExprTree& n, bool lenient,
                 std::vector<SymbolId>& out) {
    out.push_back(table.open_id());
    SymbolId id;
    if (table.find_node(node_type_name(n.type), id)) {
        out.push_back(id);
    } else if (lenient) {
        out.push_back(kUnknownSymbol);
    } else {
        throw UnknownSymbolError(node_type_name(n.type));
    }
    if (node_takes_op(n.type)) {
        for (char c : n.op) {
            if (table.find_op(c, id)) {
                out.push_back(id);
            } else if (lenient) {
                out.push_back(kUnknownSymbol);
            } else {
                throw UnknownSymbolError(std::string(1, c));
            }
        }
    }
    for (const ExprTree& c : n.children) encode_node(table, c, lenient, out);
    out.push_back(table.close_id());
}

}  // namespace

std::vector<SymbolId> SymbolTable::encode_tree(const ExprTree& pattern, bool lenient) const {
    std::vector<SymbolId> out;
    encode_node(*this, pattern, lenient, out);
    return out;
}

std::vector<SymbolId> SymbolTable::encode(std::string_view pattern_text) const {
    return encode_tree(parse_serialized(pattern_text), /*lenient=*/false);
}

std::vector<SymbolId> SymbolTable::encode_target(std::string_view pattern_text) const {
    return encode_tree(parse_serialized(pattern_text), /*lenient=*/true);
}

ExprTree SymbolTable::decode_tree(std::span<const SymbolId> symbols) const {
    // Rebuild the tree with an explicit stack, then let validate_pattern
    // judge it — keeps this in lockstep with is_valid_pattern.
    std::vector<ExprTree> stack;
    std::vector<bool> named;
    std::size_t i = 0;
    for (; i < symbols.size(); ++i) {
        SymbolId id = symbols[i];
        if (!has(id)) throw UnknownSymbolError("id " + std::to_string(id));
        switch (cls(id)) {
            case SymbolClass::StructuralOpen:
                if (!stack.empty() && !named.back()) throw PatternError(i, "node type symbol");
                stack.emplace_back();
                named.push_back(false);
                break;
            case SymbolClass::NodeType:
                if (stack.empty() || named.back()) throw PatternError(i, "misplaced node type");
                stack.back().type = node_type(id);
                named.back() = true;
                break;
            case SymbolClass::OpChar:
                if (stack.empty() || !named.back() || !stack.back().children.empty())
                    throw PatternError(i, "misplaced operator character");
                stack.back().op += op_char(id);
                break;
            case SymbolClass::StructuralClose: {
                if (stack.empty() || !named.back()) throw PatternError(i, "misplaced close");
                ExprTree done = std::move(stack.back());
                stack.pop_back();
                named.pop_back();
                if (stack.empty()) {
                    if (i + 1 != symbols.size()) throw PatternError(i + 1, "end of symbols");
                    std::string why;
                    if (!validate_pattern(done, &why)) throw PatternError(i, why);
                    return done;
                }
                stack.back().children.push_back(std::move(done));
                break;
            }
        }
    }
    throw PatternError(i, "complete pattern");
}

std::string SymbolTable::decode(std::span<const SymbolId> symbols) const {
    return serialize(decode_tree(symbols));
}

namespace {

bool stream_arity_ok(NodeType t, std::size_t n) {
    switch (t) {
        case NodeType::UnaryExpr:
        case NodeType::ParenthesizedExpr:
            return n == 1;
        case NodeType::FieldExpr:
        case NodeType::SubscriptExpr:
        case NodeType::CallExpr:
        case NodeType::BinaryExpr:
            return n == 2;
        case NodeType::ConditionalExpr:
            return n == 3;
        case NodeType::CommaExpr:
            return n >= 2;
        case NodeType::ArgList:
            return true;
        default:
            return n == 0;
    }
}

bool stream_child_ok(NodeType parent, std::size_t index, NodeType child) {
    bool expr = child != NodeType::FieldIdentifier && child != NodeType::ArgList;
    if (parent == NodeType::FieldExpr) {
        if (index == 0) return expr;
        if (index == 1)
            return child == NodeType::FieldIdentifier || child == NodeType::NonTerminalExpr;
        return false;
    }
    if (parent == NodeType::CallExpr) {
        if (index == 0) return expr;
        if (index == 1) return child == NodeType::ArgList || child == NodeType::NonTerminalExpr;
        return false;
    }
    return expr;
}

}  // namespace

bool SymbolTable::is_valid_pattern(std::span<const SymbolId> symbols) const {
    struct Frame {
        NodeType type;
        bool named = false;
        std::uint32_t children = 0;
        std::uint8_t oplen = 0;
        char op[3];
    };
    // Patterns are shallow; a fixed stack avoids allocation on the
    // candidate-generation hot path.
    constexpr std::size_t kMaxDepth = 256;
    Frame stack[kMaxDepth];
    std::size_t depth = 0;

    for (std::size_t i = 0; i < symbols.size(); ++i) {
        SymbolId id = symbols[i];
        if (!has(id)) return false;
        switch (cls(id)) {
            case SymbolClass::StructuralOpen:
                if (depth > 0 && !stack[depth - 1].named) return false;
                if (depth == kMaxDepth) return false;
                stack[depth++] = Frame{};
                break;
            case SymbolClass::NodeType: {
                if (depth == 0) return false;
                Frame& f = stack[depth - 1];
                if (f.named) return false;
                f.type = node_type(id);
                f.named = true;
                break;
            }
            case SymbolClass::OpChar: {
                if (depth == 0) return false;
                Frame& f = stack[depth - 1];
                if (!f.named || f.children > 0 || !node_takes_op(f.type)) return false;
                if (f.oplen == 3) return false;
                f.op[f.oplen++] = op_char(id);
                break;
            }
            case SymbolClass::StructuralClose: {
                if (depth == 0) return false;
                Frame& f = stack[depth - 1];
                if (!f.named) return false;
                std::string_view op(f.op, f.oplen);
                if (node_takes_op(f.type)) {
                    bool ok = f.type == NodeType::UnaryExpr ? is_unary_op_lexeme(op)
                                                            : is_binary_op_lexeme(op);
                    if (!ok) return false;
                } else if (f.oplen != 0) {
                    return false;
                }
                if (!stream_arity_ok(f.type, f.children)) return false;
                NodeType finished = f.type;
                --depth;
                if (depth == 0) {
                    // Root closed: must be the last symbol and an expression.
                    if (i + 1 != symbols.size()) return false;
                    if (finished == NodeType::FieldIdentifier || finished == NodeType::ArgList)
                        return false;
                    return true;
                }
                Frame& parent = stack[depth - 1];
                if (!stream_child_ok(parent.type, parent.children, finished)) return false;
                ++parent.children;
                break;
            }
        }
    }
    return false;  // ran out of symbols before the root closed
}

}  // namespace idioscan
