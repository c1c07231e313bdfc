#include "core/dict_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "core/errors.hpp"

namespace idioscan {
namespace {

constexpr std::string_view kHeader = "IDIOSCAN-DICT v1";

void append_patterns(const PatternDict& dict, std::string& out) {
    std::vector<std::pair<std::string, std::uint64_t>> rows;
    dict.for_each([&](std::span<const SymbolId> symbols, std::uint64_t count) {
        rows.emplace_back(dict.table().decode(symbols), count);
    });
    // Symbol order equals text order for the builtin alphabet but not for
    // arbitrary loaded ones; the file contract is text order.
    std::sort(rows.begin(), rows.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [text, count] : rows) {
        out += std::to_string(count);
        out += '\t';
        out += text;
        out += '\n';
    }
}

class Loader {
  public:
    explicit Loader(std::string_view text, std::vector<std::string>* warnings)
        : text_(text), warnings_(warnings) {}

    DictionaryBundle run() {
        if (next_line() != kHeader) throw FormatError(lineno_, "expected 'IDIOSCAN-DICT v1' header");
        if (next_line() != "[symbols]") throw FormatError(lineno_, "expected '[symbols]' section");
        std::size_t symbols_line = lineno_;
        std::vector<std::pair<SymbolId, SymbolTable::Entry>> entries;
        std::string_view line;
        while (!at_end() && (line = peek_line()) != "[patterns L1]") {
            consume_line();
            entries.push_back(parse_symbol_line(line));
        }
        if (at_end()) throw FormatError(lineno_ + 1, "expected '[patterns L1]' section");
        consume_line();  // [patterns L1]
        try {
            table_.emplace(std::move(entries));
        } catch (const std::invalid_argument& e) {
            throw FormatError(symbols_line, e.what());
        }
        DictionaryBundle bundle(*table_);
        while (!at_end() && (line = peek_line()) != "[patterns L2]") {
            consume_line();
            add_pattern_line(bundle.l1, line);
        }
        if (at_end()) throw FormatError(lineno_ + 1, "expected '[patterns L2]' section");
        consume_line();  // [patterns L2]
        while (!at_end()) {
            line = peek_line();
            consume_line();
            add_pattern_line(bundle.l2, line);
        }
        return bundle;
    }

  private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t lineno_ = 0;
    std::vector<std::string>* warnings_;
    std::optional<SymbolTable> table_;

    bool at_end() const { return pos_ >= text_.size(); }

    std::string_view peek_line() const {
        std::size_t end = text_.find('\n', pos_);
        if (end == std::string_view::npos) end = text_.size();
        return text_.substr(pos_, end - pos_);
    }

    void consume_line() {
        std::size_t end = text_.find('\n', pos_);
        pos_ = (end == std::string_view::npos) ? text_.size() : end + 1;
        ++lineno_;
    }

    std::string_view next_line() {
        if (at_end()) throw FormatError(lineno_ + 1, "unexpected end of file");
        std::string_view line = peek_line();
        consume_line();
        return line;
    }

    template <typename T>
    T parse_uint(std::string_view field, const char* what) {
        T value{};
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (ec != std::errc() || ptr != field.data() + field.size())
            throw FormatError(lineno_, std::string("malformed ") + what);
        return value;
    }

    std::pair<SymbolId, SymbolTable::Entry> parse_symbol_line(std::string_view line) {
        std::size_t t1 = line.find('\t');
        std::size_t t2 = t1 == std::string_view::npos ? t1 : line.find('\t', t1 + 1);
        if (t2 == std::string_view::npos)
            throw FormatError(lineno_, "expected id<TAB>class<TAB>name");
        SymbolId id = parse_uint<SymbolId>(line.substr(0, t1), "symbol id");
        SymbolClass cls;
        if (!symbol_class_from_name(line.substr(t1 + 1, t2 - t1 - 1), cls))
            throw FormatError(lineno_, "unknown symbol class");
        std::string_view name = line.substr(t2 + 1);
        if (name.empty()) throw FormatError(lineno_, "empty symbol name");
        return {id, {cls, std::string(name)}};
    }

    void add_pattern_line(PatternDict& dict, std::string_view line) {
        std::size_t tab = line.find('\t');
        if (tab == std::string_view::npos)
            throw FormatError(lineno_, "expected count<TAB>pattern");
        std::uint64_t count = parse_uint<std::uint64_t>(line.substr(0, tab), "occurrence count");
        if (count == 0) throw FormatError(lineno_, "occurrence count must be positive");
        std::string_view text = line.substr(tab + 1);
        std::vector<SymbolId> symbols;
        try {
            symbols = table_->encode(text);
        } catch (const PatternError& e) {
            throw FormatError(lineno_, e.what());
        } catch (const UnknownSymbolError& e) {
            throw FormatError(lineno_, e.what());
        }
        if (dict.lookup_symbols(symbols).has_value() && warnings_ != nullptr) {
            warnings_->push_back("line " + std::to_string(lineno_) + ": duplicate pattern '" +
                                 std::string(text) + "', counts summed");
        }
        dict.insert_symbols(symbols, count);
    }
};

}  // namespace

std::string dictionary_to_string(const DictionaryBundle& bundle) {
    std::string out;
    out += kHeader;
    out += '\n';
    out += "[symbols]\n";
    bundle.l1.table().for_each([&](SymbolId id, const SymbolTable::Entry& e) {
        out += std::to_string(id);
        out += '\t';
        out += symbol_class_name(e.cls);
        out += '\t';
        out += e.name;
        out += '\n';
    });
    out += "[patterns L1]\n";
    append_patterns(bundle.l1, out);
    out += "[patterns L2]\n";
    append_patterns(bundle.l2, out);
    return out;
}

DictionaryBundle dictionary_from_string(std::string_view text,
                                        std::vector<std::string>* warnings) {
    return Loader(text, warnings).run();
}

void save_dictionary(const DictionaryBundle& bundle, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError(path.string(), "cannot open for writing");
    std::string text = dictionary_to_string(bundle);
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw IoError(path.string(), "write failed");
}

DictionaryBundle load_dictionary(const std::filesystem::path& path,
                                 std::vector<std::string>* warnings) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(path.string(), "cannot open for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError(path.string(), "read failed");
    return dictionary_from_string(buf.str(), warnings);
}

}  // namespace idioscan
