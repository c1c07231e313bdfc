#pragma once

// Shared builders for the dictionaries and corpora the tests run against.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "core/abstraction.hpp"
#include "core/dict_io.hpp"
#include "core/parser.hpp"
#include "core/pattern_dict.hpp"

namespace idioscan::test {

struct Seed {
    std::string text;  // condition or serialized pattern, see the builders
    std::uint64_t count;
};

// The ten highest-frequency L1 shapes in the reference frequency table,
// given as representative conditions.
inline std::vector<Seed> frequency_table_major() {
    return {
        {"x", 4'300'000},
        {"!x", 2'090'000},
        {"p->f", 1'300'000},
        {"x == y", 1'160'000},
        {"x < 0", 1'130'000},
        {"x == 0", 1'090'000},
        {"foo(x)", 1'050'000},
        {"p == NULL", 790'000},
        {"p->f == y", 732'000},
        {"x != y", 636'000},
    };
}

// The seven rare shapes (< 1% tail) from the same table, as serialized
// pattern texts; the third row's recorded shape has an empty arg_list.
inline std::vector<Seed> frequency_table_rare_patterns() {
    return {
        {"(binary_expr (\"=\") (identifier)(number))", 487},
        {"(binary_expr (\"=\") (identifier)(identifier))", 476},
        {"(binary_expr (\"=\") (identifier)(call_expr (identifier)(arg_list)))", 356},
        {"(binary_expr (\"%\") (identifier)(number))", 6468},
        {"(binary_expr (\"|\") (identifier)(identifier))", 1137},
        {"(binary_expr (\"^\") (identifier)(identifier))", 813},
        {"(binary_expr (\"==\") (number)(number))", 236},
    };
}

// Inserts one L1 pattern (and its derived L2 form) with a count.
inline void seed_pattern(DictionaryBundle& bundle, const ExprTree& l1, std::uint64_t count,
                         int l2_depth = 1, bool l2_prune = false) {
    bundle.l1.insert(make_key(AbstractionLevel::L1, l1, bundle.l1.table()), count);
    ExprTree l2 = abstract_l2(l1, l2_depth, l2_prune);
    bundle.l2.insert(make_key(AbstractionLevel::L2, l2, bundle.l2.table()), count);
}

// Bundle from (condition text, count) pairs — conditions are parsed and
// abstracted exactly as mining would.
inline DictionaryBundle bundle_from_conditions(const std::vector<Seed>& seeds) {
    DictionaryBundle bundle{SymbolTable::builtin()};
    for (const Seed& s : seeds) seed_pattern(bundle, abstract_l1(parse_condition(s.text)), s.count);
    return bundle;
}

// Bundle from (serialized L1 pattern, count) pairs.
inline DictionaryBundle bundle_from_patterns(const std::vector<Seed>& seeds) {
    DictionaryBundle bundle{SymbolTable::builtin()};
    for (const Seed& s : seeds) seed_pattern(bundle, parse_serialized(s.text), s.count);
    return bundle;
}

// Both frequency tables merged — the dictionary behind the motivating
// `if (x = 7)` scenario.
inline DictionaryBundle frequency_table_bundle() {
    DictionaryBundle bundle = bundle_from_conditions(frequency_table_major());
    for (const Seed& s : frequency_table_rare_patterns())
        seed_pattern(bundle, parse_serialized(s.text), s.count);
    return bundle;
}

/// The four reference anomaly blocks: (target condition, seeds as conditions).
struct AnomalyFixture {
    std::string name;
    std::string target_condition;
    std::vector<Seed> seeds;  // conditions; first one is the target's shape
};

inline std::vector<AnomalyFixture> anomaly_fixtures() {
    return {
        {"block1-keepon",
         "s->keepon > TRUE",
         {{"s->keepon > TRUE", 4}, {"s->keepon > 5", 127'540}, {"s->keepon > x", 56'475}}},
        {"block2-xor",
         "(s1 == NULL) ^ (s2 == NULL)",
         {{"(s1 == NULL) ^ (s2 == NULL)", 8},
          {"(s1 == NULL) | (s2 == NULL)", 32},
          {"(s1 == NULL) || (s2 == NULL)", 6808},
          {"(s1 == NULL) && (s2 == NULL)", 521}}},
        {"block3-negated-compare",
         "-2 == rv",
         {{"-2 == rv", 16'529},
          {"variable == rv", 1'164'852},
          {"-2 != rv", 6483},
          {"-2 <= rv", 2170},
          {"-2 >= rv", 265}}},
        {"block4-call-compare",
         "BIO_puts(bp, \":\") <= 0",
         {{"BIO_puts(bp, \":\") <= 0", 475},
          {"BIO_puts(bp, \":\") == 0", 80'350},
          {"BIO_puts(bp, \":\") != 0", 4559},
          {"BIO_puts(bp, \":\") < 0", 1431}}},
    };
}

// Scratch directory that cleans up after itself.
class TempDir {
  public:
    explicit TempDir(const std::string& tag) {
        std::random_device rd;
        auto base = std::filesystem::temp_directory_path();
        for (int i = 0; i < 64; ++i) {
            std::filesystem::path candidate =
                base / ("idioscan-" + tag + "-" + std::to_string(rd()));
            std::error_code ec;
            if (std::filesystem::create_directory(candidate, ec)) {
                path_ = candidate;
                return;
            }
        }
        throw std::runtime_error("cannot create temp directory");
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }

    std::filesystem::path write(const std::string& name, const std::string& content) const {
        std::filesystem::path p = path_ / name;
        std::filesystem::create_directories(p.parent_path());
        std::ofstream out(p, std::ios::binary);
        out << content;
        out.flush();
        if (!out) throw std::runtime_error("cannot write " + p.string());
        return p;
    }

  private:
    std::filesystem::path path_;
};

inline std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace idioscan::test
