#pragma once

#include <cstdint>
#include <list>
#include <unordered_map>
#include <utility>

#include "core/autocorrect.hpp"

namespace idioscan {

// Memoizes search_trie results by (level, target symbols, max_cost) with
// least-recently-used eviction. Single-owner: each scanner worker holds its
// own instance, so no locking is needed.
class CorrectionCache {
  public:
    explicit CorrectionCache(std::size_t capacity) : capacity_(capacity) {}

    // Returns the cached set or runs search_trie and stores the result.
    // Capacity 0 disables storage entirely.
    CorrectionSet get(const PatternDict& dict, const PatternKey& target, int max_cost) {
        Key key{dict.level(), target.symbols, max_cost};
        auto it = map_.find(key);
        if (it != map_.end()) {
            ++hits_;
            lru_.splice(lru_.begin(), lru_, it->second);
            return it->second->second;
        }
        ++misses_;
        ++traversals_;
        CorrectionSet result = search_trie(dict, target, max_cost);
        if (capacity_ > 0) {
            lru_.emplace_front(key, result);
            map_.emplace(std::move(key), lru_.begin());
            if (lru_.size() > capacity_) {
                map_.erase(lru_.back().first);
                lru_.pop_back();
            }
        }
        return result;
    }

    std::uint64_t hits() const { return hits_; }
    std::uint64_t misses() const { return misses_; }
    // Number of actual trie traversals performed (equals misses).
    std::uint64_t traversals() const { return traversals_; }

  private:
    struct Key {
        AbstractionLevel level;
        std::vector<SymbolId> symbols;
        int max_cost;

        bool operator==(const Key& o) const {
            return level == o.level && max_cost == o.max_cost && symbols == o.symbols;
        }
    };

    struct KeyHash {
        std::size_t operator()(const Key& k) const {
            std::size_t h = 1469598103934665603ull;
            auto mix = [&h](std::size_t x) {
                h ^= x + 1;
                h *= 1099511628211ull;
            };
            mix(static_cast<std::size_t>(k.level));
            mix(static_cast<std::size_t>(k.max_cost) + 7);
            for (SymbolId s : k.symbols) mix(s);
            return h;
        }
    };

    std::size_t capacity_;
    std::list<std::pair<Key, CorrectionSet>> lru_;
    std::unordered_map<Key, typename std::list<std::pair<Key, CorrectionSet>>::iterator, KeyHash>
        map_;
    std::uint64_t hits_ = 0;
    std::uint64_t misses_ = 0;
    std::uint64_t traversals_ = 0;
};

}  // namespace idioscan
