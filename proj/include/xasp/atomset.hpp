/*
 * Copyright 2026 The xasp authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace xasp {

using AtomId = int;

// Set of atom ids backed by a bit vector. Trailing zero words are not
// significant: {0,3} stored with capacity 64 equals {0,3} stored with 128.
class AtomSet {
public:
    AtomSet() = default;

    explicit AtomSet(int capacity) { reserve(capacity); }

    void reserve(int capacity) {
        if (capacity > 0) {
            std::size_t words = (static_cast<std::size_t>(capacity) + 63) / 64;
            if (words > words_.size()) words_.resize(words, 0);
        }
    }

    bool contains(AtomId a) const {
        std::size_t w = static_cast<std::size_t>(a) / 64;
        if (a < 0 || w >= words_.size()) return false;
        return (words_[w] >> (a % 64)) & 1u;
    }

    void insert(AtomId a) {
        std::size_t w = static_cast<std::size_t>(a) / 64;
        if (w >= words_.size()) words_.resize(w + 1, 0);
        words_[w] |= std::uint64_t{1} << (a % 64);
    }

    void erase(AtomId a) {
        std::size_t w = static_cast<std::size_t>(a) / 64;
        if (a >= 0 && w < words_.size()) words_[w] &= ~(std::uint64_t{1} << (a % 64));
    }

    int count() const {
        int n = 0;
        for (auto w : words_) n += std::popcount(w);
        return n;
    }

    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    void clear() { words_.assign(words_.size(), 0); }

    AtomSet& insert_all(const AtomSet& other) {
        grow_to(other.words_.size());
        for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] |= other.words_[i];
        return *this;
    }

    AtomSet& intersect_with(const AtomSet& other) {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= i < other.words_.size() ? other.words_[i] : 0;
        return *this;
    }

    AtomSet& erase_all(const AtomSet& other) {
        for (std::size_t i = 0; i < words_.size() && i < other.words_.size(); ++i)
            words_[i] &= ~other.words_[i];
        return *this;
    }

    bool intersects(const AtomSet& other) const {
        std::size_t n = std::min(words_.size(), other.words_.size());
        for (std::size_t i = 0; i < n; ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    bool intersects_vector(const std::vector<AtomId>& ids) const {
        for (AtomId a : ids)
            if (contains(a)) return true;
        return false;
    }

    bool contains_all(const std::vector<AtomId>& ids) const {
        for (AtomId a : ids)
            if (!contains(a)) return false;
        return true;
    }

    bool subset_of(const AtomSet& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~(i < other.words_.size() ? other.words_[i] : 0)) return false;
        return true;
    }

    std::vector<AtomId> to_sorted_ids() const {
        std::vector<AtomId> ids;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                int b = std::countr_zero(bits);
                ids.push_back(static_cast<AtomId>(w * 64 + b));
                bits &= bits - 1;
            }
        }
        return ids;
    }

    friend bool operator==(const AtomSet& a, const AtomSet& b) {
        std::size_t n = std::max(a.words_.size(), b.words_.size());
        for (std::size_t i = 0; i < n; ++i)
            if (a.word(i) != b.word(i)) return false;
        return true;
    }

    friend bool operator!=(const AtomSet& a, const AtomSet& b) { return !(a == b); }

    // Lexicographic order of characteristic vectors over ascending atom ids:
    // at the first atom where the sets differ, the set without it is smaller.
    static bool lex_less(const AtomSet& a, const AtomSet& b) {
        std::size_t n = std::max(a.words_.size(), b.words_.size());
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t x = a.word(i), y = b.word(i);
            if (x != y) {
                int bit = std::countr_zero(x ^ y);
                return ((x >> bit) & 1u) == 0;
            }
        }
        return false;
    }

private:
    void grow_to(std::size_t words) {
        if (words > words_.size()) words_.resize(words, 0);
    }

    std::uint64_t word(std::size_t i) const { return i < words_.size() ? words_[i] : 0; }

    std::vector<std::uint64_t> words_;
};

} // namespace xasp
