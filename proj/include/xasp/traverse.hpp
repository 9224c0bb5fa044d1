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

#include <map>
#include <optional>
#include <vector>

#include "xasp/support.hpp"

namespace xasp {

// Slice of a support table reachable from some starting point, keyed like
// the table itself. Keys remember discovery order so downstream enumeration
// is deterministic.
struct LocalTable {
    std::vector<SignedLit> order;
    std::map<SignedLit, std::vector<SupportSet>> entries;

    bool has(SignedLit l) const { return entries.count(l) != 0; }

    void add(SignedLit l, std::vector<SupportSet> sets) {
        if (has(l)) throw InternalError("literal added to a local table twice");
        order.push_back(l);
        entries.emplace(l, std::move(sets));
    }
};

// Copies into `local` every table entry transitively reachable from the
// literals of `seed`. Markers close branches; literals already collected are
// not expanded again, which also ends cyclic chains.
inline void get_connection(const SupportSet& seed, const SupportTable& table, LocalTable& local) {
    if (seed.marker != Marker::none) return;
    for (SignedLit l : seed.lits) {
        if (local.has(l)) continue;
        const std::vector<SupportSet>& entry = table.at(l);
        local.add(l, entry);
        for (const SupportSet& s : entry) get_connection(s, table, local);
    }
}

// One committed choice of support set per literal.
using Selection = std::map<SignedLit, SupportSet>;

// Odometer over all ways to pick one support set per local-table key. The
// first discovered key is the most significant digit. A cap bounds how many
// combinations are handed out; hitting it sets the truncated flag.
class SelectionCursor {
public:
    SelectionCursor(const LocalTable& local, long long cap)
        : local_(&local), digits_(local.order.size(), 0), cap_(cap) {
        total_ = 1;
        for (SignedLit l : local.order) {
            long long width = static_cast<long long>(local.entries.at(l).size());
            if (width == 0) throw InternalError("local table entry with no support sets");
            if (total_ > saturation_ / width)
                total_ = saturation_;
            else
                total_ *= width;
        }
        truncated_ = total_ > cap_;
    }

    bool truncated() const { return truncated_; }
    long long total_combinations() const { return total_; }

    std::optional<Selection> next() {
        if (done_ || produced_ >= std::min(total_, cap_)) return std::nullopt;
        Selection picked;
        for (std::size_t i = 0; i < digits_.size(); ++i) {
            SignedLit l = local_->order[i];
            picked.emplace(l, local_->entries.at(l)[digits_[i]]);
        }
        ++produced_;
        for (std::size_t i = digits_.size(); i-- > 0;) {
            SignedLit l = local_->order[i];
            if (++digits_[i] < local_->entries.at(l).size()) break;
            digits_[i] = 0;
            if (i == 0) done_ = true;
        }
        if (digits_.empty()) done_ = true;
        return picked;
    }

private:
    static constexpr long long saturation_ = 1LL << 62;

    const LocalTable* local_;
    std::vector<std::size_t> digits_;
    long long cap_;
    long long total_ = 1;
    long long produced_ = 0;
    bool done_ = false;
    bool truncated_ = false;
};

} // namespace xasp
