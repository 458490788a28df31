/*
   Copyright 2026 The mzvcf Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef MZVCF_MEMO_HPP
#define MZVCF_MEMO_HPP

#include <mutex>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <utility>

namespace mzvcf::detail {

/*
   Shared-read, exclusive-insert cache. Values are results of pure functions,
   so two threads racing to insert the same key insert equal values and the
   loser's insert is simply dropped.
*/
template <class Key, class Value, class Hash = std::hash<Key>>
class Memo {
   public:
    std::optional<Value> find(const Key& k) const
    {
        std::shared_lock lock(mutex_);
        auto it = map_.find(k);
        if (it == map_.end())
            return std::nullopt;
        return it->second;
    }

    void insert(const Key& k, const Value& v)
    {
        std::unique_lock lock(mutex_);
        map_.try_emplace(k, v);
    }

    template <class F>
    Value get_or_compute(const Key& k, F&& compute)
    {
        if (auto hit = find(k))
            return std::move(*hit);
        Value v = compute();
        insert(k, v);
        return v;
    }

    std::size_t size() const
    {
        std::shared_lock lock(mutex_);
        return map_.size();
    }

   private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<Key, Value, Hash> map_;
};

}  // namespace mzvcf::detail

#endif  // MZVCF_MEMO_HPP
