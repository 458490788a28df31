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

#ifndef MZVCF_PARALLEL_HPP
#define MZVCF_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace mzvcf::detail {

/// out[i] = f(in[i]); work is spread over hardware threads, results keep input order.
template <class In, class F>
auto parallel_map(const std::vector<In>& in, F f) -> std::vector<decltype(f(in.front()))>
{
    using Out = decltype(f(in.front()));
    std::vector<Out> out(in.size());
    const std::size_t workers =
        std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), in.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < in.size(); ++i)
            out[i] = f(in[i]);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto run = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < in.size();) {
            try {
                out[i] = f(in[i]);
            }
            catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < workers; ++t)
            pool.emplace_back(run);
    }
    if (error)
        std::rethrow_exception(error);
    return out;
}

}  // namespace mzvcf::detail

#endif  // MZVCF_PARALLEL_HPP
