#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <mutex>
#include <optional>
#include <thread>
#include <type_traits>
#include <utility>
#include <vector>

namespace hypercol {

/// Runs `fn(i)` for i in [0, count) on up to `threads` workers and returns
/// the result of the smallest i whose call produced a value. Indices are
/// handed out in increasing order and work above the best hit is skipped,
/// so the answer never depends on scheduling.
template <typename Fn>
auto first_success(std::size_t count, unsigned threads, Fn&& fn)
    -> std::optional<std::pair<std::size_t, typename std::invoke_result_t<Fn&, std::size_t>::value_type>>
{
    using Value = typename std::invoke_result_t<Fn&, std::size_t>::value_type;
    using Hit = std::pair<std::size_t, Value>;

    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            if (auto v = fn(i))
                return Hit{i, std::move(*v)};
        return std::nullopt;
    }

    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{count};
    std::optional<Hit> hit;
    std::mutex hit_mutex;

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count || i >= best.load())
                return;
            auto v = fn(i);
            if (!v)
                continue;
            std::lock_guard lock(hit_mutex);
            if (!hit || i < hit->first) {
                hit.emplace(i, std::move(*v));
                best.store(i);
            }
        }
    };

    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(threads, count));
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back(worker);
    pool.clear();
    return hit;
}

} // namespace hypercol
