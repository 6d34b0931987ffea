#pragma once

#include <future>
#include <optional>
#include <thread>
#include <vector>

namespace gitstab {

/// Apply f to every item, optionally fanning chunks out over std::async.
/// Results are merged by index, so the output never depends on scheduling.
template <typename T, typename F>
auto parallel_map(const std::vector<T>& items, F f, bool parallel)
    -> std::vector<decltype(f(items.front()))> {
    using R = decltype(f(items.front()));
    std::vector<std::optional<R>> buf(items.size());
    size_t workers = std::thread::hardware_concurrency();
    if (!parallel || workers <= 1 || items.size() < 2) {
        for (size_t i = 0; i < items.size(); ++i) buf[i] = f(items[i]);
    } else {
        workers = std::min(workers, items.size());
        std::vector<std::future<void>> futures;
        futures.reserve(workers);
        for (size_t w = 0; w < workers; ++w) {
            futures.push_back(std::async(std::launch::async, [&, w] {
                for (size_t i = w; i < items.size(); i += workers) buf[i] = f(items[i]);
            }));
        }
        for (auto& fut : futures) fut.get();  // rethrows worker exceptions
    }
    std::vector<R> out;
    out.reserve(items.size());
    for (auto& r : buf) out.push_back(std::move(*r));
    return out;
}

}  // namespace gitstab
