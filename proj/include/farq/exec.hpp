#pragma once

#include <future>
#include <thread>
#include <vector>

namespace farq {

// Strata are independent; results land in preallocated slots, so the merge
// order (and therefore every output) is identical under both policies.
struct ExecPolicy {
    bool parallel = false;
};

template <typename Fn>
void for_each_index(int count, const ExecPolicy& policy, Fn&& fn) {
    if (!policy.parallel || count < 2) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    const unsigned workers =
        std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()), static_cast<unsigned>(count));
    std::vector<std::future<void>> futures;
    futures.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        futures.push_back(std::async(std::launch::async, [&, w] {
            for (int i = static_cast<int>(w); i < count; i += static_cast<int>(workers)) fn(i);
        }));
    }
    for (auto& f : futures) f.get();
}

}  // namespace farq
