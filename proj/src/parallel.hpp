#pragma once

#include <algorithm>
#include <thread>
#include <vector>

namespace msim::detail {

/// Runs body(i) for i in [0, n) on up to hardware_concurrency threads in
/// contiguous blocks. Bodies must only write to slots they own.
template <class Body>
void parallel_for(int n, Body&& body) {
    const int workers = std::clamp(static_cast<int>(std::thread::hardware_concurrency()), 1, std::max(n, 1));
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        const int lo = static_cast<int>(static_cast<long long>(n) * w / workers);
        const int hi = static_cast<int>(static_cast<long long>(n) * (w + 1) / workers);
        pool.emplace_back([lo, hi, &body] {
            for (int i = lo; i < hi; ++i) body(i);
        });
    }
}

}  // namespace msim::detail
