#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace rgh {

// Internal-consistency failure: the engine detected a violated invariant
// (non-integral grading, failed grading-drop identity, inexact division,
// d^2 != 0).  CLI maps this to exit code 3.
struct consistency_error : std::runtime_error {
    explicit consistency_error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid input (bad file, asymmetric diagram, wrong classification).
// CLI maps this to exit code 2.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Grid size beyond the configured limit.  CLI maps this to exit code 4.
struct capacity_error : std::runtime_error {
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

inline int worker_count() {
    if (const char* env = std::getenv("RGH_THREADS")) {
        int k = std::atoi(env);
        if (k >= 1) return k;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

// Chunked parallel loop over [0, count).  Results must be merged by index by
// the caller; the chunking is deterministic and independent of thread count.
template <class F>
void parallel_for(std::size_t count, F&& body, int threads = worker_count()) {
    if (count == 0) return;
    if (threads <= 1 || count < 2048) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    std::size_t chunk = (count + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        std::size_t lo = t * chunk, hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &body] {
            for (std::size_t i = lo; i < hi; ++i) body(i);
        });
    }
    for (auto& th : pool) th.join();
}

inline std::uint64_t fnv1a(const std::uint8_t* data, std::size_t len,
                           std::uint64_t seed = 1469598103934665603ull) {
    std::uint64_t h = seed;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= data[i];
        h *= 1099511628211ull;
    }
    return h;
}

// Deterministic 64-bit PRNG (splitmix64) for randomized move tests.
struct splitmix64 {
    std::uint64_t state;
    explicit splitmix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t bound) { return bound ? next() % bound : 0; }
};

}  // namespace rgh
