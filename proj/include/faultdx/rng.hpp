#ifndef FAULTDX_RNG_HPP
#define FAULTDX_RNG_HPP

#include <algorithm>
#include <exception>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <thread>
#include <vector>

#include "core.hpp"

/**
 * @file rng.hpp
 * @brief Counter-based random streams, seeded permutations and a deterministic parallel loop.
 *
 * Every random draw in the library comes from a `CounterRng` whose key is derived
 * from the user seed plus the identity of the work item (restart index, permutation
 * index, group pair, ...). Output therefore never depends on evaluation order or
 * on the number of worker threads.
 */

namespace faultdx {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Hash a seed and a list of stream identifiers into one 64-bit key.
inline std::uint64_t derive_key(std::uint64_t seed, std::initializer_list<std::uint64_t> ids) noexcept {
    std::uint64_t h = mix64(seed ^ 0x6a09e667f3bcc909ULL);
    for (auto id : ids) {
        h = mix64(h ^ mix64(id + 0x9e3779b97f4a7c15ULL));
    }
    return h;
}

/**
 * @brief Counter-based generator: draw i is `mix64(key + (i+1)·γ)`.
 *
 * Satisfies UniformRandomBitGenerator so it can drive std distributions.
 */
class CounterRng {
public:
    using result_type = std::uint64_t;

    explicit CounterRng(std::uint64_t key) noexcept : key_(key) {}
    CounterRng(std::uint64_t seed, std::initializer_list<std::uint64_t> ids) noexcept : key_(derive_key(seed, ids)) {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    result_type operator()() noexcept {
        ++counter_;
        return mix64(key_ + counter_ * 0x9e3779b97f4a7c15ULL);
    }

    /// Unbiased integer in [0, bound) (Lemire's multiply-and-reject).
    std::uint64_t below(std::uint64_t bound) noexcept {
        if (bound <= 1) return 0;
        unsigned __int128 m = static_cast<unsigned __int128>((*this)()) * bound;
        auto low = static_cast<std::uint64_t>(m);
        if (low < bound) {
            const std::uint64_t threshold = (0 - bound) % bound;
            while (low < threshold) {
                m = static_cast<unsigned __int128>((*this)()) * bound;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    /// Uniform double in [0, 1).
    double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller (kept in-house so values are identical across standard libraries).
    double normal() noexcept {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// In-place Fisher-Yates shuffle.
template <typename T>
void fisher_yates(std::vector<T>& v, CounterRng& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        const auto j = static_cast<std::size_t>(rng.below(i));
        std::swap(v[i - 1], v[j]);
    }
}

/// Permutation number `b` of 0..n-1 for a given seed; independent of any other permutation.
inline std::vector<Index> permutation_at(std::uint64_t seed, Index n, std::uint64_t b) {
    std::vector<Index> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), Index{0});
    CounterRng rng(seed, {0x7065726dULL, b});
    fisher_yates(perm, rng);
    return perm;
}

/// B permutations of 0..n-1, permutation b keyed on (seed, b).
inline std::vector<std::vector<Index>> permutation_stream(std::uint64_t seed, Index n, std::size_t B) {
    require(n >= 1, ErrorCode::InvalidArgument, "permutation_stream needs n >= 1");
    require(B >= 1, ErrorCode::InvalidArgument, "permutation_stream needs B >= 1");
    std::vector<std::vector<Index>> out;
    out.reserve(B);
    for (std::size_t b = 0; b < B; ++b) out.push_back(permutation_at(seed, n, b));
    return out;
}

/// Worker count used when callers pass 0.
inline unsigned default_workers() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/**
 * Run `fn(i)` for i in [0, count) over `workers` threads in contiguous chunks.
 * `fn` must only write to slot i of its output, which keeps results schedule-independent.
 */
template <typename Fn>
void parallel_for(std::size_t count, unsigned workers, Fn&& fn) {
    if (workers == 0) workers = default_workers();
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(count, 1)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    // The failure at the lowest index wins, so the rethrown error is schedule-independent.
    std::vector<std::exception_ptr> failures(workers);
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        const std::size_t chunk = (count + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::size_t begin = w * chunk;
            const std::size_t end = std::min(count, begin + chunk);
            if (begin >= end) break;
            pool.emplace_back([begin, end, &fn, &slot = failures[w]] {
                try {
                    for (std::size_t i = begin; i < end; ++i) fn(i);
                } catch (...) {
                    slot = std::current_exception();
                }
            });
        }
    }
    for (auto& f : failures) {
        if (f) std::rethrow_exception(f);
    }
}

}  // namespace faultdx

#endif
