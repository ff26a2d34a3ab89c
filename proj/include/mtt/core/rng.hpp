#pragma once

#include <cstdint>
#include <random>

namespace mtt {

// Named sub-streams so components can be re-seeded independently of one another.
enum class Stream : std::uint64_t {
    Starts = 1,
    Fading = 2,
    Wiener = 3,
    Rrt = 4,
    Bench = 5,
};

namespace detail {
// splitmix64; mixes (seed, stream id) into a well-spread 64-bit state.
inline std::uint64_t splitmix64(std::uint64_t& s) {
    s += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}
}  // namespace detail

// Deterministic stream: identical (seed, id) gives an identical sample sequence.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id) : seed_(seed), id_(stream_id) {
        std::uint64_t s = seed ^ (stream_id * 0x9e3779b97f4a7c15ULL);
        const std::uint64_t a = detail::splitmix64(s);
        const std::uint64_t b = detail::splitmix64(s);
        std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                          static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
        engine_.seed(seq);
    }
    RngStream(std::uint64_t seed, Stream s) : RngStream(seed, static_cast<std::uint64_t>(s)) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return id_; }

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(engine_);
    }
    double normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }
    double gamma(double shape, double scale) {
        return std::gamma_distribution<double>(shape, scale)(engine_);
    }
    std::uint64_t next_u64() { return engine_(); }
    // integer in [0, n)
    std::uint64_t below(std::uint64_t n) {
        return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(engine_);
    }

    std::mt19937_64& engine() { return engine_; }

private:
    std::uint64_t seed_;
    std::uint64_t id_;
    std::mt19937_64 engine_;
};

}  // namespace mtt
