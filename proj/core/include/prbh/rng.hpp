#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <utility>

namespace prbh {

// Seeded, splittable random stream: the pair (seed, stream_id) fully
// determines the output sequence, bit for bit, independent of platform.
// Parallel Monte Carlo assigns one stream_id per worker and merges results
// in stream order.
//
// Engine: xoshiro256++ with state derived from (seed, stream_id) through
// the splitmix64 finalizer. Gaussians come from an explicit Box-Muller
// transform rather than std::normal_distribution, whose output is
// implementation-defined.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0)
        : seed_(seed), stream_id_(stream_id) {
        std::uint64_t sm = mix64(seed ^ 0x9e3779b97f4a7c15ULL) ^
                           mix64(stream_id + 0xbf58476d1ce4e5b9ULL);
        for (auto& word : state_) {
            sm += 0x9e3779b97f4a7c15ULL;
            word = mix64(sm);
        }
        if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) {
            state_[0] = 1;  // xoshiro forbids the all-zero state
        }
    }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform on [0, 1), 53 random bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform on (0, 1]; safe under log().
    double uniform_positive() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    // Two independent N(0, 1) draws per call (Box-Muller pair).
    std::pair<double, double> normal_pair() {
        const double u1 = uniform_positive();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double phi = 2.0 * std::numbers::pi * u2;
        return {r * std::cos(phi), r * std::sin(phi)};
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    // splitmix64 finalizer
    static std::uint64_t mix64(std::uint64_t x) {
        x ^= x >> 30;
        x *= 0xbf58476d1ce4e5b9ULL;
        x ^= x >> 27;
        x *= 0x94d049bb133111ebULL;
        x ^= x >> 31;
        return x;
    }

    std::array<std::uint64_t, 4> state_{};
    std::uint64_t seed_;
    std::uint64_t stream_id_;
};

}  // namespace prbh
