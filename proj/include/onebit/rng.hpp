// SPDX-License-Identifier: Apache-2.0
//
// Counter-based random streams. A stream is fully determined by
// (master seed, trial index, role); draws never depend on which thread
// runs the trial or in which order trials are visited.

#pragma once

#include <cstdint>
#include <limits>

#include "onebit/signal.hpp"

namespace onebit {

enum class StreamRole : std::uint32_t {
    Channel = 1,
    PilotNoise = 2,
    DataNoise = 3,
    Message = 4,
    Fixture = 5,
};

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z)
{
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// UniformRandomBitGenerator whose i-th output is a pure function of
/// (key, i). Usable with every <random> distribution.
class RngStream {
public:
    using result_type = std::uint64_t;

    RngStream(std::uint64_t seed, std::uint64_t trial, StreamRole role)
        : key_(derive_key(seed, trial, role))
    {
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() { return mix64(key_ + (++counter_) * kGolden); }

    [[nodiscard]] std::uint64_t key() const { return key_; }
    [[nodiscard]] std::uint64_t counter() const { return counter_; }

private:
    static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

    static constexpr std::uint64_t derive_key(std::uint64_t seed, std::uint64_t trial,
                                              StreamRole role)
    {
        std::uint64_t k = mix64(seed ^ 0x6a09e667f3bcc909ULL);
        k = mix64(k + trial * kGolden + 0x3c6ef372fe94f82bULL);
        return mix64(k ^ (static_cast<std::uint64_t>(role) * 0xa54ff53a5f1d36f1ULL));
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

/// rows x cols i.i.d. CN(0, 1): real and imaginary parts each N(0, 1/2).
ChannelMatrix sample_complex_gaussian(RngStream& rng, std::size_t rows, std::size_t cols);

/// Same law, flat vector of length n.
std::vector<ComplexSample> sample_complex_gaussian(RngStream& rng, std::size_t n);

}  // namespace onebit
