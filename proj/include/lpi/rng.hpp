// SPDX-License-Identifier: Apache-2.0
//! \file rng.hpp
//! Counter-based random stream keyed by (seed, stream index).
#pragma once

#include <cstdint>
#include <limits>

namespace lpi
{
//---------------------------------------------------------------------------//
/*!
 * Stateless-per-stream generator: output i of stream s under key k is a
 * fixed function of (k, s, i).
 *
 * Each Monte-Carlo iteration opens its own stream, so draws do not depend on
 * execution order or worker count. The mixing function is the SplitMix64
 * finalizer. Satisfies UniformRandomBitGenerator.
 */
class CounterRng
{
  public:
    using result_type = std::uint64_t;

    CounterRng(std::uint64_t key, std::uint64_t stream)
        : key_(mix(key ^ 0x6a09e667f3bcc909ULL)), stream_(mix(stream + 0xbb67ae8584caa73bULL))
    {
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()()
    {
        ++counter_;
        return mix(key_ ^ (stream_ + counter_ * 0x9e3779b97f4a7c15ULL));
    }

    std::uint64_t counter() const { return counter_; }

    static constexpr std::uint64_t mix(std::uint64_t z)
    {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

  private:
    std::uint64_t key_;
    std::uint64_t stream_;
    std::uint64_t counter_ = 0;
};

}  // namespace lpi
