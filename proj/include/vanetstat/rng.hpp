// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The vanetstat Authors
#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace vanetstat {

//---------------------------------------------------------------------------//
/*!
 * Philox4x32-10 block function (Salmon et al., "Parallel random numbers: as
 * easy as 1, 2, 3", SC 2011).
 *
 * Stateless: the output is a pure function of (counter, key). Word 0 is the
 * least significant word of both the counter and the key.
 */
class Philox4x32
{
  public:
    using counter_type = std::array<std::uint32_t, 4>;
    using key_type = std::array<std::uint32_t, 2>;

    static counter_type generate(counter_type ctr, key_type key)
    {
        for (int round = 0; round < 10; ++round) {
            if (round > 0) {
                key[0] += kWeyl0;
                key[1] += kWeyl1;
            }
            std::uint64_t const p0 = std::uint64_t{kMul0} * ctr[0];
            std::uint64_t const p1 = std::uint64_t{kMul1} * ctr[2];
            ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0],
                   static_cast<std::uint32_t>(p1),
                   static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1],
                   static_cast<std::uint32_t>(p0)};
        }
        return ctr;
    }

  private:
    static constexpr std::uint32_t kMul0 = 0xD2511F53u;
    static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
    static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
    static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;
};

//---------------------------------------------------------------------------//
/*!
 * Random stream identified by (seed, stream id).
 *
 * The seed is the Philox key and the stream id occupies the upper half of the
 * counter, so distinct ids give independent streams that can be created in
 * any order on any thread. Satisfies UniformRandomBitGenerator.
 */
class CounterStream
{
  public:
    using result_type = std::uint64_t;

    CounterStream(std::uint64_t seed, std::uint64_t stream_id)
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)}
        , stream_hi_{static_cast<std::uint32_t>(stream_id),
                     static_cast<std::uint32_t>(stream_id >> 32)}
    {
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()()
    {
        if (next_word_ == 4) {
            block_ = Philox4x32::generate(
                {static_cast<std::uint32_t>(block_index_),
                 static_cast<std::uint32_t>(block_index_ >> 32), stream_hi_[0],
                 stream_hi_[1]},
                key_);
            ++block_index_;
            next_word_ = 0;
        }
        std::uint64_t const lo = block_[next_word_];
        std::uint64_t const hi = block_[next_word_ + 1];
        next_word_ += 2;
        return lo | (hi << 32);
    }

    /// Uniform double strictly inside (0, 1).
    double uniform_open()
    {
        return (static_cast<double>((*this)() >> 12) + 0.5) * 0x1.0p-52;
    }

  private:
    Philox4x32::key_type key_;
    std::array<std::uint32_t, 2> stream_hi_;
    Philox4x32::counter_type block_{};
    std::uint64_t block_index_ = 0;
    unsigned next_word_ = 4;
};

}  // namespace vanetstat
