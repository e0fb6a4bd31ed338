#pragma once

#include <array>
#include <cstdint>

namespace isq {

/// Philox 4x32-10 counter-based generator (Salmon et al., SC 2011).
/// A block is a pure function of (counter, key), so any number of
/// independent substreams can be derived without coordination and the
/// output is reproducible under any thread scheduling.
std::array<uint32_t, 4> philox4x32(std::array<uint32_t, 4> counter, std::array<uint32_t, 2> key);

/// One substream of the Philox generator, addressed by (seed, stream).
/// Replications use stream = replication index; draws advance the
/// 64-bit block counter sequentially.
class RngStream {
  public:
    RngStream(uint64_t seed, uint64_t stream);

    uint64_t next_u64();

    /// Uniform variate strictly inside (0, 1).
    double next_double();

    /// Exponential variate with the given rate.
    double next_exponential(double rate);

    uint64_t stream_id() const { return stream_; }

  private:
    std::array<uint32_t, 2> key_;
    uint64_t stream_ = 0;
    uint64_t block_ = 0;
    std::array<uint32_t, 4> buffer_{};
    int buffered_ = 0;  // 32-bit words left in buffer_

    void refill();
};

}  // namespace isq
