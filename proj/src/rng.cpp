#include "isq/rng.hpp"

#include <cmath>

namespace isq {

namespace {

constexpr uint32_t kPhiloxW32A = 0x9E3779B9u;
constexpr uint32_t kPhiloxW32B = 0xBB67AE85u;
constexpr uint32_t kPhiloxM4x32A = 0xD2511F53u;
constexpr uint32_t kPhiloxM4x32B = 0xCD9E8D57u;

inline void mul_hilo(uint32_t a, uint32_t b, uint32_t* lo, uint32_t* hi) {
    uint64_t prod = static_cast<uint64_t>(a) * b;
    *lo = static_cast<uint32_t>(prod);
    *hi = static_cast<uint32_t>(prod >> 32);
}

inline void philox_round(std::array<uint32_t, 4>& ctr, const std::array<uint32_t, 2>& key) {
    uint32_t lo0, hi0, lo1, hi1;
    mul_hilo(kPhiloxM4x32A, ctr[0], &lo0, &hi0);
    mul_hilo(kPhiloxM4x32B, ctr[2], &lo1, &hi1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
}

}  // namespace

std::array<uint32_t, 4> philox4x32(std::array<uint32_t, 4> counter, std::array<uint32_t, 2> key) {
    for (int round = 0; round < 10; ++round) {
        philox_round(counter, key);
        key[0] += kPhiloxW32A;
        key[1] += kPhiloxW32B;
    }
    return counter;
}

RngStream::RngStream(uint64_t seed, uint64_t stream)
    : key_{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32)}, stream_(stream) {}

void RngStream::refill() {
    std::array<uint32_t, 4> ctr = {
        static_cast<uint32_t>(block_),
        static_cast<uint32_t>(block_ >> 32),
        static_cast<uint32_t>(stream_),
        static_cast<uint32_t>(stream_ >> 32),
    };
    buffer_ = philox4x32(ctr, key_);
    buffered_ = 4;
    ++block_;
}

uint64_t RngStream::next_u64() {
    if (buffered_ < 2) refill();
    uint64_t hi = buffer_[--buffered_];
    uint64_t lo = buffer_[--buffered_];
    return (hi << 32) | lo;
}

double RngStream::next_double() {
    // 53 significand bits, offset by half an ulp so the value is never 0 or 1.
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double RngStream::next_exponential(double rate) {
    return -std::log(next_double()) / rate;
}

}  // namespace isq
