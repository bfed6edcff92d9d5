#include "pgcache/xxh3.hpp"

#include <cstring>

namespace pgcache {
namespace {

constexpr uint64_t kPrime64_1 = 0x9E3779B185EBCA87ULL;
constexpr uint64_t kPrime64_2 = 0xC2B2AE3D27D4EB4FULL;
constexpr uint64_t kPrime64_3 = 0x165667B19E3779F9ULL;
constexpr uint64_t kPrime64_4 = 0x85EBCA77C2B2AE63ULL;
constexpr uint64_t kPrime64_5 = 0x27D4EB2F165667C5ULL;
constexpr uint32_t kPrime32_1 = 0x9E3779B1U;
constexpr uint32_t kPrime32_2 = 0x85EBCA77U;
constexpr uint32_t kPrime32_3 = 0xC2B2AE3DU;
constexpr uint64_t kAvalanchePrime = 0x165667919E3779F9ULL;
constexpr uint64_t kStrongPrime = 0x9FB21C651E98DF25ULL;

constexpr size_t kStripeLen = 64;
constexpr size_t kAccCount = 8;
constexpr size_t kSecretConsumeRate = 8;
constexpr size_t kSecretLastAccStart = 7;
constexpr size_t kSecretMergeAccsStart = 11;
constexpr size_t kSecretSizeMin = 136;

constexpr uint8_t kSecret[192] = {
    0xb8, 0xfe, 0x6c, 0x39, 0x23, 0xa4, 0x4b, 0xbe, 0x7c, 0x01, 0x81, 0x2c, 0xf7, 0x21, 0xad,
    0x1c, 0xde, 0xd4, 0x6d, 0xe9, 0x83, 0x90, 0x97, 0xdb, 0x72, 0x40, 0xa4, 0xa4, 0xb7, 0xb3,
    0x67, 0x1f, 0xcb, 0x79, 0xe6, 0x4e, 0xcc, 0xc0, 0xe5, 0x78, 0x82, 0x5a, 0xd0, 0x7d, 0xcc,
    0xff, 0x72, 0x21, 0xb8, 0x08, 0x46, 0x74, 0xf7, 0x43, 0x24, 0x8e, 0xe0, 0x35, 0x90, 0xe6,
    0x81, 0x3a, 0x26, 0x4c, 0x3c, 0x28, 0x52, 0xbb, 0x91, 0xc3, 0x00, 0xcb, 0x88, 0xd0, 0x65,
    0x8b, 0x1b, 0x53, 0x2e, 0xa3, 0x71, 0x64, 0x48, 0x97, 0xa2, 0x0d, 0xf9, 0x4e, 0x38, 0x19,
    0xef, 0x46, 0xa9, 0xde, 0xac, 0xd8, 0xa8, 0xfa, 0x76, 0x3f, 0xe3, 0x9c, 0x34, 0x3f, 0xf9,
    0xdc, 0xbb, 0xc7, 0xc7, 0x0b, 0x4f, 0x1d, 0x8a, 0x51, 0xe0, 0x4b, 0xcd, 0xb4, 0x59, 0x31,
    0xc8, 0x9f, 0x7e, 0xc9, 0xd9, 0x78, 0x73, 0x64, 0xea, 0xc5, 0xac, 0x83, 0x34, 0xd3, 0xeb,
    0xc3, 0xc5, 0x81, 0xa0, 0xff, 0xfa, 0x13, 0x63, 0xeb, 0x17, 0x0d, 0xdd, 0x51, 0xb7, 0xf0,
    0xda, 0x49, 0xd3, 0x16, 0x55, 0x26, 0x29, 0xd4, 0x68, 0x9e, 0x2b, 0x16, 0xbe, 0x58, 0x7d,
    0x47, 0xa1, 0xfc, 0x8f, 0xf8, 0xb8, 0xd1, 0x7a, 0xd0, 0x31, 0xce, 0x45, 0xcb, 0x3a, 0x8f,
    0x95, 0x16, 0x04, 0x28, 0xaf, 0xd7, 0xfb, 0xca, 0xbb, 0x4b, 0x40, 0x7e};

uint64_t read64(const uint8_t* p) {
    uint64_t v;
    std::memcpy(&v, p, 8);
    return v;  // little-endian hosts only; fine for this project's targets
}

uint32_t read32(const uint8_t* p) {
    uint32_t v;
    std::memcpy(&v, p, 4);
    return v;
}

uint64_t rotl(uint64_t v, unsigned s) { return (v << s) | (v >> (64 - s)); }

uint64_t mul128_fold64(uint64_t a, uint64_t b) {
    unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    return static_cast<uint64_t>(p) ^ static_cast<uint64_t>(p >> 64);
}

uint64_t xxh64_avalanche(uint64_t v) {
    v ^= v >> 33;
    v *= kPrime64_2;
    v ^= v >> 29;
    v *= kPrime64_3;
    v ^= v >> 32;
    return v;
}

uint64_t xxh3_avalanche(uint64_t v) {
    v ^= v >> 37;
    v *= kAvalanchePrime;
    v ^= v >> 32;
    return v;
}

uint64_t strong_avalanche(uint64_t v, uint64_t len) {
    v ^= rotl(v, 49) ^ rotl(v, 24);
    v *= kStrongPrime;
    v ^= (v >> 35) + len;
    v *= kStrongPrime;
    v ^= v >> 28;
    return v;
}

uint64_t mix16(const uint8_t* input, const uint8_t* secret) {
    uint64_t lo = read64(input) ^ read64(secret);
    uint64_t hi = read64(input + 8) ^ read64(secret + 8);
    return mul128_fold64(lo, hi);
}

uint64_t len_0to16(const uint8_t* in, size_t len) {
    if (len > 8) {
        uint64_t flip1 = read64(kSecret + 24) ^ read64(kSecret + 32);
        uint64_t flip2 = read64(kSecret + 40) ^ read64(kSecret + 48);
        uint64_t lo = read64(in) ^ flip1;
        uint64_t hi = read64(in + len - 8) ^ flip2;
        uint64_t acc = len + __builtin_bswap64(lo) + hi + mul128_fold64(lo, hi);
        return xxh3_avalanche(acc);
    }
    if (len >= 4) {
        uint64_t in1 = read32(in);
        uint64_t in2 = read32(in + len - 4);
        uint64_t flip = read64(kSecret + 8) ^ read64(kSecret + 16);
        return strong_avalanche((in2 + (in1 << 32)) ^ flip, len);
    }
    if (len > 0) {
        uint32_t c1 = in[0], c2 = in[len >> 1], c3 = in[len - 1];
        uint32_t combo = (c1 << 16) | (c2 << 24) | c3 | (static_cast<uint32_t>(len) << 8);
        uint64_t flip = (read32(kSecret) ^ read32(kSecret + 4));
        return xxh64_avalanche(combo ^ flip);
    }
    return xxh64_avalanche(read64(kSecret + 56) ^ read64(kSecret + 64));
}

uint64_t len_17to128(const uint8_t* in, size_t len) {
    uint64_t acc = len * kPrime64_1;
    if (len > 32) {
        if (len > 64) {
            if (len > 96) {
                acc += mix16(in + 48, kSecret + 96);
                acc += mix16(in + len - 64, kSecret + 112);
            }
            acc += mix16(in + 32, kSecret + 64);
            acc += mix16(in + len - 48, kSecret + 80);
        }
        acc += mix16(in + 16, kSecret + 32);
        acc += mix16(in + len - 32, kSecret + 48);
    }
    acc += mix16(in, kSecret);
    acc += mix16(in + len - 16, kSecret + 16);
    return xxh3_avalanche(acc);
}

uint64_t len_129to240(const uint8_t* in, size_t len) {
    uint64_t acc = len * kPrime64_1;
    const size_t rounds = len / 16;
    for (size_t i = 0; i < 8; ++i) acc += mix16(in + 16 * i, kSecret + 16 * i);
    acc = xxh3_avalanche(acc);
    for (size_t i = 8; i < rounds; ++i) acc += mix16(in + 16 * i, kSecret + 16 * (i - 8) + 3);
    acc += mix16(in + len - 16, kSecret + kSecretSizeMin - 17);
    return xxh3_avalanche(acc);
}

void accumulate512(uint64_t acc[kAccCount], const uint8_t* in, const uint8_t* secret) {
    for (size_t i = 0; i < kAccCount; ++i) {
        uint64_t data = read64(in + 8 * i);
        uint64_t key = data ^ read64(secret + 8 * i);
        acc[i ^ 1] += data;
        acc[i] += (key & 0xffffffffu) * (key >> 32);
    }
}

void scramble(uint64_t acc[kAccCount], const uint8_t* secret) {
    for (size_t i = 0; i < kAccCount; ++i) {
        uint64_t v = acc[i];
        v ^= v >> 47;
        v ^= read64(secret + 8 * i);
        acc[i] = v * kPrime32_1;
    }
}

uint64_t len_long(const uint8_t* in, size_t len) {
    uint64_t acc[kAccCount] = {kPrime32_3, kPrime64_1, kPrime64_2, kPrime64_3,
                               kPrime64_4, kPrime32_2, kPrime64_5, kPrime32_1};
    constexpr size_t kSecretLen = sizeof(kSecret);
    const size_t stripes_per_block = (kSecretLen - kStripeLen) / kSecretConsumeRate;
    const size_t block_len = kStripeLen * stripes_per_block;
    const size_t blocks = (len - 1) / block_len;

    for (size_t b = 0; b < blocks; ++b) {
        for (size_t s = 0; s < stripes_per_block; ++s)
            accumulate512(acc, in + b * block_len + s * kStripeLen, kSecret + s * kSecretConsumeRate);
        scramble(acc, kSecret + kSecretLen - kStripeLen);
    }

    const size_t tail_stripes = ((len - 1) - block_len * blocks) / kStripeLen;
    for (size_t s = 0; s < tail_stripes; ++s)
        accumulate512(acc, in + blocks * block_len + s * kStripeLen, kSecret + s * kSecretConsumeRate);
    accumulate512(acc, in + len - kStripeLen, kSecret + kSecretLen - kStripeLen - kSecretLastAccStart);

    uint64_t result = len * kPrime64_1;
    for (size_t i = 0; i < 4; ++i)
        result += mul128_fold64(acc[2 * i] ^ read64(kSecret + kSecretMergeAccsStart + 16 * i),
                                acc[2 * i + 1] ^ read64(kSecret + kSecretMergeAccsStart + 16 * i + 8));
    return xxh3_avalanche(result);
}

}  // namespace

uint64_t xxh3_64(const void* data, size_t len) {
    const auto* in = static_cast<const uint8_t*>(data);
    if (len <= 16) return len_0to16(in, len);
    if (len <= 128) return len_17to128(in, len);
    if (len <= 240) return len_129to240(in, len);
    return len_long(in, len);
}

}  // namespace pgcache
