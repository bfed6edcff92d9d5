#pragma once

#include <cstddef>
#include <cstdint>

namespace pgcache {

/// XXH3 64-bit one-shot hash (seed 0, default secret), matching the reference
/// algorithm bit for bit.  Used to fingerprint transmission payloads in
/// transcript exports.
uint64_t xxh3_64(const void* data, size_t len);

}  // namespace pgcache
