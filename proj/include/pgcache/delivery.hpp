#pragma once

#include "pgcache/caching_graph.hpp"

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace pgcache {

/// N files split into F equal subfiles of `subfile_size` bytes, content drawn
/// from a seeded deterministic generator.
class FileLibrary {
public:
    static FileLibrary random(uint32_t n_files, uint32_t subpacketization, uint32_t subfile_size,
                              uint64_t seed);

    uint32_t n_files() const { return n_files_; }
    uint32_t subpacketization() const { return f_; }
    uint32_t subfile_size() const { return size_; }
    uint64_t seed() const { return seed_; }

    std::span<const uint8_t> subfile(uint32_t file, uint32_t subfile) const;

private:
    uint32_t n_files_ = 0, f_ = 0, size_ = 0;
    uint64_t seed_ = 0;
    std::vector<uint8_t> data_;
};

struct DemandVector {
    std::vector<uint32_t> files;  // demanded file per user

    /// d_k = k; the canonical worst case (requires N >= K).
    static DemandVector worst_case(uint32_t users, uint32_t n_files);
    static DemandVector uniform_random(uint32_t users, uint32_t n_files, uint64_t seed);
    static DemandVector constant(uint32_t users, uint32_t file);

    bool injective() const;
};

/// Per-user cached-subfile bitmaps (complement of the user's edges; symmetric
/// across files).
struct Placement {
    std::vector<boost::dynamic_bitset<>> cached;
    uint32_t cached_per_file = 0;  // F - D
};
Placement place_caches(const CachingGraph& g, const FileLibrary& lib);

struct Transmission {
    uint32_t matching_id = 0;  // 1-based
    std::vector<Edge> participants;
    std::vector<uint8_t> payload;  // XOR of the participants' demanded subfiles
};

struct Transcript {
    std::vector<Transmission> transmissions;
    uint64_t bits_sent = 0;
};

/// One coded transmission per matching, in cover order.
Transcript deliver(const CachingGraph& g, const MatchingCover& c, const FileLibrary& lib,
                   const DemandVector& demands);

struct DecodeReport {
    struct PerUser {
        bool ok = false;
        std::vector<uint32_t> consumed;  // transmission indices the user XOR-decoded from
    };
    std::vector<PerUser> users;
};

/// Reconstructs every user's demanded file from its cache plus the wire and
/// compares byte-for-byte with the library.  Decoding reads nothing but the
/// user's own cache bitmap, the demand vector, and the transcript; any
/// mismatch throws DecodeError naming the user and subfile.
DecodeReport decode_all(const CachingGraph& g, const FileLibrary& lib, const DemandVector& demands,
                        const Transcript& transcript);

/// (rate, gain) = (transmissions/F, K(1-M/N)/rate), exact.
std::pair<Rational, Rational> measure(const Transcript& t, const FileLibrary& lib,
                                      const BigInt& users_k, const Rational& cache_fraction);

/// JSON lines, one per transmission; payloads exported as XXH3 fingerprints
/// unless `dump_payloads` asks for raw hex.
void write_transcript_jsonl(const Transcript& t, const CachingGraph& g, std::ostream& os,
                            bool dump_payloads = false);

}  // namespace pgcache
