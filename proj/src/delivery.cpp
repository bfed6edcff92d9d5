#include "pgcache/delivery.hpp"

#include "pgcache/errors.hpp"
#include "pgcache/xxh3.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <ostream>
#include <random>

namespace pgcache {

FileLibrary FileLibrary::random(uint32_t n_files, uint32_t subpacketization, uint32_t subfile_size,
                                uint64_t seed) {
    if (n_files == 0 || subpacketization == 0 || subfile_size == 0)
        throw ArgumentError("library needs positive N, F and subfile size");
    FileLibrary lib;
    lib.n_files_ = n_files;
    lib.f_ = subpacketization;
    lib.size_ = subfile_size;
    lib.seed_ = seed;
    lib.data_.resize(size_t(n_files) * subpacketization * subfile_size);
    std::mt19937_64 rng(seed);
    size_t i = 0;
    while (i + 8 <= lib.data_.size()) {
        uint64_t v = rng();
        for (int b = 0; b < 8; ++b) lib.data_[i++] = static_cast<uint8_t>(v >> (8 * b));
    }
    for (uint64_t v = rng(); i < lib.data_.size(); v >>= 8) lib.data_[i++] = static_cast<uint8_t>(v);
    return lib;
}

std::span<const uint8_t> FileLibrary::subfile(uint32_t file, uint32_t subfile) const {
    return {data_.data() + (size_t(file) * f_ + subfile) * size_, size_};
}

DemandVector DemandVector::worst_case(uint32_t users, uint32_t n_files) {
    if (n_files < users)
        throw ArgumentError("worst-case demands need N >= K, got N=" + std::to_string(n_files) +
                            " K=" + std::to_string(users));
    DemandVector d;
    d.files.resize(users);
    for (uint32_t k = 0; k < users; ++k) d.files[k] = k;
    return d;
}

DemandVector DemandVector::uniform_random(uint32_t users, uint32_t n_files, uint64_t seed) {
    DemandVector d;
    d.files.resize(users);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<uint32_t> dist(0, n_files - 1);
    for (auto& f : d.files) f = dist(rng);
    return d;
}

DemandVector DemandVector::constant(uint32_t users, uint32_t file) {
    DemandVector d;
    d.files.assign(users, file);
    return d;
}

bool DemandVector::injective() const {
    auto sorted = files;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

Placement place_caches(const CachingGraph& g, const FileLibrary& lib) {
    if (lib.subpacketization() != g.num_subfiles())
        throw ArgumentError("library has F=" + std::to_string(lib.subpacketization()) +
                            ", graph has F=" + std::to_string(g.num_subfiles()));
    Placement p;
    p.cached.reserve(g.num_users());
    BigInt d = verify_left_regular(g);
    for (uint32_t u = 0; u < g.num_users(); ++u) p.cached.push_back(~g.neighborhood(u));
    p.cached_per_file = g.num_subfiles() - static_cast<uint32_t>(d);
    return p;
}

Transcript deliver(const CachingGraph& g, const MatchingCover& c, const FileLibrary& lib,
                   const DemandVector& demands) {
    verify_cover(g, c);
    if (demands.files.size() != g.num_users())
        throw ArgumentError("demand vector size mismatch");
    for (uint32_t f : demands.files)
        if (f >= lib.n_files()) throw ArgumentError("demanded file out of range");

    Transcript t;
    t.transmissions.reserve(c.matchings.size());
    for (uint32_t mi = 0; mi < c.matchings.size(); ++mi) {
        Transmission tx;
        tx.matching_id = mi + 1;
        tx.participants = c.matchings[mi];
        tx.payload.assign(lib.subfile_size(), 0);
        for (const auto& [u, f] : tx.participants) {
            auto sf = lib.subfile(demands.files[u], f);
            for (uint32_t i = 0; i < lib.subfile_size(); ++i) tx.payload[i] ^= sf[i];
        }
        t.transmissions.push_back(std::move(tx));
    }
    t.bits_sent = uint64_t(t.transmissions.size()) * lib.subfile_size() * 8;
    return t;
}

DecodeReport decode_all(const CachingGraph& g, const FileLibrary& lib, const DemandVector& demands,
                        const Transcript& transcript) {
    DecodeReport report;
    report.users.resize(g.num_users());

    for (uint32_t me = 0; me < g.num_users(); ++me) {
        // the user's view: its cache bitmap, the broadcast demands, the wire
        const boost::dynamic_bitset<> cached = ~g.neighborhood(me);
        const uint32_t want = demands.files[me];
        auto& mine = report.users[me];

        std::vector<std::vector<uint8_t>> recovered(g.num_subfiles());
        for (uint32_t ti = 0; ti < transcript.transmissions.size(); ++ti) {
            const Transmission& tx = transcript.transmissions[ti];
            // does this transmission carry one of my missing subfiles?
            const Edge* my_edge = nullptr;
            for (const auto& e : tx.participants)
                if (e.first == me) {
                    my_edge = &e;
                    break;
                }
            if (!my_edge) continue;
            if (cached[my_edge->second])
                throw DecodeError("user " + g.users()[me] + " listed for cached subfile " +
                                  g.subfiles()[my_edge->second]);
            std::vector<uint8_t> value(tx.payload);
            for (const auto& [other, f] : tx.participants) {
                if (other == me) continue;
                if (!cached[f])
                    throw DecodeError("user " + g.users()[me] + " cannot cancel subfile " +
                                      g.subfiles()[f] + " of transmission " +
                                      std::to_string(tx.matching_id));
                auto sf = lib.subfile(demands.files[other], f);
                for (uint32_t i = 0; i < value.size(); ++i) value[i] ^= sf[i];
            }
            recovered[my_edge->second] = std::move(value);
            mine.consumed.push_back(ti);
        }

        // assemble the demanded file and compare with the library
        for (uint32_t f = 0; f < g.num_subfiles(); ++f) {
            std::span<const uint8_t> truth = lib.subfile(want, f);
            if (cached[f]) {
                continue;  // direct cache hit, trivially equal
            }
            if (recovered[f].empty())
                throw DecodeError("user " + g.users()[me] + " never received subfile " +
                                  g.subfiles()[f]);
            if (!std::equal(recovered[f].begin(), recovered[f].end(), truth.begin(), truth.end()))
                throw DecodeError("user " + g.users()[me] + " decoded wrong bytes for subfile " +
                                  g.subfiles()[f]);
        }
        mine.ok = true;
    }
    return report;
}

std::pair<Rational, Rational> measure(const Transcript& t, const FileLibrary& lib,
                                      const BigInt& users_k, const Rational& cache_fraction) {
    Rational rate(BigInt(t.transmissions.size()), BigInt(lib.subpacketization()));
    Rational gain = Rational(users_k) * (1 - cache_fraction) / rate;
    return {rate, gain};
}

void write_transcript_jsonl(const Transcript& t, const CachingGraph& g, std::ostream& os,
                            bool dump_payloads) {
    for (const Transmission& tx : t.transmissions) {
        nlohmann::json j;
        j["m"] = tx.matching_id;
        auto& parts = j["participants"] = nlohmann::json::array();
        for (const auto& [u, f] : tx.participants)
            parts.push_back(nlohmann::json::array({g.users()[u], g.subfiles()[f]}));
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx",
                      static_cast<unsigned long long>(xxh3_64(tx.payload.data(), tx.payload.size())));
        j["payload_xxh3"] = buf;
        if (dump_payloads) {
            std::string hex;
            hex.reserve(tx.payload.size() * 2);
            for (uint8_t b : tx.payload) {
                static const char* digits = "0123456789abcdef";
                hex += digits[b >> 4];
                hex += digits[b & 0xf];
            }
            j["payload_hex"] = hex;
        }
        os << j.dump() << "\n";
    }
}

}  // namespace pgcache
