#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "akq/types.hpp"

namespace akq {

inline constexpr char kCacheMagic[4] = {'A', 'K', 'Q', '1'};
inline constexpr std::uint32_t kCacheVersion = 1;
// Bumped whenever a change can alter cached spectra.
inline constexpr std::string_view kCodeVersion = "akq-0.4.0";

std::string sha256_hex(std::string_view bytes);

// On-disk layout, all integers little-endian:
//   "AKQ1" | u32 version | u32 scheme | i32 k | u32 key_len | key bytes
//   | u32 count | count x (u64 rows | u64 cols | rows*cols x (f64 re, f64 im), column-major)
//   | 32-byte SHA-256 of everything before it
struct CacheEntry {
    std::string preimage;         // human-readable key material
    std::uint32_t scheme = 0;
    std::int32_t k = 0;
    std::vector<CMat> arrays;

    std::string key() const { return sha256_hex(preimage); }
};

void write_entry(std::ostream& out, const CacheEntry& entry);
CacheEntry read_entry(std::istream& in);   // throws Error(Cache) on any defect
bool bitwise_equal(const CacheEntry& a, const CacheEntry& b);

// Key material: backend descriptor, operator name, k, N, tol, code version.
std::string cache_preimage(const std::string& backend_descriptor, const std::string& op, int k, int resolution,
                           double tol);

struct CacheListing {
    std::filesystem::path path;
    bool valid = false;
    std::string error;
    std::string preimage;
    std::uint32_t scheme = 0;
    std::int32_t k = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> shapes;
};

// Content-addressed store.  Readers may run concurrently; writers commit by
// atomic rename.  Corrupt files are moved to quarantine/ and reported as misses.
class SpectraCache {
public:
    explicit SpectraCache(std::filesystem::path root);

    const std::filesystem::path& root() const { return root_; }
    std::filesystem::path path_for(const std::string& key) const;

    std::optional<CacheEntry> load(const std::string& preimage);
    // Throws Error(Cache) if an entry with the same key but different content exists.
    void store(const CacheEntry& entry);

    std::vector<CacheListing> list() const;

    long hits() const { return hits_; }
    long misses() const { return misses_; }
    long quarantined() const { return quarantined_; }

private:
    void quarantine(const std::filesystem::path& p);

    std::filesystem::path root_;
    std::atomic<long> hits_{0}, misses_{0}, quarantined_{0};
};

// Cache root: $AKQ_CACHE_ROOT when set, otherwise `configured`.
std::filesystem::path resolve_cache_root(const std::filesystem::path& configured);

}  // namespace akq
