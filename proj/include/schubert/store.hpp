#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace schubert {

// Bump to invalidate every existing cache entry (the version participates in
// the entry filename and is repeated inside the file).
inline constexpr int kStoreSchemaVersion = 1;

// Identifies one cached artifact. `kind` is one of "sigma", "double-schubert",
// "localization", "structconst"; `words` holds the canonical word texts (plus
// short tags such as a degree marker) that pin the artifact down.
struct CacheKey {
    int schema_version = kStoreSchemaVersion;
    std::string cartan_type;
    std::string kind;
    std::vector<std::string> words;

    // Stable joined form; the filename is its 64-bit FNV-1a hash in hex.
    std::string to_string() const;
    std::string filename() const;
};

std::uint64_t fnv1a64(const std::string& data);

// One file per entry under a flat directory: first line the schema version,
// second line the payload checksum in hex, then the payload verbatim.
// Payloads are the canonical text serializations of the cached objects, so
// entries are directly readable.
//
// Writes go to a temporary sibling and are renamed into place, so concurrent
// readers see either the old entry or the complete new one. A file that fails
// the version or checksum test is treated as a miss and counted.
class Store {
public:
    explicit Store(std::filesystem::path root);

    const std::filesystem::path& root() const { return root_; }

    std::optional<std::string> get(const CacheKey& key) const;
    void put(const CacheKey& key, const std::string& payload) const;

    int corrupt_entries_seen() const { return corrupt_; }

private:
    std::filesystem::path root_;
    mutable int corrupt_ = 0;
};

// Cache directory resolution: the explicit argument when nonempty, then
// SCHUBERT_CACHE_DIR, then XDG_CACHE_HOME/schubert, then ~/.cache/schubert,
// then ./.schubert-cache as a last resort.
std::filesystem::path resolve_store_dir(const std::string& explicit_dir);

}  // namespace schubert
