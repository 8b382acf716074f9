// Flat-file cache with checksummed entries and atomic replacement.

#include "schubert/store.hpp"

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "schubert/error.hpp"

namespace schubert {

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

namespace {

std::string hex16(std::uint64_t value) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int k = 15; k >= 0; --k) {
        out[k] = digits[value & 0xf];
        value >>= 4;
    }
    return out;
}

}  // namespace

std::string CacheKey::to_string() const {
    std::string out = std::to_string(schema_version) + "|" + cartan_type + "|" + kind;
    for (const std::string& w : words) out += "|" + w;
    return out;
}

std::string CacheKey::filename() const { return hex16(fnv1a64(to_string())) + ".txt"; }

Store::Store(std::filesystem::path root) : root_(std::move(root)) {}

std::optional<std::string> Store::get(const CacheKey& key) const {
    std::ifstream in(root_ / key.filename(), std::ios::binary);
    if (!in) return std::nullopt;
    std::string version_line, checksum_line;
    if (!std::getline(in, version_line) || !std::getline(in, checksum_line)) {
        ++corrupt_;
        return std::nullopt;
    }
    std::ostringstream rest;
    rest << in.rdbuf();
    std::string payload = rest.str();
    if (version_line != std::to_string(key.schema_version) ||
        checksum_line != hex16(fnv1a64(payload))) {
        ++corrupt_;
        return std::nullopt;
    }
    return payload;
}

void Store::put(const CacheKey& key, const std::string& payload) const {
    std::filesystem::create_directories(root_);
    std::filesystem::path target = root_ / key.filename();
    std::filesystem::path temp =
        root_ / (key.filename() + ".tmp." + std::to_string(::getpid()));
    {
        std::ofstream out(temp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write cache entry " + temp.string());
        out << key.schema_version << "\n" << hex16(fnv1a64(payload)) << "\n" << payload;
        out.flush();
        if (!out) throw Error("short write to cache entry " + temp.string());
    }
    std::filesystem::rename(temp, target);
}

std::filesystem::path resolve_store_dir(const std::string& explicit_dir) {
    if (!explicit_dir.empty()) return explicit_dir;
    if (const char* dir = std::getenv("SCHUBERT_CACHE_DIR"); dir && *dir) return dir;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return std::filesystem::path(xdg) / "schubert";
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::filesystem::path(home) / ".cache" / "schubert";
    return ".schubert-cache";
}

}  // namespace schubert
