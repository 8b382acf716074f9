#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "schubert/store.hpp"

using namespace schubert;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const char* tag) {
    fs::path dir = fs::temp_directory_path() / (std::string("schubert-test-") + tag);
    fs::remove_all(dir);
    return dir;
}

}  // namespace

TEST_CASE("cache keys name files deterministically") {
    CacheKey a{1, "E8", "localization", {"s4s2", "s3s4s2"}};
    CacheKey b{1, "E8", "localization", {"s4s2", "s3s4s2"}};
    CacheKey c{1, "E8", "localization", {"s3s4s2", "s4s2"}};
    CHECK(a.filename() == b.filename());
    CHECK(a.filename() != c.filename());
    CHECK(a.filename().size() == 20);
    CHECK(a.filename().substr(16) == ".txt");
    CacheKey bumped = a;
    bumped.schema_version = 2;
    CHECK(bumped.filename() != a.filename());

    // reference vector for the hash itself
    CHECK(fnv1a64("") == 14695981039346656037ull);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
}

TEST_CASE("store round trip") {
    Store store(fresh_dir("roundtrip"));
    CacheKey key{kStoreSchemaVersion, "A2", "sigma", {"full"}};
    CHECK(!store.get(key).has_value());

    std::string payload = "e: 1\ns1: -x1\n";
    store.put(key, payload);
    auto got = store.get(key);
    REQUIRE(got.has_value());
    CHECK(*got == payload);
    CHECK(store.corrupt_entries_seen() == 0);

    // overwrite wins
    store.put(key, "e: 1\n");
    CHECK(*store.get(key) == "e: 1\n");

    // empty payloads and payloads without trailing newline survive unchanged
    CacheKey other{kStoreSchemaVersion, "A2", "sigma", {"empty"}};
    store.put(other, "");
    CHECK(store.get(other).has_value());
    CHECK(*store.get(other) == "");
    store.put(other, "x1 + x2");
    CHECK(*store.get(other) == "x1 + x2");
}

TEST_CASE("schema bumps ignore old entries") {
    Store store(fresh_dir("schema"));
    CacheKey key{1, "C2", "double-schubert", {"s1s2"}};
    store.put(key, "payload");
    CacheKey bumped = key;
    bumped.schema_version = 2;
    CHECK(!store.get(bumped).has_value());
    CHECK(store.get(key).has_value());
}

TEST_CASE("corrupt entries are misses") {
    fs::path dir = fresh_dir("corrupt");
    Store store(dir);
    CacheKey key{kStoreSchemaVersion, "A2", "structconst", {"s1", "s1", "gkm"}};
    store.put(key, "s1: 2*t1 - t2\n");

    // flip one payload byte behind the checksum's back
    fs::path file = dir / key.filename();
    std::string content;
    {
        std::ifstream in(file, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        content = buf.str();
    }
    content[content.size() - 2] ^= 1;
    {
        std::ofstream out(file, std::ios::binary | std::ios::trunc);
        out << content;
    }
    CHECK(!store.get(key).has_value());
    CHECK(store.corrupt_entries_seen() == 1);

    // truncated to a single line
    {
        std::ofstream out(file, std::ios::binary | std::ios::trunc);
        out << "1";
    }
    CHECK(!store.get(key).has_value());
    CHECK(store.corrupt_entries_seen() == 2);

    // a fresh put repairs the entry
    store.put(key, "s1: 2*t1 - t2\n");
    CHECK(store.get(key).has_value());
    CHECK(store.corrupt_entries_seen() == 2);
}

TEST_CASE("directory resolution order") {
    CHECK(resolve_store_dir("/tmp/explicit") == fs::path("/tmp/explicit"));

    setenv("SCHUBERT_CACHE_DIR", "/tmp/from-env", 1);
    CHECK(resolve_store_dir("") == fs::path("/tmp/from-env"));
    unsetenv("SCHUBERT_CACHE_DIR");

    setenv("XDG_CACHE_HOME", "/tmp/xdg", 1);
    CHECK(resolve_store_dir("") == fs::path("/tmp/xdg") / "schubert");
    unsetenv("XDG_CACHE_HOME");

    if (const char* home = std::getenv("HOME"); home && *home)
        CHECK(resolve_store_dir("") == fs::path(home) / ".cache" / "schubert");
}
