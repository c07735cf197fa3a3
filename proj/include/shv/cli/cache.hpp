#pragma once

#include <json.hpp>

#include <mutex>
#include <optional>
#include <string>

namespace shv::cli {

// JSON files in a directory, one per key, named by a 64-bit FNV-1a hash of
// the key.  The key is stored inside the file and compared on read, so a
// hash collision reads as a miss.  Files may be deleted at any time.
class Cache {
public:
    Cache() = default;
    explicit Cache(std::optional<std::string> dir);

    bool enabled() const { return dir_.has_value(); }
    std::optional<nlohmann::json> get(const std::string& key) const;
    void put(const std::string& key, const nlohmann::json& value) const;

    static std::string hash_key(const std::string& key);

private:
    std::optional<std::string> dir_;
    mutable std::mutex mutex_;
};

}  // namespace shv::cli
