#include <shv/cli/cache.hpp>

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>

namespace shv::cli {

namespace fs = std::filesystem;

Cache::Cache(std::optional<std::string> dir) : dir_(std::move(dir)) {
    if (dir_) fs::create_directories(*dir_);
}

std::string Cache::hash_key(const std::string& key) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : key) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::optional<nlohmann::json> Cache::get(const std::string& key) const {
    if (!dir_) return std::nullopt;
    std::lock_guard<std::mutex> lock(mutex_);
    std::ifstream in(fs::path(*dir_) / (hash_key(key) + ".json"));
    if (!in) return std::nullopt;
    try {
        nlohmann::json j = nlohmann::json::parse(in);
        if (j.at("key").get<std::string>() != key) return std::nullopt;
        return j.at("value");
    } catch (const std::exception&) {
        return std::nullopt;  // unreadable entries are recomputed
    }
}

void Cache::put(const std::string& key, const nlohmann::json& value) const {
    if (!dir_) return;
    std::lock_guard<std::mutex> lock(mutex_);
    const fs::path target = fs::path(*dir_) / (hash_key(key) + ".json");
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp);
        out << nlohmann::json{{"key", key}, {"value", value}}.dump() << "\n";
        if (!out) return;
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
}

}  // namespace shv::cli
