#include "isingx/cache.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <unistd.h>

namespace isingx {

namespace fs = std::filesystem;

FileCache FileCache::resolve(const std::string& explicit_dir, bool enabled) {
    if (!enabled) return FileCache(fs::path(), false);
    fs::path dir;
    if (!explicit_dir.empty()) {
        dir = explicit_dir;
    } else if (const char* env = std::getenv("ISINGX_CACHE_DIR"); env && *env) {
        dir = env;
    } else if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
        dir = fs::path(xdg) / "isingx";
    } else if (const char* home = std::getenv("HOME"); home && *home) {
        dir = fs::path(home) / ".cache" / "isingx";
    } else {
        return FileCache(fs::path(), false);
    }
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) return FileCache(fs::path(), false);
    return FileCache(dir, true);
}

fs::path FileCache::path_for(const std::string& key) const {
    std::string safe;
    for (char c : key) {
        safe += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == '.')
                    ? c
                    : '_';
    }
    return dir_ / (safe + ".json");
}

std::optional<nlohmann::json> FileCache::load(const std::string& key) const {
    if (!enabled_) return std::nullopt;
    std::ifstream in(path_for(key));
    if (!in) return std::nullopt;
    nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.is_object()) return std::nullopt;
    if (j.value("schema", "") != kSchema) return std::nullopt;
    if (!j.contains("payload")) return std::nullopt;
    return j["payload"];
}

void FileCache::store(const std::string& key, const nlohmann::json& payload) const {
    if (!enabled_) return;
    nlohmann::json j;
    j["schema"] = kSchema;
    j["key"] = key;
    j["payload"] = payload;
    fs::path target = path_for(key);
    fs::path tmp = target;
    tmp += ".tmp" + std::to_string(static_cast<unsigned long>(::getpid()));
    {
        std::ofstream out(tmp);
        if (!out) return;
        out << j.dump(2) << "\n";
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) fs::remove(tmp, ec);
}

}  // namespace isingx
