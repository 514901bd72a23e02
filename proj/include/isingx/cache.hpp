#ifndef ISINGX_CACHE_HPP
#define ISINGX_CACHE_HPP

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>

namespace isingx {

// One JSON file per computed product, in a single directory.  Entries carry a
// schema version; anything unreadable or from another schema is ignored and
// recomputed.  Writes go through a temp file + rename so concurrent writers
// of identical values cannot corrupt each other.
class FileCache {
public:
    static constexpr const char* kSchema = "1";

    // Resolution order: explicit dir, $ISINGX_CACHE_DIR, then
    // $XDG_CACHE_HOME/isingx or ~/.cache/isingx.  Empty dir disables caching.
    static FileCache resolve(const std::string& explicit_dir, bool enabled = true);

    bool enabled() const { return enabled_; }
    const std::filesystem::path& dir() const { return dir_; }

    std::optional<nlohmann::json> load(const std::string& key) const;
    void store(const std::string& key, const nlohmann::json& payload) const;

private:
    FileCache(std::filesystem::path dir, bool enabled)
        : dir_(std::move(dir)), enabled_(enabled) {}
    std::filesystem::path path_for(const std::string& key) const;

    std::filesystem::path dir_;
    bool enabled_ = false;
};

}  // namespace isingx

#endif
