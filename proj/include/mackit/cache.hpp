#ifndef MACKIT_CACHE_HPP
#define MACKIT_CACHE_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "mackit/json_io.hpp"
#include "mackit/macdonald.hpp"

namespace mackit {

// On-disk cache: one JSON file per (family, weight) under a user-chosen
// directory (MACKIT_CACHE env var, overridden by --cache-dir).  Entries
// carry a schema version and are ignored on mismatch.
class DiskCache : public MacdonaldStore {
public:
    static constexpr int kSchemaVersion = 1;

    explicit DiskCache(std::filesystem::path dir);

    const std::filesystem::path& dir() const { return dir_; }

    bool load_P(long weight, std::vector<PRecord>& out) override;
    void store_P(long weight, const std::vector<PRecord>& records) override;
    bool load_kostka(KostkaVariant v, long weight, KostkaMatrix& out) override;
    void store_kostka(const KostkaMatrix& m) override;

    struct FileStat {
        std::string name;
        std::uintmax_t bytes = 0;
        std::string family;
        long weight = 0;
        long entries = 0;
        bool valid = false;
    };
    std::vector<FileStat> stats() const;
    // Remove this cache's files; returns how many were deleted.
    long clear();

private:
    std::filesystem::path p_file(long weight) const;
    std::filesystem::path kostka_file(KostkaVariant v, long weight) const;
    std::optional<Json> read_file(const std::filesystem::path& path, const std::string& family) const;
    void write_file(const std::filesystem::path& path, const Json& payload) const;

    std::filesystem::path dir_;
};

} // namespace mackit

#endif
