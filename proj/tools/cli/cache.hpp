#pragma once

// Append-only JSON-lines file of classification records, one line per
// (a, b, p):
//   {"a":0,"b":1,"p":11,"period":10,"l_minus":4,"l_zero":1,"l_plus":5,"k":0}
// Lines that fail to parse or violate the record invariants are ignored on
// load and recomputed on demand.

#include "flc/survey.hpp"

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <string>
#include <tuple>

namespace flc::cli {

class JsonLinesCache final : public RecordStore {
public:
    explicit JsonLinesCache(std::filesystem::path path);

    std::optional<PLRecord> find(const InitialPair& pair, std::uint64_t p) override;
    void store(const PLRecord& record) override;

    std::size_t size() const;
    std::size_t skipped_lines() const noexcept { return skipped_; }
    const std::filesystem::path& path() const noexcept { return path_; }

    static std::string encode(const PLRecord& record);
    /// nullopt when the line is malformed or inconsistent.
    static std::optional<PLRecord> decode(const std::string& line);

private:
    using Key = std::tuple<std::int64_t, std::int64_t, std::uint64_t>;

    std::filesystem::path path_;
    mutable std::mutex mutex_;
    std::map<Key, PLRecord> records_;
    std::ofstream writer_;
    std::size_t skipped_ = 0;
};

/// Environment variable naming the default cache file.
inline constexpr const char* kCacheEnvVar = "FLC_CACHE";

} // namespace flc::cli
