#pragma once

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <string>
#include <string_view>

#include "frobgen/search.hpp"

// Checkpoint file layout, one record per line, append-only:
//
//   # frobgen-scan v1 k=3 max=60 j_max=15
//   <first>,<second>\t<scanned>\t<skipped>\t<errors>\t<min|->\t<witnesses>
//
// <witnesses> is empty or a ';'-separated list of
// `<x1,x2,...>@<index>:<g_i>:<g_next>`. A trailing line without its newline
// is an interrupted write and is ignored on load.

namespace frobgen::checkpoint {

struct ScanParameters {
    std::size_t k;
    Value max_element;
    std::size_t j_max;

    friend bool operator==(const ScanParameters&, const ScanParameters&) = default;
};

[[nodiscard]] std::string header_line(const ScanParameters& params);
[[nodiscard]] std::string format_record(ShardId shard, const ShardResult& result);
/// Throws ValidationError on malformed input.
[[nodiscard]] std::pair<ShardId, ShardResult> parse_record(std::string_view line);

/// Completed shards in `path`. A missing file yields an empty map; a header
/// for different parameters is a ValidationError.
[[nodiscard]] std::map<ShardId, ShardResult> load(const std::filesystem::path& path, const ScanParameters& params);

/// Thread-safe appender. Writes the header when the file is new or empty.
class Writer {
public:
    Writer(const std::filesystem::path& path, const ScanParameters& params);
    void append(ShardId shard, const ShardResult& result);

private:
    std::mutex mutex_;
    std::ofstream out_;
};

} // namespace frobgen::checkpoint
