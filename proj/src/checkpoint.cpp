#include "frobgen/checkpoint.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "frobgen/errors.hpp"

namespace frobgen::checkpoint {
namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (;;) {
        const auto pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos) {
            return parts;
        }
        start = pos + 1;
    }
}

template <typename T>
T parse_number(std::string_view s) {
    T value{};
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw ValidationError("checkpoint: bad number '" + std::string(s) + "'");
    }
    return value;
}

GeneratorTuple parse_tuple(std::string_view s) {
    std::vector<Value> gens;
    for (auto part : split(s, ',')) {
        gens.push_back(parse_number<Value>(part));
    }
    return GeneratorTuple(std::move(gens));
}

} // namespace

std::string header_line(const ScanParameters& params) {
    std::ostringstream os;
    os << "# frobgen-scan v1 k=" << params.k << " max=" << params.max_element << " j_max=" << params.j_max;
    return os.str();
}

std::string format_record(ShardId shard, const ShardResult& result) {
    std::ostringstream os;
    os << shard.to_string() << '\t' << result.tuples_scanned << '\t' << result.skipped_undefined << '\t'
       << result.errors << '\t';
    if (result.min_inversion_index) {
        os << *result.min_inversion_index;
    } else {
        os << '-';
    }
    os << '\t';
    for (std::size_t i = 0; i < result.witnesses.size(); ++i) {
        const auto& w = result.witnesses[i];
        os << (i ? ";" : "") << w.tuple.to_string() << '@' << w.index << ':' << w.g_i << ':' << w.g_next;
    }
    return os.str();
}

std::pair<ShardId, ShardResult> parse_record(std::string_view line) {
    const auto fields = split(line, '\t');
    if (fields.size() != 6) {
        throw ValidationError("checkpoint: expected 6 fields in '" + std::string(line) + "'");
    }
    const auto id = split(fields[0], ',');
    if (id.size() != 2) {
        throw ValidationError("checkpoint: bad shard id '" + std::string(fields[0]) + "'");
    }
    const ShardId shard{parse_number<Value>(id[0]), parse_number<Value>(id[1])};

    ShardResult result;
    result.tuples_scanned = parse_number<std::size_t>(fields[1]);
    result.skipped_undefined = parse_number<std::size_t>(fields[2]);
    result.errors = parse_number<std::size_t>(fields[3]);
    if (fields[4] != "-") {
        result.min_inversion_index = parse_number<std::size_t>(fields[4]);
    }
    if (!fields[5].empty()) {
        for (auto item : split(fields[5], ';')) {
            const auto at = item.find('@');
            if (at == std::string_view::npos) {
                throw ValidationError("checkpoint: bad witness '" + std::string(item) + "'");
            }
            const auto nums = split(item.substr(at + 1), ':');
            if (nums.size() != 3) {
                throw ValidationError("checkpoint: bad witness '" + std::string(item) + "'");
            }
            result.witnesses.push_back({parse_tuple(item.substr(0, at)), parse_number<std::size_t>(nums[0]),
                                        parse_number<Value>(nums[1]), parse_number<Value>(nums[2])});
        }
    }
    if (!result.witnesses.empty() && !result.min_inversion_index) {
        throw ValidationError("checkpoint: witnesses without an inversion index");
    }
    return {shard, std::move(result)};
}

std::map<ShardId, ShardResult> load(const std::filesystem::path& path, const ScanParameters& params) {
    std::map<ShardId, ShardResult> done;
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        return done;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    if (text.empty()) {
        return done;
    }

    auto lines = split(text, '\n');
    // The piece after the final newline is either empty or a torn write.
    lines.pop_back();
    if (lines.empty()) {
        return done;
    }
    if (lines.front() != header_line(params)) {
        throw ValidationError("checkpoint " + path.string() + " was written for different scan parameters ('" +
                              std::string(lines.front()) + "')");
    }
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty()) {
            continue;
        }
        auto [shard, result] = parse_record(lines[i]);
        done[shard] = std::move(result);
    }
    return done;
}

Writer::Writer(const std::filesystem::path& path, const ScanParameters& params) {
    std::string existing;
    if (std::ifstream in(path, std::ios::binary); in) {
        std::stringstream buffer;
        buffer << in.rdbuf();
        existing = buffer.str();
    }
    // Drop a torn final record so the next append starts on a fresh line.
    if (!existing.empty() && existing.back() != '\n') {
        const auto keep = existing.rfind('\n');
        existing.resize(keep == std::string::npos ? 0 : keep + 1);
        std::filesystem::resize_file(path, existing.size());
    }
    out_.open(path, std::ios::app | std::ios::binary);
    if (!out_) {
        throw ResourceError("cannot open checkpoint " + path.string());
    }
    if (existing.empty()) {
        out_ << header_line(params) << '\n';
        out_.flush();
    }
}

void Writer::append(ShardId shard, const ShardResult& result) {
    const std::string line = format_record(shard, result) + '\n';
    std::lock_guard lock(mutex_);
    out_ << line;
    out_.flush();
}

} // namespace frobgen::checkpoint
