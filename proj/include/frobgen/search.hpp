#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "frobgen/generator_tuple.hpp"

namespace frobgen {

/// g_index > g_{index+1}, both defined.
struct InversionRecord {
    GeneratorTuple tuple;
    std::size_t index;
    Value g_i;
    Value g_next;

    friend bool operator==(const InversionRecord&, const InversionRecord&) = default;
};

struct InversionScan {
    std::vector<InversionRecord> records;
    /// Indices i <= j_max where g_i or g_{i+1} is undefined.
    std::size_t skipped_undefined = 0;
};

/// Computes g_0 .. g_{j_max+1} once and reports every inversion at i <= j_max.
[[nodiscard]] InversionScan find_inversions(const GeneratorTuple& tuple, std::size_t j_max);

/// Work unit of a scan: every tuple whose two smallest elements are
/// (first, second).
struct ShardId {
    Value first;
    Value second;

    [[nodiscard]] std::string to_string() const;
    friend auto operator<=>(const ShardId&, const ShardId&) = default;
};

using TupleVisitor = std::function<void(const GeneratorTuple&)>;

/// Visits, in lexicographic order, every strictly increasing k-tuple over
/// [2, max_element] that is coprime and reasonable.
///
/// Reasonableness is tested while the tuple grows: a generator can only be
/// represented by smaller ones, so each new element is checked against the
/// semigroup of its prefix. ValidationError unless k >= 2 and
/// max_element >= k+1.
void for_each_reasonable(std::size_t k, Value max_element, const TupleVisitor& visit);

[[nodiscard]] std::vector<GeneratorTuple> enumerate_reasonable(std::size_t k, Value max_element);

/// Shards that can contain at least one candidate, in lexicographic order.
/// Pairs where the second element is a multiple of the first are dropped.
[[nodiscard]] std::vector<ShardId> scan_shards(std::size_t k, Value max_element);

void for_each_reasonable_in_shard(std::size_t k, Value max_element, ShardId shard, const TupleVisitor& visit);

/// Aggregate over one shard or a whole scan. Merging keeps the smallest
/// inversion index and the witnesses at that index only.
struct ShardResult {
    std::size_t tuples_scanned = 0;
    std::size_t skipped_undefined = 0;
    std::size_t errors = 0;
    std::optional<std::size_t> min_inversion_index;
    std::vector<InversionRecord> witnesses;

    void merge(const ShardResult& other);
};

[[nodiscard]] ShardResult scan_shard(std::size_t k, Value max_element, std::size_t j_max, ShardId shard);

struct ScanOptions {
    /// 0 picks std::thread::hardware_concurrency().
    std::size_t threads = 0;
    /// Append-only record of finished shards; reloaded on restart.
    std::optional<std::filesystem::path> checkpoint;
    /// Process only shards whose position p satisfies p % stride == offset.
    std::size_t shard_stride = 1;
    std::size_t shard_offset = 0;
};

struct ScanReport {
    std::size_t k = 0;
    Value max_element = 0;
    std::size_t j_max = 0;
    std::size_t tuples_scanned = 0;
    std::optional<std::size_t> min_inversion_index;
    /// Inversions at min_inversion_index, ordered by tuple.
    std::vector<InversionRecord> witnesses;
    std::size_t skipped_undefined = 0;
    /// Tuples whose g-sequence could not be computed.
    std::size_t errors = 0;
    std::size_t shards_total = 0;
    std::size_t shards_processed = 0;
    std::size_t shards_resumed = 0;
};

/// find_inversions over every reasonable coprime k-tuple with elements
/// <= max_element. The report does not depend on thread count or on
/// whether shards came from a checkpoint.
[[nodiscard]] ScanReport scan(std::size_t k, Value max_element, std::size_t j_max, const ScanOptions& options = {});

/// Smallest inversion index seen in the bounded scan: a witness that
/// f(k) <= result, and evidence (not proof) that nothing smaller exists.
/// std::nullopt means no inversion was found within the bounds.
[[nodiscard]] std::optional<std::size_t> f_lower_bound(std::size_t k, Value max_element, std::size_t j_max,
                                                       const ScanOptions& options = {});

} // namespace frobgen
