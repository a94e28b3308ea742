#include "frobgen/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <numeric>
#include <thread>

#include "frobgen/checkpoint.hpp"
#include "frobgen/errors.hpp"
#include "frobgen/g_sequence.hpp"

namespace frobgen {
namespace {

void check_scan_arguments(std::size_t k, Value max_element) {
    if (k < 2) {
        throw ValidationError("tuple size k must be at least 2");
    }
    if (max_element < static_cast<Value>(k) + 1) {
        throw ValidationError("max_element must be at least k+1");
    }
}

// Depth-first growth of a tuple; reach[t] marks t in the semigroup of the
// current prefix, restricted to [0, max_element].
class ReasonableWalker {
public:
    ReasonableWalker(std::size_t k, Value max_element, const TupleVisitor& visit)
        : k_(k), max_(max_element), visit_(visit) {
        prefix_.reserve(k);
    }

    void run_from(std::span<const Value> seed) {
        std::vector<char> reach(static_cast<std::size_t>(max_) + 1, 0);
        reach[0] = 1;
        for (Value x : seed) {
            if (reach[static_cast<std::size_t>(x)]) {
                return;
            }
            add(reach, x);
            prefix_.push_back(x);
        }
        descend(reach, std::accumulate(seed.begin(), seed.end(), Value{0},
                                       [](Value g, Value x) { return std::gcd(g, x); }));
    }

private:
    void add(std::vector<char>& reach, Value x) const {
        const auto step = static_cast<std::size_t>(x);
        for (std::size_t t = step; t < reach.size(); ++t) {
            reach[t] = static_cast<char>(reach[t] | reach[t - step]);
        }
    }

    void descend(const std::vector<char>& reach, Value gcd) {
        if (prefix_.size() == k_) {
            if (gcd == 1) {
                visit_(GeneratorTuple(prefix_));
            }
            return;
        }
        const Value slots_after = static_cast<Value>(k_ - prefix_.size()) - 1;
        const Value lo = prefix_.empty() ? 2 : prefix_.back() + 1;
        for (Value x = lo; x <= max_ - slots_after; ++x) {
            if (reach[static_cast<std::size_t>(x)]) {
                continue;
            }
            std::vector<char> next = reach;
            add(next, x);
            prefix_.push_back(x);
            descend(next, std::gcd(gcd, x));
            prefix_.pop_back();
        }
    }

    std::size_t k_;
    Value max_;
    const TupleVisitor& visit_;
    std::vector<Value> prefix_;
};

void sort_witnesses(std::vector<InversionRecord>& witnesses) {
    std::sort(witnesses.begin(), witnesses.end(), [](const InversionRecord& a, const InversionRecord& b) {
        return a.tuple < b.tuple;
    });
}

} // namespace

InversionScan find_inversions(const GeneratorTuple& tuple, std::size_t j_max) {
    const GSequence seq = g_sequence(tuple, j_max + 1);
    InversionScan out;
    for (std::size_t i = 0; i <= j_max; ++i) {
        const auto& here = seq[i];
        const auto& next = seq[i + 1];
        if (!here || !next) {
            ++out.skipped_undefined;
        } else if (*here > *next) {
            out.records.push_back({tuple, i, *here, *next});
        }
    }
    return out;
}

std::string ShardId::to_string() const {
    return std::to_string(first) + "," + std::to_string(second);
}

void for_each_reasonable(std::size_t k, Value max_element, const TupleVisitor& visit) {
    check_scan_arguments(k, max_element);
    ReasonableWalker walker(k, max_element, visit);
    walker.run_from({});
}

std::vector<GeneratorTuple> enumerate_reasonable(std::size_t k, Value max_element) {
    std::vector<GeneratorTuple> out;
    for_each_reasonable(k, max_element, [&out](const GeneratorTuple& t) { out.push_back(t); });
    return out;
}

std::vector<ShardId> scan_shards(std::size_t k, Value max_element) {
    check_scan_arguments(k, max_element);
    std::vector<ShardId> shards;
    const Value last_second = max_element - static_cast<Value>(k - 2);
    for (Value a = 2; a < last_second; ++a) {
        for (Value b = a + 1; b <= last_second; ++b) {
            if (b % a != 0) {
                shards.push_back({a, b});
            }
        }
    }
    return shards;
}

void for_each_reasonable_in_shard(std::size_t k, Value max_element, ShardId shard, const TupleVisitor& visit) {
    check_scan_arguments(k, max_element);
    if (shard.first < 2 || shard.second <= shard.first || shard.second > max_element) {
        return;
    }
    ReasonableWalker walker(k, max_element, visit);
    const Value seed[] = {shard.first, shard.second};
    walker.run_from(seed);
}

void ShardResult::merge(const ShardResult& other) {
    tuples_scanned += other.tuples_scanned;
    skipped_undefined += other.skipped_undefined;
    errors += other.errors;
    if (!other.min_inversion_index) {
        return;
    }
    if (!min_inversion_index || *other.min_inversion_index < *min_inversion_index) {
        min_inversion_index = other.min_inversion_index;
        witnesses = other.witnesses;
    } else if (*other.min_inversion_index == *min_inversion_index) {
        witnesses.insert(witnesses.end(), other.witnesses.begin(), other.witnesses.end());
    }
}

ShardResult scan_shard(std::size_t k, Value max_element, std::size_t j_max, ShardId shard) {
    ShardResult result;
    for_each_reasonable_in_shard(k, max_element, shard, [&](const GeneratorTuple& tuple) {
        ++result.tuples_scanned;
        InversionScan inv;
        try {
            inv = find_inversions(tuple, j_max);
        } catch (const std::exception&) {
            ++result.errors;
            return;
        }
        result.skipped_undefined += inv.skipped_undefined;
        if (inv.records.empty()) {
            return;
        }
        ShardResult one;
        one.min_inversion_index = inv.records.front().index;
        for (auto& r : inv.records) {
            if (r.index == *one.min_inversion_index) {
                one.witnesses.push_back(std::move(r));
            }
        }
        result.merge(one);
    });
    sort_witnesses(result.witnesses);
    return result;
}

ScanReport scan(std::size_t k, Value max_element, std::size_t j_max, const ScanOptions& options) {
    if (options.shard_stride == 0 || options.shard_offset >= options.shard_stride) {
        throw ValidationError("shard selection needs offset < stride");
    }
    const auto all_shards = scan_shards(k, max_element);
    std::vector<ShardId> shards;
    for (std::size_t i = options.shard_offset; i < all_shards.size(); i += options.shard_stride) {
        shards.push_back(all_shards[i]);
    }

    const checkpoint::ScanParameters params{k, max_element, j_max};
    std::vector<std::optional<ShardResult>> results(shards.size());
    std::size_t resumed = 0;
    std::optional<checkpoint::Writer> writer;
    if (options.checkpoint) {
        auto done = checkpoint::load(*options.checkpoint, params);
        for (std::size_t i = 0; i < shards.size(); ++i) {
            if (auto it = done.find(shards[i]); it != done.end()) {
                results[i] = std::move(it->second);
                ++resumed;
            }
        }
        writer.emplace(*options.checkpoint, params);
    }

    std::size_t threads = options.threads ? options.threads : std::thread::hardware_concurrency();
    threads = std::max<std::size_t>(1, std::min(threads, shards.size()));

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= shards.size()) {
                return;
            }
            if (results[i]) {
                continue;
            }
            try {
                ShardResult r = scan_shard(k, max_element, j_max, shards[i]);
                if (writer) {
                    writer->append(shards[i], r);
                }
                results[i] = std::move(r);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next.store(shards.size());
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        for (std::size_t t = 1; t < threads; ++t) {
            pool.emplace_back(worker);
        }
        worker();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    ShardResult total;
    for (const auto& r : results) {
        total.merge(*r);
    }
    sort_witnesses(total.witnesses);

    ScanReport report;
    report.k = k;
    report.max_element = max_element;
    report.j_max = j_max;
    report.tuples_scanned = total.tuples_scanned;
    report.min_inversion_index = total.min_inversion_index;
    report.witnesses = std::move(total.witnesses);
    report.skipped_undefined = total.skipped_undefined;
    report.errors = total.errors;
    report.shards_total = all_shards.size();
    report.shards_processed = shards.size();
    report.shards_resumed = resumed;
    return report;
}

std::optional<std::size_t> f_lower_bound(std::size_t k, Value max_element, std::size_t j_max,
                                         const ScanOptions& options) {
    return scan(k, max_element, j_max, options).min_inversion_index;
}

} // namespace frobgen
