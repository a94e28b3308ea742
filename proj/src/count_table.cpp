#include "frobgen/count_table.hpp"

#include <new>
#include <stdexcept>
#include <string>

#include "frobgen/errors.hpp"

namespace frobgen {
namespace {

void check_bound(Value bound) {
    if (bound < 0) {
        throw ValidationError("table bound must be non-negative");
    }
    if (bound > kMaxTableBound) {
        throw ResourceError("table bound " + std::to_string(bound) + " exceeds limit " +
                            std::to_string(kMaxTableBound));
    }
}

std::vector<Count> allocate(Value bound) {
    try {
        return std::vector<Count>(static_cast<std::size_t>(bound) + 1, 0);
    } catch (const std::bad_alloc&) {
        throw ResourceError("cannot allocate count table of bound " + std::to_string(bound));
    }
}

} // namespace

CountTable::CountTable(GeneratorTuple tuple, Count cap, Value bound, std::vector<Count> counts)
    : tuple_(std::move(tuple)), cap_(cap), bound_(bound), counts_(std::move(counts)) {}

Count CountTable::at(Value t) const {
    if (t < 0 || t > bound_) {
        throw std::out_of_range("index " + std::to_string(t) + " outside count table");
    }
    return counts_[static_cast<std::size_t>(t)];
}

CountTable build_count_table(const GeneratorTuple& tuple, Count cap, Value bound) {
    if (cap < 1) {
        throw ValidationError("saturation cap must be at least 1");
    }
    check_bound(bound);
    auto counts = allocate(bound);
    counts[0] = 1;
    const auto n = counts.size();
    for (Value x : tuple.generators()) {
        const auto step = static_cast<std::size_t>(x);
        for (std::size_t t = step; t < n; ++t) {
            // Both operands are <= cap, so cap - a cannot underflow.
            const Count a = counts[t];
            const Count b = counts[t - step];
            counts[t] = (b >= cap - a) ? cap : a + b;
        }
    }
    return CountTable(tuple, cap, bound, std::move(counts));
}

Count rep_count_exact(const GeneratorTuple& tuple, Value t) {
    check_bound(t);
    auto counts = allocate(t);
    counts[0] = 1;
    const auto n = counts.size();
    for (Value x : tuple.generators()) {
        const auto step = static_cast<std::size_t>(x);
        for (std::size_t i = step; i < n; ++i) {
            if (__builtin_add_overflow(counts[i], counts[i - step], &counts[i])) {
                throw ArithmeticOverflowError("representation count of " + std::to_string(t) +
                                              " over {" + tuple.to_string() +
                                              "} overflows 64 bits");
            }
        }
    }
    return counts.back();
}

std::optional<Value> certify_threshold_window(const CountTable& table, Count threshold) {
    if (threshold < 1 || threshold > table.cap()) {
        throw std::invalid_argument("threshold must lie in [1, cap]");
    }
    const Value width = table.tuple().min();
    const auto counts = table.counts();
    // Length of the current run of cells at or above threshold.
    Value run = 0;
    for (Value t = 0; t <= table.bound(); ++t) {
        if (counts[static_cast<std::size_t>(t)] >= threshold) {
            if (++run == width) {
                return t - width;
            }
        } else {
            run = 0;
        }
    }
    return std::nullopt;
}

} // namespace frobgen
