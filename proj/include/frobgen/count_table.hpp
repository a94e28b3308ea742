#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "frobgen/generator_tuple.hpp"

namespace frobgen {

using Count = std::uint64_t;

/// Largest table index we agree to allocate. Anything bigger is reported as
/// a ResourceError instead of being truncated.
inline constexpr Value kMaxTableBound = Value{1} << 28;

/// Saturating representation counts: counts[t] = min(R(t), cap) for
/// t in [0, bound]. Immutable once built.
class CountTable {
public:
    [[nodiscard]] const GeneratorTuple& tuple() const noexcept { return tuple_; }
    [[nodiscard]] Count cap() const noexcept { return cap_; }
    [[nodiscard]] Value bound() const noexcept { return bound_; }
    [[nodiscard]] std::span<const Count> counts() const noexcept { return counts_; }
    [[nodiscard]] Count operator[](Value t) const noexcept { return counts_[static_cast<std::size_t>(t)]; }
    /// Bounds-checked; throws std::out_of_range.
    [[nodiscard]] Count at(Value t) const;

private:
    friend CountTable build_count_table(const GeneratorTuple&, Count, Value);
    CountTable(GeneratorTuple tuple, Count cap, Value bound, std::vector<Count> counts);

    GeneratorTuple tuple_;
    Count cap_;
    Value bound_;
    std::vector<Count> counts_;
};

/// Denumerant DP: one ascending pass per generator, so each coefficient
/// vector is counted once regardless of generator order.
[[nodiscard]] CountTable build_count_table(const GeneratorTuple& tuple, Count cap, Value bound);

/// Exact R(t). Throws ArithmeticOverflowError if the count leaves 64 bits.
[[nodiscard]] Count rep_count_exact(const GeneratorTuple& tuple, Value t);

/// Least W such that counts[t] >= threshold on the whole window
/// [W+1, W+min(generators)] and the window lies inside the table.
///
/// Since R(t) >= R(t - x) for every generator x, one such window forces
/// R(t) >= threshold for every t > W. W may be -1 (generator 1 with
/// threshold 1). Throws std::invalid_argument if threshold exceeds the cap
/// or is zero.
[[nodiscard]] std::optional<Value> certify_threshold_window(const CountTable& table, Count threshold);

} // namespace frobgen
