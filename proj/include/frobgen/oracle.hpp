#pragma once

#include <cstddef>
#include <span>

#include "frobgen/count_table.hpp"
#include "frobgen/generator_tuple.hpp"

namespace frobgen::oracle {

/// Largest target and tuple size the brute-force counter accepts.
inline constexpr Value kMaxTarget = 10'000;
inline constexpr std::size_t kMaxGenerators = 8;

struct OracleCount {
    GeneratorTuple tuple;
    Value target;
    Count count;
};

/// Counts coefficient vectors by recursing on the coefficient of the largest
/// generator, from its maximum down to zero. Deliberately naive and
/// independent of the DP in count_table.cpp.
///
/// Throws ValidationError outside the small-instance guard.
[[nodiscard]] OracleCount brute_count(const GeneratorTuple& tuple, Value target);

/// Condition (*) recomputed with brute_count. Takes raw values so it can
/// judge lists without going through normalize().
[[nodiscard]] bool brute_reasonable(std::span<const Value> values);

} // namespace frobgen::oracle
