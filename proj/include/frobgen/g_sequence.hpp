#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "frobgen/count_table.hpp"
#include "frobgen/generator_tuple.hpp"

namespace frobgen {

/// g_0 .. g_{j_max} for one tuple. An entry is std::nullopt when no integer
/// has exactly j representations.
///
/// Every t > certified_window_start() has at least j_max+1 representations,
/// so the values are final: no larger integer can have exactly j of them.
class GSequence {
public:
    GSequence(GeneratorTuple tuple, std::size_t j_max, std::vector<std::optional<Value>> values,
              Value window_start);

    [[nodiscard]] const GeneratorTuple& tuple() const noexcept { return tuple_; }
    [[nodiscard]] std::size_t j_max() const noexcept { return j_max_; }
    [[nodiscard]] const std::vector<std::optional<Value>>& values() const noexcept { return values_; }
    [[nodiscard]] const std::optional<Value>& operator[](std::size_t j) const { return values_.at(j); }
    [[nodiscard]] Value certified_window_start() const noexcept { return window_start_; }
    /// Last index of the certificate window, W + min(generators).
    [[nodiscard]] Value certified_window_end() const noexcept { return window_start_ + tuple_.min(); }

private:
    GeneratorTuple tuple_;
    std::size_t j_max_;
    std::vector<std::optional<Value>> values_;
    Value window_start_;
};

/// First table bound g_sequence tries: (j_max+1) * min * max + max.
[[nodiscard]] Value initial_bound_guess(const GeneratorTuple& tuple, std::size_t j_max);

/// Grows a saturating table (cap j_max+2) by doubling until a threshold
/// window at j_max+1 certifies it, then reads off every g_j.
///
/// Throws DomainError for gcd > 1 and ResourceError if the table would
/// outgrow kMaxTableBound. `first_bound` overrides initial_bound_guess().
[[nodiscard]] GSequence g_sequence(const GeneratorTuple& tuple, std::size_t j_max,
                                   std::optional<Value> first_bound = std::nullopt);

/// Classical Frobenius number g_0. DomainError when gcd > 1 or 1 is a
/// generator.
[[nodiscard]] Value frobenius(const GeneratorTuple& tuple);

} // namespace frobgen
