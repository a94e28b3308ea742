#pragma once

#include <span>
#include <vector>

#include "frobgen/generator_tuple.hpp"

namespace frobgen {

/// Sorts and validates raw input. Throws ValidationError on an empty list,
/// a non-positive value or a duplicate.
[[nodiscard]] GeneratorTuple normalize(std::span<const Value> values);

/// One generator that is a non-negative combination of the others.
/// `coefficients` is aligned with the tuple; the entry for `element` is 0.
struct ReasonablenessWitness {
    Value element;
    std::vector<Value> coefficients;

    friend bool operator==(const ReasonablenessWitness&, const ReasonablenessWitness&) = default;
};

struct TupleClassification {
    Value gcd;
    bool coprime;
    /// No generator lies in the semigroup spanned by the others.
    bool reasonable;
    /// One entry per violating generator, ascending by element.
    std::vector<ReasonablenessWitness> witnesses;
};

/// Checks condition (*) generator by generator. A single-element tuple is
/// reasonable: there are no others to represent it.
///
/// Witnesses are the lexicographically smallest coefficient vectors over the
/// remaining generators in ascending order.
[[nodiscard]] TupleClassification classify(const GeneratorTuple& tuple);

} // namespace frobgen
