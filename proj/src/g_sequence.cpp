#include "frobgen/g_sequence.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "frobgen/errors.hpp"

namespace frobgen {
namespace {

Value saturating_mul(Value a, Value b) {
    Value out = 0;
    if (__builtin_mul_overflow(a, b, &out)) {
        return std::numeric_limits<Value>::max();
    }
    return out;
}

Value saturating_add(Value a, Value b) {
    Value out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        return std::numeric_limits<Value>::max();
    }
    return out;
}

} // namespace

GSequence::GSequence(GeneratorTuple tuple, std::size_t j_max, std::vector<std::optional<Value>> values,
                     Value window_start)
    : tuple_(std::move(tuple)), j_max_(j_max), values_(std::move(values)), window_start_(window_start) {}

Value initial_bound_guess(const GeneratorTuple& tuple, std::size_t j_max) {
    const Value mult = saturating_add(static_cast<Value>(j_max), 1);
    return saturating_add(saturating_mul(saturating_mul(mult, tuple.min()), tuple.max()), tuple.max());
}

GSequence g_sequence(const GeneratorTuple& tuple, std::size_t j_max, std::optional<Value> first_bound) {
    if (!tuple.coprime()) {
        throw DomainError("g_j undefined for non-coprime tuple {" + tuple.to_string() + "} (gcd " +
                          std::to_string(tuple.gcd()) + ")");
    }
    const Count threshold = static_cast<Count>(j_max) + 1;
    const Count cap = threshold + 1;

    Value bound = std::max<Value>(1, first_bound.value_or(initial_bound_guess(tuple, j_max)));
    for (;;) {
        if (bound > kMaxTableBound) {
            // One last attempt at the limit before giving up.
            bound = kMaxTableBound;
        }
        const CountTable table = build_count_table(tuple, cap, bound);
        if (const auto window = certify_threshold_window(table, threshold)) {
            const Value end = *window + tuple.min();
            std::vector<std::optional<Value>> values(j_max + 1);
            // Scan downward so the first hit for each j is its maximum.
            std::size_t remaining = values.size();
            const auto counts = table.counts();
            for (Value t = end; t >= 0 && remaining > 0; --t) {
                const Count c = counts[static_cast<std::size_t>(t)];
                if (c <= j_max && !values[c]) {
                    values[c] = t;
                    --remaining;
                }
            }
            return GSequence(tuple, j_max, std::move(values), *window);
        }
        if (bound == kMaxTableBound) {
            throw ResourceError("no certificate for {" + tuple.to_string() + "} at j_max " +
                                std::to_string(j_max) + " within table limit");
        }
        bound = saturating_mul(bound, 2);
    }
}

Value frobenius(const GeneratorTuple& tuple) {
    if (tuple.contains(1)) {
        throw DomainError("all integers representable: 1 is a generator");
    }
    const GSequence seq = g_sequence(tuple, 0);
    // Coprime, 1 excluded: some positive integer below min() is a gap.
    return *seq[0];
}

} // namespace frobgen
