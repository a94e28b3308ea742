#include "frobgen/oracle.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "frobgen/errors.hpp"

namespace frobgen::oracle {
namespace {

void guard(std::size_t n, Value target) {
    if (n > kMaxGenerators || target > kMaxTarget || target < 0) {
        throw ValidationError("oracle only handles up to " + std::to_string(kMaxGenerators) +
                              " generators and targets in [0, " + std::to_string(kMaxTarget) + "]");
    }
}

// Representations of `target` using gens[0..last].
Count descend(std::span<const Value> gens, std::size_t last, Value target) {
    const Value x = gens[last];
    if (last == 0) {
        return target % x == 0 ? 1 : 0;
    }
    Count total = 0;
    for (Value a = target / x; a >= 0; --a) {
        if (__builtin_add_overflow(total, descend(gens, last - 1, target - a * x), &total)) {
            throw ArithmeticOverflowError("oracle count overflow");
        }
    }
    return total;
}

} // namespace

OracleCount brute_count(const GeneratorTuple& tuple, Value target) {
    guard(tuple.size(), target);
    return {tuple, target, descend(tuple.generators(), tuple.size() - 1, target)};
}

bool brute_reasonable(std::span<const Value> values) {
    guard(values.size(), values.empty() ? 0 : *std::max_element(values.begin(), values.end()));
    for (std::size_t i = 0; i < values.size(); ++i) {
        std::vector<Value> others;
        for (std::size_t j = 0; j < values.size(); ++j) {
            if (j != i) {
                others.push_back(values[j]);
            }
        }
        if (others.empty()) {
            continue;
        }
        std::sort(others.begin(), others.end());
        others.erase(std::unique(others.begin(), others.end()), others.end());
        if (brute_count(GeneratorTuple(others), values[i]).count > 0) {
            return false;
        }
    }
    return true;
}

} // namespace frobgen::oracle
