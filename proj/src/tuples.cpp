#include "frobgen/tuples.hpp"

#include <algorithm>
#include <string>

#include "frobgen/count_table.hpp"
#include "frobgen/errors.hpp"

namespace frobgen {
namespace {

// reach[i][t]: t is representable using others[i..]. Built back to front so
// the greedy walk from the front can check the suffix it still has to fill.
std::vector<Value> smallest_representation(std::span<const Value> others, Value target) {
    const std::size_t n = others.size();
    const auto width = static_cast<std::size_t>(target) + 1;
    std::vector<std::vector<char>> reach(n + 1, std::vector<char>(width, 0));
    reach[n][0] = 1;
    for (std::size_t i = n; i-- > 0;) {
        const auto step = static_cast<std::size_t>(others[i]);
        reach[i] = reach[i + 1];
        for (std::size_t t = step; t < width; ++t) {
            reach[i][t] = static_cast<char>(reach[i][t] || reach[i][t - step]);
        }
    }

    std::vector<Value> coeffs(n, 0);
    Value rest = target;
    for (std::size_t i = 0; i < n; ++i) {
        Value a = 0;
        while (!reach[i + 1][static_cast<std::size_t>(rest - a * others[i])]) {
            ++a;
        }
        coeffs[i] = a;
        rest -= a * others[i];
    }
    return coeffs;
}

} // namespace

GeneratorTuple normalize(std::span<const Value> values) {
    if (values.empty()) {
        throw ValidationError("generator list is empty");
    }
    std::vector<Value> sorted(values.begin(), values.end());
    for (Value v : sorted) {
        if (v < 1) {
            throw ValidationError("generator " + std::to_string(v) + " is not a positive integer");
        }
    }
    std::sort(sorted.begin(), sorted.end());
    if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
        throw ValidationError("duplicate generator " + std::to_string(*dup));
    }
    return GeneratorTuple(std::move(sorted));
}

TupleClassification classify(const GeneratorTuple& tuple) {
    TupleClassification out{tuple.gcd(), tuple.coprime(), true, {}};
    const auto gens = tuple.generators();
    if (gens.size() < 2) {
        return out;
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
        std::vector<Value> others;
        others.reserve(gens.size() - 1);
        for (std::size_t j = 0; j < gens.size(); ++j) {
            if (j != i) {
                others.push_back(gens[j]);
            }
        }
        const CountTable table = build_count_table(GeneratorTuple(others), 1, gens[i]);
        if (table[gens[i]] == 0) {
            continue;
        }
        out.reasonable = false;
        const auto partial = smallest_representation(others, gens[i]);
        std::vector<Value> coeffs(gens.size(), 0);
        for (std::size_t j = 0, k = 0; j < gens.size(); ++j) {
            if (j != i) {
                coeffs[j] = partial[k++];
            }
        }
        out.witnesses.push_back({gens[i], std::move(coeffs)});
    }
    return out;
}

} // namespace frobgen
