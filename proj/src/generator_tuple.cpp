#include "frobgen/generator_tuple.hpp"

#include <algorithm>
#include <numeric>

#include "frobgen/errors.hpp"

namespace frobgen {

GeneratorTuple::GeneratorTuple(std::vector<Value> sorted) : generators_(std::move(sorted)) {
    if (generators_.empty()) {
        throw ValidationError("generator tuple must not be empty");
    }
    if (generators_.front() < 1) {
        throw ValidationError("generators must be positive");
    }
    if (std::adjacent_find(generators_.begin(), generators_.end(),
                           [](Value a, Value b) { return a >= b; }) != generators_.end()) {
        throw ValidationError("generators must be strictly increasing");
    }
    gcd_ = 0;
    for (Value x : generators_) {
        gcd_ = std::gcd(gcd_, x);
    }
}

bool GeneratorTuple::contains(Value x) const noexcept {
    return std::binary_search(generators_.begin(), generators_.end(), x);
}

std::string GeneratorTuple::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (i != 0) {
            out += ',';
        }
        out += std::to_string(generators_[i]);
    }
    return out;
}

} // namespace frobgen
