#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace frobgen {

using Value = std::int64_t;

/// Strictly increasing list of positive generators with its gcd cached.
///
/// Construction validates the ordering; use `normalize()` (tuples.hpp) to
/// build one from unsorted user input.
class GeneratorTuple {
public:
    /// Throws ValidationError unless `sorted` is non-empty, positive and
    /// strictly increasing.
    explicit GeneratorTuple(std::vector<Value> sorted);

    [[nodiscard]] std::span<const Value> generators() const noexcept { return generators_; }
    [[nodiscard]] std::size_t size() const noexcept { return generators_.size(); }
    [[nodiscard]] Value gcd() const noexcept { return gcd_; }
    [[nodiscard]] Value min() const noexcept { return generators_.front(); }
    [[nodiscard]] Value max() const noexcept { return generators_.back(); }
    [[nodiscard]] bool coprime() const noexcept { return gcd_ == 1; }
    [[nodiscard]] bool contains(Value x) const noexcept;
    [[nodiscard]] Value operator[](std::size_t i) const noexcept { return generators_[i]; }

    /// "8,9,15"
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const GeneratorTuple&, const GeneratorTuple&) = default;
    friend auto operator<=>(const GeneratorTuple& a, const GeneratorTuple& b) {
        return a.generators_ <=> b.generators_;
    }

private:
    std::vector<Value> generators_;
    Value gcd_ = 1;
};

} // namespace frobgen
