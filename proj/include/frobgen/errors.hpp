#pragma once

#include <stdexcept>
#include <string>

namespace frobgen {

/// Malformed input: duplicates, non-positive generators, bad ranges.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Mathematically undefined request, e.g. g_j of a tuple with gcd > 1.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Exact count no longer fits the count type.
class ArithmeticOverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// A table or search would exceed what we are willing to allocate.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace frobgen
