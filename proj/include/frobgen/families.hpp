#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "frobgen/generator_tuple.hpp"

namespace frobgen {

/// Inclusive integer range, written `lo..hi` on the command line.
struct IntRange {
    Value lo;
    Value hi;

    [[nodiscard]] bool empty() const noexcept { return hi < lo; }
    friend bool operator==(const IntRange&, const IntRange&) = default;
};

enum class CheckStatus { pass, fail, skipped };
enum class Comparison { equal, at_least };

/// One instance of a closed-form claim checked against the engine.
///
/// Parameters that violate the claim's hypotheses are `skipped`, never
/// `fail`. A check whose engine value is undefined always fails.
struct FamilyCheckResult {
    std::string family;
    std::string claim;
    /// Named parameters in order, e.g. {{"n", 10}, {"k", 1}}.
    std::vector<std::pair<std::string, Value>> parameters;
    Value expected = 0;
    std::optional<Value> actual;
    Comparison comparison = Comparison::equal;
    CheckStatus status = CheckStatus::skipped;
    std::string note;

    /// Value of a named parameter; std::nullopt if absent.
    [[nodiscard]] std::optional<Value> param(std::string_view name) const;
};

struct VerificationSummary {
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
};

[[nodiscard]] VerificationSummary summarize(std::span<const FamilyCheckResult> results);
[[nodiscard]] const char* to_string(CheckStatus status) noexcept;

enum class Thm1Domain {
    theorem, ///< n >= 5: distinct and reasonable
    lemmas,  ///< n >= 4: distinct only; the lemmas are stated from n = 4
};

/// {2n-2, 2n-1, 2n, 3n-3, 3n}. DomainError below the domain's minimum n.
[[nodiscard]] GeneratorTuple family_thm1(Value n, Thm1Domain domain = Thm1Domain::theorem);

/// g_0 = n^2-3n+1 for n >= 6 and g_k = (6k+3)n-1 for k >= 1, n > 6k+3.
/// k = 0 in `ks` selects the g_0 claim.
[[nodiscard]] std::vector<FamilyCheckResult> verify_thm1(IntRange ns, IntRange ks);

/// Exact R((6k+3)n-1): at least k for n >= 4, exactly k for n > 6k+3.
[[nodiscard]] std::vector<FamilyCheckResult> verify_lemma1(IntRange ns, IntRange ks);

/// Every t in [k(n-1), kn] representable, for k = 2 or k >= 4 and n >= 4.
/// The result reports how many of the k+1 values are representable.
[[nodiscard]] std::vector<FamilyCheckResult> verify_lemma2(IntRange ns, IntRange ks);

/// (n+1, n+4, n+5, [n+7..2n+1], 2n+3, 2n+4), cardinality n, for n >= 6.
[[nodiscard]] GeneratorTuple family_thm2(Value n);

/// Cardinality n, reasonable, g_0 = 2n+7, g_1 = 2n+6.
[[nodiscard]] std::vector<FamilyCheckResult> verify_thm2(IntRange ns);

/// {10n-1, 15n-1, 20n-1, 25n, 30n-1} for n >= 1.
[[nodiscard]] GeneratorTuple family_coprime(Value n);

/// g_0 = 50n^2-1 and g_1 = 50n^2-5n.
[[nodiscard]] std::vector<FamilyCheckResult> verify_coprime(IntRange ns);

/// (j+1)*x1*x2 - x1 - x2 for distinct coprime x1, x2 >= 2.
[[nodiscard]] Value pair_g(Value x1, Value x2, Value j);

[[nodiscard]] std::vector<FamilyCheckResult> verify_pair(Value x1, Value x2, IntRange js);

} // namespace frobgen
