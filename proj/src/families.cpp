#include "frobgen/families.hpp"

#include <algorithm>
#include <numeric>

#include "frobgen/count_table.hpp"
#include "frobgen/errors.hpp"
#include "frobgen/g_sequence.hpp"
#include "frobgen/tuples.hpp"

namespace frobgen {
namespace {

using Params = std::vector<std::pair<std::string, Value>>;

Params nk(Value n, std::optional<Value> k) {
    Params p{{"n", n}};
    if (k) {
        p.emplace_back("k", *k);
    }
    return p;
}

FamilyCheckResult skipped(std::string family, std::string claim, Params params, std::string note) {
    FamilyCheckResult r;
    r.family = std::move(family);
    r.claim = std::move(claim);
    r.parameters = std::move(params);
    r.status = CheckStatus::skipped;
    r.note = std::move(note);
    return r;
}

FamilyCheckResult checked(std::string family, std::string claim, Params params, Value expected, std::optional<Value> actual,
                          Comparison cmp = Comparison::equal) {
    FamilyCheckResult r;
    r.family = std::move(family);
    r.claim = std::move(claim);
    r.parameters = std::move(params);
    r.expected = expected;
    r.actual = actual;
    r.comparison = cmp;
    if (!actual) {
        r.status = CheckStatus::fail;
        r.note = "engine value undefined";
    } else if (cmp == Comparison::equal) {
        r.status = *actual == expected ? CheckStatus::pass : CheckStatus::fail;
    } else {
        r.status = *actual >= expected ? CheckStatus::pass : CheckStatus::fail;
    }
    return r;
}

std::optional<Value> as_value(Count c) {
    return static_cast<Value>(c);
}

} // namespace

std::optional<Value> FamilyCheckResult::param(std::string_view name) const {
    for (const auto& [key, value] : parameters) {
        if (key == name) {
            return value;
        }
    }
    return std::nullopt;
}

VerificationSummary summarize(std::span<const FamilyCheckResult> results) {
    VerificationSummary s;
    for (const auto& r : results) {
        switch (r.status) {
        case CheckStatus::pass: ++s.passed; break;
        case CheckStatus::fail: ++s.failed; break;
        case CheckStatus::skipped: ++s.skipped; break;
        }
    }
    return s;
}

const char* to_string(CheckStatus status) noexcept {
    switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
    }
    return "?";
}

GeneratorTuple family_thm1(Value n, Thm1Domain domain) {
    const Value least = domain == Thm1Domain::theorem ? 5 : 4;
    if (n < least) {
        throw DomainError("family {2n-2,2n-1,2n,3n-3,3n} requires n >= " + std::to_string(least));
    }
    return GeneratorTuple({2 * n - 2, 2 * n - 1, 2 * n, 3 * n - 3, 3 * n});
}

std::vector<FamilyCheckResult> verify_thm1(IntRange ns, IntRange ks) {
    std::vector<FamilyCheckResult> out;
    for (Value n = ns.lo; n <= ns.hi; ++n) {
        auto admissible = [n](Value k) { return k == 0 ? n >= 6 : (k >= 1 && n > 6 * k + 3); };
        Value j_max = -1;
        for (Value k = ks.lo; k <= ks.hi; ++k) {
            if (admissible(k)) {
                j_max = std::max(j_max, k);
            }
        }
        std::optional<GSequence> seq;
        if (j_max >= 0) {
            seq = g_sequence(family_thm1(n), static_cast<std::size_t>(j_max));
        }
        for (Value k = ks.lo; k <= ks.hi; ++k) {
            const std::string claim = k == 0 ? "g_0" : "g_k";
            if (k < 0) {
                out.push_back(skipped("thm1", claim, nk(n, k), "k must be non-negative"));
            } else if (!admissible(k)) {
                out.push_back(skipped("thm1", claim, nk(n, k),
                                      k == 0 ? "outside hypothesis n >= 6"
                                             : "outside hypothesis n > 6k+3"));
            } else {
                const Value expected = k == 0 ? n * n - 3 * n + 1 : (6 * k + 3) * n - 1;
                out.push_back(checked("thm1", claim, nk(n, k), expected,
                                      (*seq)[static_cast<std::size_t>(k)]));
            }
        }
    }
    return out;
}

std::vector<FamilyCheckResult> verify_lemma1(IntRange ns, IntRange ks) {
    std::vector<FamilyCheckResult> out;
    for (Value n = ns.lo; n <= ns.hi; ++n) {
        for (Value k = ks.lo; k <= ks.hi; ++k) {
            if (k < 1) {
                out.push_back(skipped("lemma1", "R", nk(n, k), "outside hypothesis k >= 1"));
                continue;
            }
            if (n < 4) {
                out.push_back(skipped("lemma1", "R", nk(n, k), "outside hypothesis n >= 4"));
                continue;
            }
            const Value target = (6 * k + 3) * n - 1;
            const Count r = rep_count_exact(family_thm1(n, Thm1Domain::lemmas), target);
            if (n > 6 * k + 3) {
                out.push_back(checked("lemma1", "R=k", nk(n, k), k, as_value(r)));
            } else {
                out.push_back(checked("lemma1", "R>=k", nk(n, k), k, as_value(r), Comparison::at_least));
            }
        }
    }
    return out;
}

std::vector<FamilyCheckResult> verify_lemma2(IntRange ns, IntRange ks) {
    std::vector<FamilyCheckResult> out;
    for (Value n = ns.lo; n <= ns.hi; ++n) {
        auto admissible = [](Value k) { return k == 2 || k >= 4; };
        Value top = -1;
        for (Value k = ks.lo; k <= ks.hi; ++k) {
            if (admissible(k)) {
                top = std::max(top, k);
            }
        }
        std::optional<CountTable> table;
        if (n >= 4 && top >= 0) {
            table = build_count_table(family_thm1(n, Thm1Domain::lemmas), 1, top * n);
        }
        for (Value k = ks.lo; k <= ks.hi; ++k) {
            if (!admissible(k)) {
                out.push_back(skipped("lemma2", "representable", nk(n, k),
                                      "outside hypothesis k = 2 or k >= 4"));
                continue;
            }
            if (n < 4) {
                out.push_back(skipped("lemma2", "representable", nk(n, k), "outside hypothesis n >= 4"));
                continue;
            }
            Value hits = 0;
            for (Value t = k * (n - 1); t <= k * n; ++t) {
                hits += (*table)[t] > 0 ? 1 : 0;
            }
            out.push_back(checked("lemma2", "representable", nk(n, k), k + 1, hits));
        }
    }
    return out;
}

GeneratorTuple family_thm2(Value n) {
    if (n < 6) {
        throw DomainError("family (n+1, n+4, n+5, [n+7..2n+1], 2n+3, 2n+4) requires n >= 6");
    }
    std::vector<Value> gens{n + 1, n + 4, n + 5};
    for (Value x = n + 7; x <= 2 * n + 1; ++x) {
        gens.push_back(x);
    }
    gens.push_back(2 * n + 3);
    gens.push_back(2 * n + 4);
    return GeneratorTuple(std::move(gens));
}

std::vector<FamilyCheckResult> verify_thm2(IntRange ns) {
    std::vector<FamilyCheckResult> out;
    for (Value n = ns.lo; n <= ns.hi; ++n) {
        if (n < 6) {
            for (const char* claim : {"cardinality", "reasonable", "g_0", "g_1"}) {
                out.push_back(skipped("thm2", claim, nk(n, std::nullopt), "outside hypothesis n >= 6"));
            }
            continue;
        }
        const GeneratorTuple tuple = family_thm2(n);
        const GSequence seq = g_sequence(tuple, 1);
        out.push_back(checked("thm2", "cardinality", nk(n, std::nullopt), n, static_cast<Value>(tuple.size())));
        out.push_back(checked("thm2", "reasonable", nk(n, std::nullopt), 1, classify(tuple).reasonable ? 1 : 0));
        out.push_back(checked("thm2", "g_0", nk(n, std::nullopt), 2 * n + 7, seq[0]));
        out.push_back(checked("thm2", "g_1", nk(n, std::nullopt), 2 * n + 6, seq[1]));
    }
    return out;
}

GeneratorTuple family_coprime(Value n) {
    if (n < 1) {
        throw DomainError("family {10n-1, 15n-1, 20n-1, 25n, 30n-1} requires n >= 1");
    }
    return GeneratorTuple({10 * n - 1, 15 * n - 1, 20 * n - 1, 25 * n, 30 * n - 1});
}

std::vector<FamilyCheckResult> verify_coprime(IntRange ns) {
    std::vector<FamilyCheckResult> out;
    for (Value n = ns.lo; n <= ns.hi; ++n) {
        if (n < 1) {
            out.push_back(skipped("coprime", "g_0", nk(n, std::nullopt), "outside hypothesis n >= 1"));
            out.push_back(skipped("coprime", "g_1", nk(n, std::nullopt), "outside hypothesis n >= 1"));
            continue;
        }
        const GSequence seq = g_sequence(family_coprime(n), 1);
        out.push_back(checked("coprime", "g_0", nk(n, std::nullopt), 50 * n * n - 1, seq[0]));
        out.push_back(checked("coprime", "g_1", nk(n, std::nullopt), 50 * n * n - 5 * n, seq[1]));
    }
    return out;
}

Value pair_g(Value x1, Value x2, Value j) {
    if (x1 < 2 || x2 < 2 || x1 == x2) {
        throw ValidationError("pair formula needs distinct generators >= 2");
    }
    if (j < 0) {
        throw ValidationError("pair formula needs j >= 0");
    }
    if (std::gcd(x1, x2) != 1) {
        throw DomainError("pair formula needs gcd(x1, x2) = 1");
    }
    Value prod = 0;
    if (__builtin_mul_overflow(x1, x2, &prod) || __builtin_mul_overflow(prod, j + 1, &prod)) {
        throw ArithmeticOverflowError("pair formula overflows 64 bits");
    }
    return prod - x1 - x2;
}

std::vector<FamilyCheckResult> verify_pair(Value x1, Value x2, IntRange js) {
    (void)pair_g(x1, x2, 0);
    std::vector<FamilyCheckResult> out;
    std::optional<GSequence> seq;
    if (js.hi >= 0) {
        const std::vector<Value> raw{x1, x2};
        seq = g_sequence(normalize(raw), static_cast<std::size_t>(js.hi));
    }
    for (Value j = js.lo; j <= js.hi; ++j) {
        if (j < 0) {
            out.push_back(skipped("pair", "g_j", Params{{"x1", x1}, {"x2", x2}, {"j", j}}, "j must be non-negative"));
            continue;
        }
        out.push_back(checked("pair", "g_j", Params{{"x1", x1}, {"x2", x2}, {"j", j}}, pair_g(x1, x2, j), (*seq)[static_cast<std::size_t>(j)]));
    }
    return out;
}

} // namespace frobgen
