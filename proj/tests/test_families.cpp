#include <doctest.h>

#include <numeric>
#include <random>

#include "frobgen/errors.hpp"
#include "frobgen/families.hpp"
#include "frobgen/g_sequence.hpp"
#include "frobgen/tuples.hpp"

using namespace frobgen;

namespace {

FamilyCheckResult only(const std::vector<FamilyCheckResult>& rs) {
    REQUIRE(rs.size() == 1);
    return rs.front();
}

const FamilyCheckResult& find_claim(const std::vector<FamilyCheckResult>& rs, const std::string& claim) {
    for (const auto& r : rs) {
        if (r.claim == claim) {
            return r;
        }
    }
    FAIL("claim not found: " << claim);
    return rs.front();
}

} // namespace

TEST_CASE("family_thm1 substitution") {
    CHECK(family_thm1(5) == GeneratorTuple({8, 9, 10, 12, 15}));
    CHECK(family_thm1(6) == GeneratorTuple({10, 11, 12, 15, 18}));
    CHECK(family_thm1(10) == GeneratorTuple({18, 19, 20, 27, 30}));
    CHECK_THROWS_AS((void)family_thm1(4), DomainError);
    CHECK(family_thm1(4, Thm1Domain::lemmas) == GeneratorTuple({6, 7, 8, 9, 12}));
    CHECK_THROWS_AS((void)family_thm1(3, Thm1Domain::lemmas), DomainError);
}

TEST_CASE("verify_thm1 instances") {
    const auto a = only(verify_thm1({10, 10}, {1, 1}));
    CHECK(a.expected == 89);
    CHECK(a.status == CheckStatus::pass);
    CHECK(a.param("n") == Value{10});
    CHECK(a.param("k") == Value{1});

    const auto b = only(verify_thm1({6, 6}, {0, 0}));
    CHECK(b.expected == 19);
    CHECK(b.actual == Value{19});
    CHECK(b.status == CheckStatus::pass);

    const auto c = only(verify_thm1({9, 9}, {1, 1}));
    CHECK(c.status == CheckStatus::skipped);
    CHECK_FALSE(c.actual.has_value());

    // n = 6k+3 is outside what the theorem covers.
    CHECK(only(verify_thm1({15, 15}, {2, 2})).status == CheckStatus::skipped);
    CHECK(only(verify_thm1({5, 5}, {0, 0})).status == CheckStatus::skipped);
}

TEST_CASE("verify_thm1 sweep has no failures") {
    const auto rs = verify_thm1({5, 25}, {0, 3});
    const auto s = summarize(rs);
    CHECK(s.failed == 0);
    CHECK(s.passed > 0);
    CHECK(s.passed + s.skipped == rs.size());
}

TEST_CASE("theorem 1 gap between g_0 and g_k grows") {
    for (Value k = 1; k <= 3; ++k) {
        std::optional<Value> previous_gap;
        for (Value n = 6 * k + 4; n <= 30; ++n) {
            const auto seq = g_sequence(family_thm1(n), static_cast<std::size_t>(k));
            const Value gap = *seq[0] - *seq[static_cast<std::size_t>(k)];
            CHECK(gap == (n * n - 3 * n + 1) - ((6 * k + 3) * n - 1));
            if (previous_gap) {
                CHECK(gap > *previous_gap);
            }
            previous_gap = gap;
        }
    }
    // Where the closed forms cross for k = 1: n^2 - 3n + 1 > 9n - 1 from n = 12 on.
    CHECK(*g_sequence(family_thm1(11), 1)[0] < *g_sequence(family_thm1(11), 1)[1]);
    CHECK(*g_sequence(family_thm1(12), 1)[0] > *g_sequence(family_thm1(12), 1)[1]);
}

TEST_CASE("verify_lemma1 instances") {
    const auto a = only(verify_lemma1({4, 4}, {2, 2}));
    CHECK(a.comparison == Comparison::at_least);
    CHECK(a.actual == Value{42});
    CHECK(a.status == CheckStatus::pass);

    const auto b = only(verify_lemma1({10, 10}, {1, 1}));
    CHECK(b.comparison == Comparison::equal);
    CHECK(b.actual == Value{1});
    CHECK(b.status == CheckStatus::pass);

    const auto c = only(verify_lemma1({16, 16}, {2, 2}));
    CHECK(c.actual == Value{2});
    CHECK(c.status == CheckStatus::pass);

    CHECK(only(verify_lemma1({3, 3}, {1, 1})).status == CheckStatus::skipped);
    CHECK(only(verify_lemma1({10, 10}, {0, 0})).status == CheckStatus::skipped);
}

TEST_CASE("verify_lemma2 instances") {
    const auto a = only(verify_lemma2({5, 5}, {2, 2}));
    CHECK(a.expected == 3);
    CHECK(a.actual == Value{3});
    CHECK(a.status == CheckStatus::pass);

    const auto b = only(verify_lemma2({6, 6}, {4, 4}));
    CHECK(b.actual == Value{5});
    CHECK(b.status == CheckStatus::pass);

    CHECK(only(verify_lemma2({6, 6}, {3, 3})).status == CheckStatus::skipped);
    CHECK(only(verify_lemma2({3, 3}, {2, 2})).status == CheckStatus::skipped);
}

TEST_CASE("family_thm2 construction") {
    CHECK(family_thm2(8) == GeneratorTuple({9, 12, 13, 15, 16, 17, 19, 20}));
    CHECK(family_thm2(6) == GeneratorTuple({7, 10, 11, 13, 15, 16}));
    CHECK(family_thm2(7).size() == 7);
    CHECK_THROWS_AS((void)family_thm2(5), DomainError);
    for (Value n = 6; n <= 40; ++n) {
        CHECK(family_thm2(n).size() == static_cast<std::size_t>(n));
    }
}

TEST_CASE("verify_thm2 instances") {
    for (Value n : {6, 8, 20}) {
        const auto rs = verify_thm2({n, n});
        CAPTURE(n);
        CHECK(summarize(rs).passed == 4);
        CHECK(find_claim(rs, "g_0").actual == Value{2 * n + 7});
        CHECK(find_claim(rs, "g_1").actual == Value{2 * n + 6});
        CHECK(find_claim(rs, "reasonable").actual == Value{1});
    }
    CHECK(summarize(verify_thm2({5, 5})).skipped == 4);
}

TEST_CASE("family_coprime construction") {
    CHECK(family_coprime(1) == GeneratorTuple({9, 14, 19, 25, 29}));
    CHECK(family_coprime(2) == GeneratorTuple({19, 29, 39, 50, 59}));
    CHECK_THROWS_AS((void)family_coprime(0), DomainError);
    const auto t = family_coprime(1);
    for (std::size_t i = 0; i < t.size(); ++i) {
        for (std::size_t j = i + 1; j < t.size(); ++j) {
            CHECK(std::gcd(t[i], t[j]) == 1);
        }
    }
}

TEST_CASE("verify_coprime instances") {
    const auto rs = verify_coprime({1, 3});
    REQUIRE(rs.size() == 6);
    CHECK(rs[0].actual == Value{49});
    CHECK(rs[1].actual == Value{45});
    CHECK(rs[2].actual == Value{199});
    CHECK(rs[3].actual == Value{190});
    CHECK(rs[4].actual == Value{449});
    CHECK(rs[5].actual == Value{435});
    CHECK(summarize(rs).passed == 6);
}

TEST_CASE("pair_g formula") {
    CHECK(pair_g(2, 3, 0) == 1);
    CHECK(pair_g(4, 7, 1) == 45);
    CHECK(pair_g(9, 10, 3) == 341);
    CHECK_THROWS_AS((void)pair_g(4, 6, 0), DomainError);
    CHECK_THROWS_AS((void)pair_g(1, 6, 0), ValidationError);
    CHECK_THROWS_AS((void)pair_g(5, 5, 0), ValidationError);
    CHECK_THROWS_AS((void)pair_g(3, 5, -1), ValidationError);
}

TEST_CASE("verify_pair sweep") {
    const auto rs = verify_pair(4, 7, {0, 10});
    CHECK(rs.size() == 11);
    CHECK(summarize(rs).passed == 11);
    CHECK(rs[1].actual == Value{45});
    CHECK(rs[1].param("x2") == Value{7});
}

TEST_CASE("pair g-sequence matches the formula and strictly increases") {
    std::mt19937_64 rng(2718);
    std::uniform_int_distribution<Value> pick(2, 30);
    int tested = 0;
    while (tested < 50) {
        Value a = pick(rng);
        Value b = pick(rng);
        if (a == b || std::gcd(a, b) != 1) {
            continue;
        }
        ++tested;
        const auto seq = g_sequence(normalize(std::vector<Value>{a, b}), 8);
        CAPTURE(a);
        CAPTURE(b);
        for (std::size_t j = 0; j <= 8; ++j) {
            REQUIRE(seq[j].has_value());
            CHECK(*seq[j] == pair_g(a, b, static_cast<Value>(j)));
            if (j > 0) {
                CHECK(*seq[j] > *seq[j - 1]);
            }
        }
    }
}
