// Acceptance gate: every criterion is an exact integer check with a wall-clock
// budget. Prints one PASS/FAIL line per criterion; exits nonzero on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "frobgen/count_table.hpp"
#include "frobgen/families.hpp"
#include "frobgen/g_sequence.hpp"
#include "frobgen/oracle.hpp"
#include "frobgen/search.hpp"
#include "frobgen/tuples.hpp"

using namespace frobgen;

namespace {

// Collects the first few mismatches of a criterion.
class Failures {
public:
    void add(const std::string& what) {
        if (count_++ < 5) {
            detail_ += (detail_.empty() ? "" : "; ") + what;
        }
    }
    void expect(bool ok, const std::string& what) {
        if (!ok) {
            add(what);
        }
    }
    [[nodiscard]] bool ok() const { return count_ == 0; }
    [[nodiscard]] std::string detail() const {
        return count_ > 5 ? detail_ + "; ... (" + std::to_string(count_) + " total)" : detail_;
    }

private:
    std::size_t count_ = 0;
    std::string detail_;
};

struct Criterion {
    int id;
    std::string name;
    double limit_seconds;
    std::function<void(Failures&)> body;
};

std::string str(const std::optional<Value>& v) {
    return v ? std::to_string(*v) : "undefined";
}

GeneratorTuple random_coprime(std::mt19937_64& rng, std::size_t k, Value hi) {
    std::uniform_int_distribution<Value> pick(2, hi);
    for (;;) {
        std::vector<Value> v;
        while (v.size() < k) {
            const Value x = pick(rng);
            if (std::find(v.begin(), v.end(), x) == v.end()) {
                v.push_back(x);
            }
        }
        auto t = normalize(v);
        if (t.coprime()) {
            return t;
        }
    }
}

void expect_all_pass(Failures& f, const std::vector<FamilyCheckResult>& rs, std::size_t expected_passes) {
    std::size_t passes = 0;
    for (const auto& r : rs) {
        if (r.status == CheckStatus::pass) {
            ++passes;
        } else if (r.status == CheckStatus::fail) {
            std::ostringstream os;
            os << r.family << " " << r.claim;
            for (const auto& [name, value] : r.parameters) {
                os << " " << name << "=" << value;
            }
            os << ": expected " << r.expected << " got " << str(r.actual);
            f.add(os.str());
        }
    }
    f.expect(passes == expected_passes,
             "passed " + std::to_string(passes) + " of " + std::to_string(expected_passes) + " required checks");
}

void golden_values(Failures& f) {
    struct Golden {
        std::vector<Value> gens;
        std::size_t j;
        Value expected;
    };
    const std::vector<Golden> goldens{
        {{6, 9, 20}, 0, 43},         {{4, 7, 19}, 35, 181},      {{4, 7, 19}, 36, 180},
        {{8, 9, 11, 14, 15}, 0, 21}, {{8, 9, 11, 14, 15}, 1, 20}, {{4, 5, 8, 10}, 0, 11},
        {{4, 5, 8, 10}, 1, 9},       {{9, 10, 11, 13, 17}, 0, 25}, {{9, 10, 11, 13, 17}, 1, 24},
        {{10, 15, 32, 48}, 0, 101},  {{10, 15, 32, 48}, 1, 99},   {{8, 9, 15}, 14, 172},
        {{8, 9, 15}, 15, 169},
    };
    for (const auto& g : goldens) {
        const auto start = std::chrono::steady_clock::now();
        const auto tuple = normalize(g.gens);
        const auto value = g_sequence(tuple, g.j)[g.j];
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const std::string label = "g_" + std::to_string(g.j) + "(" + tuple.to_string() + ")";
        f.expect(value == g.expected, label + " = " + str(value) + ", expected " + std::to_string(g.expected));
        f.expect(secs < 1.0, label + " took " + std::to_string(secs) + " s");
    }
}

void theorem1_sweep(Failures& f) {
    std::size_t required = 0;
    for (Value n = 6; n <= 40; ++n) {
        ++required;
        for (Value k = 1; k <= 4; ++k) {
            required += n >= 6 * k + 4 ? 1 : 0;
        }
    }
    expect_all_pass(f, verify_thm1({6, 40}, {0, 4}), required);
}

void lemma1_sweep(Failures& f) {
    const auto rs = verify_lemma1({4, 40}, {1, 4});
    for (const auto& r : rs) {
        const Value n = *r.param("n");
        const Value k = *r.param("k");
        const Comparison want = n > 6 * k + 3 ? Comparison::equal : Comparison::at_least;
        f.expect(r.comparison == want, "wrong relation at n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
    expect_all_pass(f, rs, 37 * 4);
}

void lemma2_sweep(Failures& f) {
    for (Value n = 4; n <= 30; ++n) {
        // k = 3 comes back as skipped; everything else in {2} u [4, n] must pass.
        expect_all_pass(f, verify_lemma2({n, n}, {2, n}), static_cast<std::size_t>(1 + (n - 3)));
    }
}

void theorem2_sweep(Failures& f) {
    expect_all_pass(f, verify_thm2({6, 30}), 25 * 4);
}

void coprime_sweep(Failures& f) {
    expect_all_pass(f, verify_coprime({1, 8}), 16);
}

void pair_property(Failures& f) {
    std::mt19937_64 rng(0x9a1f);
    std::uniform_int_distribution<Value> pick(2, 30);
    int pairs = 0;
    while (pairs < 50) {
        Value a = pick(rng);
        Value b = pick(rng);
        if (a >= b || std::gcd(a, b) != 1) {
            continue;
        }
        ++pairs;
        const auto seq = g_sequence(GeneratorTuple({a, b}), 8);
        for (std::size_t j = 0; j <= 8; ++j) {
            const Value formula = (static_cast<Value>(j) + 1) * a * b - a - b;
            const std::string label = "g_" + std::to_string(j) + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
            f.expect(seq[j] == formula, label + " = " + str(seq[j]) + ", formula " + std::to_string(formula));
            if (j > 0 && seq[j] && seq[j - 1]) {
                f.expect(*seq[j] > *seq[j - 1], label + " not above g_" + std::to_string(j - 1));
            }
        }
    }
}

void oracle_equivalence(Failures& f) {
    std::mt19937_64 rng(0x0c0ffee);
    std::uniform_int_distribution<std::size_t> size(2, 6);
    for (int i = 0; i < 100; ++i) {
        const auto tuple = random_coprime(rng, size(rng), 50);
        const auto table = build_count_table(tuple, ~Count{0}, 500);
        for (Value t = 0; t <= 500; ++t) {
            const Count brute = oracle::brute_count(tuple, t).count;
            f.expect(table[t] < ~Count{0}, "saturated at t=" + std::to_string(t));
            f.expect(table[t] == brute, "{" + tuple.to_string() + "} t=" + std::to_string(t) + ": dp " +
                                            std::to_string(table[t]) + " oracle " + std::to_string(brute));
        }
        // Spot-check the checked exact path against the same oracle.
        f.expect(rep_count_exact(tuple, 500) == oracle::brute_count(tuple, 500).count,
                 "rep_count_exact disagrees for {" + tuple.to_string() + "}");
    }
}

void conjecture_scan(Failures& f) {
    const auto r = scan(3, 60, 15);
    f.expect(r.errors == 0, std::to_string(r.errors) + " tuples failed");
    f.expect(r.min_inversion_index == std::size_t{14},
             "least inversion index " + (r.min_inversion_index ? std::to_string(*r.min_inversion_index) : "none"));
    const bool witnessed = std::any_of(r.witnesses.begin(), r.witnesses.end(), [](const auto& w) {
        return w.tuple == GeneratorTuple({8, 9, 15}) && w.index == 14 && w.g_i == 172 && w.g_next == 169;
    });
    f.expect(witnessed, "{8,9,15} not among the witnesses");
    std::printf("     %zu triples scanned, %zu witnesses at the least index\n", r.tuples_scanned, r.witnesses.size());
}

void quadruple_minimality(Failures& f) {
    const auto r = scan(4, 48, 1);
    f.expect(r.errors == 0, std::to_string(r.errors) + " tuples failed");
    f.expect(r.min_inversion_index == std::size_t{0}, "no inversion at index 0");
    const bool witnessed = std::any_of(r.witnesses.begin(), r.witnesses.end(), [](const auto& w) {
        return w.tuple == GeneratorTuple({10, 15, 32, 48}) && w.g_i == 101 && w.g_next == 99;
    });
    f.expect(witnessed, "{10,15,32,48} not among the witnesses");
    for (const auto& w : r.witnesses) {
        f.expect(w.tuple.max() >= 48, "smaller witness {" + w.tuple.to_string() + "}");
    }
    std::printf("     %zu quadruples scanned, %zu witnesses at index 0\n", r.tuples_scanned, r.witnesses.size());
}

void certificate_soundness(Failures& f) {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> size(2, 6);
    std::uniform_int_distribution<std::size_t> jdist(0, 20);
    for (int i = 0; i < 25; ++i) {
        const auto tuple = random_coprime(rng, size(rng), 60);
        const std::size_t j_max = jdist(rng);
        const auto seq = g_sequence(tuple, j_max);
        const Value w = seq.certified_window_start();
        const Value extended = 2 * seq.certified_window_end();
        const auto table = build_count_table(tuple, j_max + 2, extended);
        for (Value t = w + 1; t <= extended; ++t) {
            f.expect(table[t] >= j_max + 1, "{" + tuple.to_string() + "} j_max=" + std::to_string(j_max) +
                                                ": t=" + std::to_string(t) + " below threshold past W=" +
                                                std::to_string(w));
        }
    }
}

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "golden values", 1.0 * 13, golden_values},
        {2, "theorem 1 sweep", 30, theorem1_sweep},
        {3, "lemma 1 sweep", 30, lemma1_sweep},
        {4, "lemma 2 sweep", 10, lemma2_sweep},
        {5, "theorem 2 sweep", 30, theorem2_sweep},
        {6, "coprime family sweep", 60, coprime_sweep},
        {7, "pair formula property", 30, pair_property},
        {8, "oracle equivalence", 60, oracle_equivalence},
        {9, "triple scan, max element 60, f(3) evidence", 600, conjecture_scan},
        {10, "quadruple minimality, max element 48", 300, quadruple_minimality},
        {11, "certificate soundness", 60, certificate_soundness},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        Failures f;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.body(f);
        } catch (const std::exception& e) {
            f.add(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        f.expect(secs < c.limit_seconds, "exceeded time limit");
        const bool pass = f.ok();
        failed += pass ? 0 : 1;
        std::printf("[%s] AC%-2d %-45s %8.3f s (limit %g s)%s%s\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(), secs,
                    c.limit_seconds, pass ? "" : "  ", pass ? "" : f.detail().c_str());
        std::fflush(stdout);
    }
    std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
    return failed == 0 ? 0 : 1;
}
