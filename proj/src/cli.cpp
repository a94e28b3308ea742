#include "frobgen/cli.hpp"

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "frobgen/count_table.hpp"
#include "frobgen/errors.hpp"
#include "frobgen/g_sequence.hpp"
#include "frobgen/search.hpp"
#include "frobgen/tuples.hpp"

namespace frobgen::cli {
namespace {

using Json = nlohmann::ordered_json;

enum class Format { human, json, csv };

Value parse_value(std::string_view s, const char* what) {
    Value v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw ValidationError(std::string("bad ") + what + " '" + std::string(s) + "'");
    }
    return v;
}

Json tuple_json(const GeneratorTuple& t) {
    return Json(std::vector<Value>(t.generators().begin(), t.generators().end()));
}

Json optional_json(const std::optional<Value>& v) {
    return v ? Json(*v) : Json(nullptr);
}

std::string optional_text(const std::optional<Value>& v) {
    return v ? std::to_string(*v) : std::string("undefined");
}

// A command fills `input` and `result` for the envelope and writes its
// human and CSV renderings on demand.
struct Outcome {
    Json input = Json::object();
    Json result = Json::object();
    std::string human;
    std::optional<std::string> csv;
    int exit_code = exit_ok;
};

struct GlobalOptions {
    std::string format = "human";
    bool no_timing = false;
};

Outcome do_count(const std::string& gens, Value t) {
    const GeneratorTuple tuple = normalize(parse_generator_list(gens));
    if (t < 0) {
        throw ValidationError("target t must be non-negative");
    }
    const Count r = rep_count_exact(tuple, t);
    Outcome o;
    o.input = {{"generators", tuple_json(tuple)}, {"t", t}};
    o.result = {{"tuple", tuple_json(tuple)}, {"t", t}, {"count", r}};
    o.human = "R(" + std::to_string(t) + ") over {" + tuple.to_string() + "} = " + std::to_string(r) + "\n";
    return o;
}

Outcome do_gseq(const std::string& gens, Value j_max) {
    const GeneratorTuple tuple = normalize(parse_generator_list(gens));
    if (j_max < 0) {
        throw ValidationError("j_max must be non-negative");
    }
    const GSequence seq = g_sequence(tuple, static_cast<std::size_t>(j_max));
    Outcome o;
    o.input = {{"generators", tuple_json(tuple)}, {"j_max", j_max}};
    Json values = Json::array();
    std::ostringstream human;
    std::ostringstream csv;
    human << "tuple {" << tuple.to_string() << "}, certified window ends at " << seq.certified_window_end() << "\n";
    csv << "j,g_j\n";
    for (std::size_t j = 0; j < seq.values().size(); ++j) {
        values.push_back(optional_json(seq[j]));
        human << "g_" << j << " = " << optional_text(seq[j]) << "\n";
        csv << j << ',' << (seq[j] ? std::to_string(*seq[j]) : std::string()) << "\n";
    }
    o.result = {{"tuple", tuple_json(tuple)},
                {"j_max", j_max},
                {"values", values},
                {"certified_window_start", seq.certified_window_start()}};
    o.human = human.str();
    o.csv = csv.str();
    return o;
}

Outcome do_classify(const std::string& gens) {
    const GeneratorTuple tuple = normalize(parse_generator_list(gens));
    const TupleClassification c = classify(tuple);
    Outcome o;
    o.input = {{"generators", tuple_json(tuple)}};
    Json witnesses = Json::array();
    std::ostringstream human;
    human << "tuple {" << tuple.to_string() << "}: gcd " << c.gcd << (c.coprime ? ", coprime" : ", not coprime")
          << (c.reasonable ? ", reasonable" : ", unreasonable") << "\n";
    for (const auto& w : c.witnesses) {
        witnesses.push_back({{"element", w.element}, {"coefficients", w.coefficients}});
        human << "  " << w.element << " =";
        bool first = true;
        for (std::size_t i = 0; i < w.coefficients.size(); ++i) {
            if (w.coefficients[i] == 0) {
                continue;
            }
            human << (first ? " " : " + ") << w.coefficients[i] << "*" << tuple[i];
            first = false;
        }
        human << "\n";
    }
    o.result = {{"tuple", tuple_json(tuple)},
                {"gcd", c.gcd},
                {"coprime", c.coprime},
                {"reasonable", c.reasonable},
                {"witnesses", witnesses}};
    o.human = human.str();
    return o;
}

struct VerifyArgs {
    std::string family;
    std::optional<std::string> n;
    std::optional<std::string> k;
    std::optional<std::string> j;
    std::optional<Value> x1;
    std::optional<Value> x2;
};

Outcome do_verify(const VerifyArgs& a) {
    auto range_or = [](const std::optional<std::string>& text, IntRange fallback) {
        return text ? parse_range(*text) : fallback;
    };
    std::vector<FamilyCheckResult> results;
    Outcome o;
    o.input = {{"family", a.family}};
    if (a.family == "thm1") {
        const auto ns = range_or(a.n, {6, 40});
        const auto ks = range_or(a.k, {0, 4});
        o.input["n"] = {ns.lo, ns.hi};
        o.input["k"] = {ks.lo, ks.hi};
        results = verify_thm1(ns, ks);
    } else if (a.family == "lemma1") {
        const auto ns = range_or(a.n, {4, 40});
        const auto ks = range_or(a.k, {1, 4});
        o.input["n"] = {ns.lo, ns.hi};
        o.input["k"] = {ks.lo, ks.hi};
        results = verify_lemma1(ns, ks);
    } else if (a.family == "lemma2") {
        const auto ns = range_or(a.n, {4, 30});
        const auto ks = range_or(a.k, {2, 10});
        o.input["n"] = {ns.lo, ns.hi};
        o.input["k"] = {ks.lo, ks.hi};
        results = verify_lemma2(ns, ks);
    } else if (a.family == "thm2") {
        const auto ns = range_or(a.n, {6, 30});
        o.input["n"] = {ns.lo, ns.hi};
        results = verify_thm2(ns);
    } else if (a.family == "coprime") {
        const auto ns = range_or(a.n, {1, 8});
        o.input["n"] = {ns.lo, ns.hi};
        results = verify_coprime(ns);
    } else if (a.family == "pair") {
        if (!a.x1 || !a.x2) {
            throw ValidationError("verify pair needs --x1 and --x2");
        }
        const auto js = range_or(a.j, {0, 8});
        o.input["x1"] = *a.x1;
        o.input["x2"] = *a.x2;
        o.input["j"] = {js.lo, js.hi};
        results = verify_pair(*a.x1, *a.x2, js);
    } else {
        throw ValidationError("unknown family '" + a.family +
                              "' (expected thm1, lemma1, lemma2, thm2, coprime or pair)");
    }

    const VerificationSummary summary = summarize(results);
    Json rows = Json::array();
    std::ostringstream human;
    std::ostringstream csv;
    csv << "family,claim,parameters,expected,actual,comparison,status,note\n";
    for (const auto& r : results) {
        Json params = Json::object();
        std::string param_text;
        for (const auto& [name, value] : r.parameters) {
            params[name] = value;
            param_text += (param_text.empty() ? "" : " ") + name + "=" + std::to_string(value);
        }
        const char* cmp = r.comparison == Comparison::equal ? "==" : ">=";
        const bool has_expectation = r.status != CheckStatus::skipped;
        rows.push_back({{"claim", r.claim},
                        {"parameters", params},
                        {"expected", has_expectation ? Json(r.expected) : Json(nullptr)},
                        {"actual", optional_json(r.actual)},
                        {"comparison", cmp},
                        {"status", to_string(r.status)},
                        {"note", r.note}});
        human << std::left << std::setw(8) << to_string(r.status) << r.family << " " << std::setw(14) << r.claim
              << std::setw(18) << param_text;
        if (has_expectation) {
            human << "actual " << optional_text(r.actual) << " " << cmp << " expected " << r.expected;
        }
        if (!r.note.empty()) {
            human << (has_expectation ? " (" : "(") << r.note << ")";
        }
        human << "\n";
        csv << r.family << ',' << r.claim << ',' << param_text << ','
            << (has_expectation ? std::to_string(r.expected) : "") << ',' << (r.actual ? std::to_string(*r.actual) : "")
            << ',' << cmp << ',' << to_string(r.status) << ',' << r.note << "\n";
    }
    human << summary.passed << " passed, " << summary.failed << " failed, " << summary.skipped << " skipped\n";
    o.result = {{"family", a.family},
                {"results", rows},
                {"summary", {{"passed", summary.passed}, {"failed", summary.failed}, {"skipped", summary.skipped}}}};
    o.human = human.str();
    o.csv = csv.str();
    o.exit_code = summary.failed == 0 ? exit_ok : exit_checks_failed;
    return o;
}

struct ScanArgs {
    Value k = 0;
    Value max_element = 0;
    Value j_max = 15;
    std::optional<std::size_t> threads;
    std::optional<std::string> checkpoint;
    std::optional<std::string> shard;
};

std::size_t thread_count(const std::optional<std::size_t>& flag) {
    if (flag) {
        return *flag;
    }
    if (const char* env = std::getenv("FROBGEN_THREADS"); env && *env) {
        const Value v = parse_value(env, "FROBGEN_THREADS");
        if (v < 0) {
            throw ValidationError("FROBGEN_THREADS must be non-negative");
        }
        return static_cast<std::size_t>(v);
    }
    return 0;
}

Outcome do_scan(const ScanArgs& a) {
    if (a.k < 2 || a.j_max < 0) {
        throw ValidationError("scan needs k >= 2 and j_max >= 0");
    }
    ScanOptions options;
    options.threads = thread_count(a.threads);
    if (a.checkpoint) {
        options.checkpoint = *a.checkpoint;
    }
    if (a.shard) {
        const auto slash = a.shard->find('/');
        if (slash == std::string::npos) {
            throw ValidationError("--shard expects OFFSET/STRIDE");
        }
        const Value offset = parse_value(std::string_view(*a.shard).substr(0, slash), "shard offset");
        const Value stride = parse_value(std::string_view(*a.shard).substr(slash + 1), "shard stride");
        if (offset < 0 || stride < 1 || offset >= stride) {
            throw ValidationError("--shard expects 0 <= OFFSET < STRIDE");
        }
        options.shard_offset = static_cast<std::size_t>(offset);
        options.shard_stride = static_cast<std::size_t>(stride);
    }
    const ScanReport report =
        scan(static_cast<std::size_t>(a.k), a.max_element, static_cast<std::size_t>(a.j_max), options);

    Outcome o;
    o.input = {{"k", a.k}, {"max_element", a.max_element}, {"j_max", a.j_max}};
    if (a.shard) {
        o.input["shard"] = *a.shard;
    }
    Json witnesses = Json::array();
    std::ostringstream human;
    human << "scanned " << report.tuples_scanned << " reasonable coprime " << report.k
          << "-tuples with max element <= " << report.max_element << ", i <= " << report.j_max << "\n";
    if (report.min_inversion_index) {
        human << "least inversion index: " << *report.min_inversion_index << " (" << report.witnesses.size()
              << " witness" << (report.witnesses.size() == 1 ? "" : "es") << ")\n";
    } else {
        human << "no inversion found\n";
    }
    for (const auto& w : report.witnesses) {
        witnesses.push_back(
            {{"tuple", tuple_json(w.tuple)}, {"index", w.index}, {"g_i", w.g_i}, {"g_next", w.g_next}});
        human << "  {" << w.tuple.to_string() << "}: g_" << w.index << " = " << w.g_i << " > g_" << w.index + 1
              << " = " << w.g_next << "\n";
    }
    if (report.skipped_undefined || report.errors) {
        human << "undefined pairs skipped: " << report.skipped_undefined << ", tuple errors: " << report.errors
              << "\n";
    }
    o.result = {{"k", report.k},
                {"max_element", report.max_element},
                {"j_max", report.j_max},
                {"tuples_scanned", report.tuples_scanned},
                {"min_inversion_index",
                 report.min_inversion_index ? Json(*report.min_inversion_index) : Json(nullptr)},
                {"witnesses", witnesses},
                {"skipped_undefined", report.skipped_undefined},
                {"errors", report.errors},
                {"shards_total", report.shards_total},
                {"shards_processed", report.shards_processed},
                {"shards_resumed", report.shards_resumed}};
    o.human = human.str();
    return o;
}

void emit(const std::string& command, const Outcome& o, const GlobalOptions& g, double elapsed_ms,
          std::ostream& out) {
    if (g.format == "json") {
        Json envelope = {{"schema", kSchemaVersion},
                         {"version", kVersion},
                         {"command", command},
                         {"input", o.input},
                         {"result", o.result}};
        if (!g.no_timing) {
            envelope["timing_ms"] = elapsed_ms;
        }
        out << envelope.dump(2) << "\n";
    } else if (g.format == "csv") {
        out << *o.csv;
    } else {
        out << o.human;
        if (!g.no_timing) {
            out << std::fixed << std::setprecision(1) << "(" << elapsed_ms << " ms)\n";
        }
    }
}

} // namespace

std::vector<Value> parse_generator_list(const std::string& text) {
    std::vector<Value> out;
    std::size_t start = 0;
    for (;;) {
        const auto comma = text.find(',', start);
        out.push_back(parse_value(std::string_view(text).substr(start, comma - start), "generator"));
        if (comma == std::string::npos) {
            return out;
        }
        start = comma + 1;
    }
}

IntRange parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const Value v = parse_value(text, "range");
        return {v, v};
    }
    const IntRange r{parse_value(std::string_view(text).substr(0, dots), "range start"),
                     parse_value(std::string_view(text).substr(dots + 2), "range end")};
    if (r.empty()) {
        throw ValidationError("empty range '" + text + "'");
    }
    return r;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generalized Frobenius numbers: representation counts, g_j sequences, family checks, scans",
                 "frobgen"};
    app.require_subcommand(1);
    GlobalOptions g;
    app.add_option("--format", g.format, "Output format")
        ->check(CLI::IsMember({"human", "json", "csv"}))
        ->capture_default_str();
    app.add_flag("--no-timing", g.no_timing, "Omit the timing field");
    app.set_version_flag("--version", kVersion);

    std::string gens;
    Value target = 0;
    auto* count = app.add_subcommand("count", "Exact number of representations R(t)");
    count->add_option("-g,--generators", gens, "Comma-separated generators")->required();
    count->add_option("-t,--target", target, "Target integer t")->required();

    Value j_max = 0;
    auto* gseq = app.add_subcommand("gseq", "g_0 .. g_j with a certified window");
    gseq->add_option("-g,--generators", gens, "Comma-separated generators")->required();
    gseq->add_option("-j,--j-max", j_max, "Largest index j")->required();

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Check a closed-form family against the engine");
    verify->add_option("family", verify_args.family, "thm1 | lemma1 | lemma2 | thm2 | coprime | pair")->required();
    verify->add_option("--n", verify_args.n, "Range a..b for n");
    verify->add_option("--k", verify_args.k, "Range a..b for k");
    verify->add_option("--j", verify_args.j, "Range a..b for j (pair)");
    verify->add_option("--x1", verify_args.x1, "First pair generator");
    verify->add_option("--x2", verify_args.x2, "Second pair generator");

    ScanArgs scan_args;
    auto* scan_cmd = app.add_subcommand("scan", "Search reasonable k-tuples for g_i > g_{i+1}");
    scan_cmd->add_option("-k", scan_args.k, "Tuple size")->required();
    scan_cmd->add_option("-m,--max-element", scan_args.max_element, "Largest generator")->required();
    scan_cmd->add_option("-j,--j-max", scan_args.j_max, "Largest inversion index examined")->capture_default_str();
    scan_cmd->add_option("--threads", scan_args.threads, "Worker threads (default: FROBGEN_THREADS or all cores)");
    scan_cmd->add_option("--checkpoint", scan_args.checkpoint, "Resumable record of finished shards");
    scan_cmd->add_option("--shard", scan_args.shard, "Only shards p with p % STRIDE == OFFSET, as OFFSET/STRIDE");

    auto* classify_cmd = app.add_subcommand("classify", "gcd and reasonableness of a tuple");
    classify_cmd->add_option("-g,--generators", gens, "Comma-separated generators")->required();

    std::vector<std::string> argv_storage{"frobgen"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_storage) {
        argv.push_back(s.data());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_validation;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        Outcome outcome;
        std::string command;
        if (*count) {
            command = "count";
            outcome = do_count(gens, target);
        } else if (*gseq) {
            command = "gseq";
            outcome = do_gseq(gens, j_max);
        } else if (*verify) {
            command = "verify";
            outcome = do_verify(verify_args);
        } else if (*scan_cmd) {
            command = "scan";
            outcome = do_scan(scan_args);
        } else {
            command = "classify";
            outcome = do_classify(gens);
        }
        if (g.format == "csv" && !outcome.csv) {
            throw ValidationError("csv output is available for verify and gseq only");
        }
        const double elapsed =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        emit(command, outcome, g, elapsed, out);
        return outcome.exit_code;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return exit_validation;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return exit_domain;
    } catch (const ArithmeticOverflowError& e) {
        err << "overflow: " << e.what() << "\n";
        return exit_resource;
    } catch (const ResourceError& e) {
        err << "resource error: " << e.what() << "\n";
        return exit_resource;
    }
}

} // namespace frobgen::cli
