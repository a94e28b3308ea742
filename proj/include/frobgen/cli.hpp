#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "frobgen/families.hpp"
#include "frobgen/generator_tuple.hpp"

namespace frobgen::cli {

inline constexpr const char* kVersion = "1.0.0";
inline constexpr int kSchemaVersion = 1;

enum ExitCode : int {
    exit_ok = 0,
    exit_checks_failed = 1,
    exit_validation = 2,
    exit_domain = 3,
    exit_resource = 4,
};

/// "4,7,19" -> {4, 7, 19}. ValidationError on anything else.
[[nodiscard]] std::vector<Value> parse_generator_list(const std::string& text);

/// "a..b" (inclusive) or a single "a".
[[nodiscard]] IntRange parse_range(const std::string& text);

/// Runs one command line (without the program name). The envelope goes to
/// `out`; diagnostics go to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

} // namespace frobgen::cli
