#pragma once

#include "hochcat/field.hpp"
#include "hochcat/hochschild.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hochcat::cli {

enum class Verb { Validate, Props, Fad, Cohomology, Compare, Derivations };
enum class OutputFormat { Text, Json };
enum class Theory { Full, Relative, Both };

struct Command {
    Verb verb = Verb::Validate;
    std::string input; // file path or builtin fixture name
    FieldSpec field = FieldSpec::rationals();
    std::size_t max_degree = 3;
    OutputFormat output = OutputFormat::Text;
    ComplexLimits limits;
    Theory theory = Theory::Both;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int failure = 1;
inline constexpr int usage = 2;
inline constexpr int hypothesis = 3;
} // namespace exit_code

/// args excludes the program name. Throws ArgumentError (UnknownVerb,
/// BadDegree, BadOption, BadTheory, BadOutput) or BadFieldSpec.
Command parse_args(const std::vector<std::string>& args);

/// Runs a parsed command; the return value is the process exit code.
int run(const Command& cmd, std::ostream& out, std::ostream& err);

/// parse_args + run, mapping usage errors to exit code 2.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace hochcat::cli
