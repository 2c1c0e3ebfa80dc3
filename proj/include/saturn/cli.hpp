#pragma once

#include "saturn/rational.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

namespace saturn
{

    enum class OutputFormat
    {
        Json,
        Text
    };

    /// Command-line settings. Unset optionals fall back to the file's
    /// [params] section and then to the built-in defaults.
    struct CliConfig
    {
        std::string input_path;
        OutputFormat format = OutputFormat::Json;
        std::optional<double> time;
        /// Given-clause budget; replaces the time limit when set.
        std::optional<std::size_t> steps;
        std::optional<Rational> split;
        std::optional<Rational> h;
        std::size_t max_answers = 16;
        bool verbose = false;
        bool paramodulation = false;
        Rational similarity_scale = 1;
    };

    inline constexpr int kExitOk = 0;
    inline constexpr int kExitInputError = 1;
    inline constexpr int kExitInternalError = 2;

    /// Parses argv. On --help or a bad flag, prints to out/err and returns
    /// the exit code to use instead of a config.
    struct ParsedArgs
    {
        std::optional<CliConfig> config;
        int exit_code = kExitOk;
    };
    ParsedArgs parse_args(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

    /// Loads the file, answers its question and writes the result to `out`.
    /// Diagnostics go to `err`. Returns the process exit status.
    int run(const CliConfig &config, std::ostream &out, std::ostream &err);

} // namespace saturn
