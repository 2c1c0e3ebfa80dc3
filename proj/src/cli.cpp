#include "saturn/cli.hpp"

#include "saturn/kb_io.hpp"
#include "saturn/query_engine.hpp"
#include "saturn/result_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace saturn
{

    ParsedArgs parse_args(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
    {
        CLI::App app{"Answers questions against an uncertain first-order knowledge base."};
        app.set_help_flag("--help", "Print this help message and exit");
        app.set_version_flag("--version", "saturn 0.1.0");
        CliConfig config;
        std::string format = "json";
        std::string split, h, scale;
        std::optional<double> time;
        std::optional<std::size_t> steps;

        app.add_option("input", config.input_path, "Query file")->required();
        app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
        app.add_option("--time", time, "Wall-clock budget in seconds (default 5)");
        app.add_option("--steps", steps, "Given-clause budget; overrides --time");
        app.add_option("--split", split, "Share of the budget for the positive search (default 0.5)");
        app.add_option("--h", h, "Independence estimate for cumulative evidence (default 0.5)");
        app.add_option("--max-answers", config.max_answers, "Maximum number of answers reported");
        app.add_flag("--verbose", config.verbose, "Report negative and blocked answers and exact values");
        app.add_flag("--paramodulation", config.paramodulation, "Enable equality reasoning");
        app.add_option("--similarity-scale", scale, "Factor applied to similarity strengths (default 1)");

        try
        {
            app.parse(argc, argv);
        }
        catch (const CLI::ParseError &e)
        {
            int code = app.exit(e, out, err);
            return {std::nullopt, code == 0 ? kExitOk : kExitInputError};
        }

        config.format = format == "text" ? OutputFormat::Text : OutputFormat::Json;
        config.time = time;
        config.steps = steps;
        try
        {
            if (!split.empty())
                config.split = parse_rational(split);
            if (!h.empty())
                config.h = parse_rational(h);
            if (!scale.empty())
                config.similarity_scale = parse_rational(scale);
        }
        catch (const std::invalid_argument &e)
        {
            err << "error: " << e.what() << '\n';
            return {std::nullopt, kExitInputError};
        }
        return {config, kExitOk};
    }

    namespace
    {
        std::optional<std::string> read_file(const std::string &path)
        {
            std::ifstream in(path, std::ios::binary);
            if (!in)
                return std::nullopt;
            std::ostringstream buf;
            buf << in.rdbuf();
            return buf.str();
        }

        // Empty on success, otherwise the complaint.
        std::string validate(const QueryOptions &o)
        {
            if (!in_unit_interval(o.budget.split))
                return "split must be in [0,1]";
            if (!in_unit_interval(o.h))
                return "h must be in [0,1]";
            if (o.budget.steps ? *o.budget.steps == 0 : !(o.budget.time_seconds > 0))
                return o.budget.steps ? "steps must be positive" : "time must be positive";
            if (o.similarity_scale <= 0)
                return "similarity scale must be positive";
            return {};
        }
    } // namespace

    int run(const CliConfig &config, std::ostream &out, std::ostream &err)
    {
        auto text = read_file(config.input_path);
        if (!text)
        {
            err << config.input_path << ": cannot read file\n";
            return kExitInputError;
        }
        QueryFile file;
        try
        {
            file = parse_query_file(*text);
        }
        catch (const ParseError &e)
        {
            err << config.input_path << ':' << e.line() << ':' << e.column() << ": error: " << e.detail() << '\n';
            return kExitInputError;
        }

        QueryOptions options;
        options.budget.split = config.split.value_or(file.params.split.value_or(Rational(1, 2)));
        options.h = config.h.value_or(file.params.h.value_or(Rational(1, 2)));
        options.budget.time_seconds = config.time.value_or(file.params.time.value_or(5.0));
        options.budget.steps = config.steps ? config.steps : file.params.steps;
        options.limits.paramodulation = config.paramodulation;
        options.similarity_scale = config.similarity_scale;
        options.max_answers = config.max_answers;
        if (auto problem = validate(options); !problem.empty())
        {
            err << "error: " << problem << '\n';
            return kExitInputError;
        }

        try
        {
            QueryResult result = answer_query(file, options);
            OutputOptions output{config.verbose, config.max_answers, !options.budget.steps.has_value()};
            if (config.format == OutputFormat::Json)
                out << result_to_json(result, output).dump(2) << '\n';
            else
                out << result_to_text(result, file, output);
        }
        catch (const std::exception &e)
        {
            err << "internal error: " << e.what() << '\n';
            return kExitInternalError;
        }
        return kExitOk;
    }

} // namespace saturn
