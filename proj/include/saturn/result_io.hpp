#pragma once

#include "saturn/query_engine.hpp"

#include <json.hpp>

#include <string>

namespace saturn
{

    struct OutputOptions
    {
        bool verbose = false;
        std::size_t max_answers = 16;
        /// Wall-clock fields are left out when false, so output only depends
        /// on the input and the step budget.
        bool include_timing = true;
    };

    /// Confidence rounded to six decimals, as a JSON number.
    double rounded(const Rational &value);

    /**
     * {question, answers: [{values, indefinite, sign, confidence, cp, cn,
     * vetted, positiveProofs, negativeProofs}], stats, warnings}. Each proof
     * is {answer, confidence, steps: [{id, clause, rule, premises,
     * confidence, origin}]}. Verbose output adds exact values and blocked
     * proofs.
     */
    nlohmann::ordered_json result_to_json(const QueryResult &result, const OutputOptions &options);

    /// Indented proof trees with rule names, premise ids and step confidences.
    std::string result_to_text(const QueryResult &result, const QueryFile &file, const OutputOptions &options);

} // namespace saturn
