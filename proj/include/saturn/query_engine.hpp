#pragma once

#include "saturn/defaults.hpp"
#include "saturn/evidence.hpp"
#include "saturn/kb_io.hpp"
#include "saturn/saturation.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace saturn
{

    /// Search budget for one query. With `steps` set, the wall-clock limit is
    /// ignored and runs are reproducible: the positive search gets
    /// floor(steps * split) given clauses and the rest is shared evenly by
    /// the negative searches.
    struct QueryBudget
    {
        double time_seconds = 5.0;
        std::optional<std::size_t> steps;
        Rational split{1, 2};
    };

    struct QueryOptions
    {
        QueryBudget budget;
        Rational h{1, 2};
        SaturationLimits limits;
        Rational similarity_scale = 1;
        std::size_t max_answers = 16;
        int max_blocking_depth = 8;
    };

    /// Result of one search phase, kept for proof output.
    struct PhaseReport
    {
        std::string name;
        SaturationStats stats;
        std::size_t blocked_answers = 0;
        double seconds = 0;
    };

    struct AnswerRecord
    {
        /// Answer values; empty for variable-free questions. For indefinite
        /// answers this holds the first alternative.
        std::vector<Term> values;
        /// Alternatives of a disjunctive answer, one value vector each.
        std::vector<std::vector<Term>> alternatives;
        bool indefinite = false;
        /// False when no negative search ran for this record.
        bool vetted = false;
        EvidenceSet positive_evidence;
        EvidenceSet negative_evidence;
        Rational cp;
        Rational cn;
        Sign sign = Sign::Positive;
        Rational confidence;
        /// Answer nodes in the positive state that were blocked.
        std::vector<NodeId> blocked_positive;
        /// The negative search for this record, if one ran.
        std::shared_ptr<const SearchState> negative_state;
    };

    struct QueryResult
    {
        std::string question;
        bool ground_question = false;
        std::vector<AnswerRecord> records;
        std::shared_ptr<const SearchState> positive_state;
        std::vector<PhaseReport> phases;
        std::vector<std::string> warnings;
        double seconds = 0;

        /// Records to report: for open questions, those with a surviving
        /// positive derivation and a positive sign, unless `verbose`. Capped
        /// at max_answers.
        std::vector<const AnswerRecord *> reported(bool verbose, std::size_t max_answers) const;
    };

    /**
     * Answers the file's question: positive search, default elimination,
     * one negative search per definite answer vector, evidence folding and
     * sign combination. File parameters are not consulted; callers merge
     * them into `options` first.
     */
    QueryResult answer_query(const QueryFile &file, const QueryOptions &options);

    /// Whether the derivation of a node uses at least one question clause.
    bool negative_search_relevance(const SearchState &state, NodeId id);

} // namespace saturn
