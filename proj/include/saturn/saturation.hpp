#pragma once

#include "saturn/derivation.hpp"

#include <chrono>
#include <optional>

namespace saturn
{

    using Clock = std::chrono::steady_clock;

    struct SaturationLimits
    {
        int max_term_depth = 16;
        std::size_t max_clause_literals = 32;
        /// Larger disjunctive answers are dropped; they grow without bound
        /// when the question clause resolves with its own descendants.
        std::size_t max_answer_literals = 8;
        bool paramodulation = false;
    };

    /// Stops the given-clause loop after `steps` given clauses and/or at
    /// `deadline`, whichever comes first. Both empty means run to exhaustion.
    struct SearchBudget
    {
        std::optional<std::size_t> steps;
        std::optional<Clock::time_point> deadline;
    };

    struct RetentionDecision
    {
        bool retain = true;
        /// Active nodes the candidate makes redundant.
        std::vector<NodeId> deactivate;
    };

    /**
     * Redundancy test for a freshly inferred candidate.
     *
     * A non-terminal candidate is discarded when an active clause E of the
     * same lineage (both with or both without a question clause in their
     * DAG) subsumes it with no more literals, at least its confidence, and
     * an input set contained in the candidate's. Under the mirrored
     * conditions the candidate deactivates E instead. The input-set
     * condition keeps derivations that bring new input clauses alive, since
     * they may add independent evidence to an answer.
     *
     * A terminal candidate (answer literals only) is discarded only when an
     * identical answer clause with the same input set and at least its
     * confidence was already collected.
     */
    RetentionDecision retain_or_discard(const DerivationNode &candidate, const SearchState &state);

    /**
     * Given-clause saturation with positive-premise (P1) binary resolution:
     * one premise of every resolution step has no negative non-answer
     * literals. Lightest clauses go first; ties prefer clauses descending
     * from the question.
     *
     * Clauses made only of answer literals are collected in answer_nodes()
     * and take no further part. An answer-free empty clause with no question
     * clause in its derivation is dropped and the search continues.
     */
    void saturate(SearchState &state, const SearchBudget &budget, const SaturationLimits &limits = {});

} // namespace saturn
