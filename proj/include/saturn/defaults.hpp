#pragma once

#include "saturn/derivation.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace saturn
{

    /// A rule with at least two literals and confidence below one.
    bool is_default_rule(const Clause &clause);

    /// True when some default rule is among the inputs of the node's DAG.
    bool depends_on_default(const SearchState &state, NodeId id);

    /// Number of distinct taxonomy and similarity inputs in the DAGs of the
    /// given nodes. Lower means more specific.
    std::size_t specificity_count(const SearchState &state, std::span<const NodeId> ids);

    /// A set of unit clauses that together refute the target clause.
    struct DirectContradiction
    {
        std::vector<NodeId> blockers;
    };

    /**
     * Finds sets of unit clauses, one per non-answer literal of the target,
     * whose complements unify simultaneously with the target's literals.
     * Candidate units are answer-free, unblocked, outside the question's
     * lineage and not derived from the target. Deactivated units count.
     * At most `limit` sets are returned.
     */
    std::vector<DirectContradiction> find_direct_contradictions(const SearchState &state, NodeId target,
                                                                std::size_t limit = 64);

    struct EliminationResult
    {
        /// Ids of the answers that survived, in input order.
        std::vector<NodeId> surviving;
        std::vector<NodeId> blocked;
        std::vector<std::string> warnings;
    };

    /**
     * Checks every node in the derivations of the given answers, blocking
     * those contradicted by a more specific derivation. Blocks propagate to
     * everything derived from a blocked node. Marks are written to
     * `state.blocked`, so a second call on the same state sees earlier
     * verdicts.
     */
    EliminationResult eliminate_defaults(SearchState &state, std::span<const NodeId> answers,
                                         int max_depth = 8);

} // namespace saturn
