#pragma once

#include "saturn/clause.hpp"
#include "saturn/unify.hpp"

#include <cstddef>
#include <set>
#include <span>
#include <string_view>
#include <tuple>
#include <vector>

namespace saturn
{

    using NodeId = int;

    enum class Rule
    {
        Input,
        BinaryResolution,
        Factoring,
        Paramodulation,
        EqualityResolution
    };

    std::string_view to_string(Rule rule);

    /**
     * One clause in a derivation DAG together with how it was obtained.
     *
     * The node's id is its clause's id. Premise ids are always smaller than
     * the node's own id, which keeps the graph acyclic and lets callers walk
     * derivations in creation order.
     */
    struct DerivationNode
    {
        Clause clause;
        Rule rule = Rule::Input;
        std::vector<NodeId> premises;
        /// Unifier of the step, over the premises' variables after the second
        /// premise has been renamed apart.
        Substitution unifier;
        /// True when some question clause occurs in the DAG.
        bool question_lineage = false;
        /// Sorted ids of the non-question input clauses in the DAG.
        std::vector<NodeId> inputs;

        NodeId id() const noexcept { return clause.id; }
        const Rational &step_confidence() const noexcept { return clause.confidence; }
    };

    struct SaturationStats
    {
        std::size_t given = 0;
        std::size_t generated = 0;
        std::size_t kept = 0;
        std::size_t discarded_subsumed = 0;
        std::size_t discarded_limits = 0;
        std::size_t discarded_tautologies = 0;
        std::size_t discarded_irrelevant = 0;
        std::size_t deactivated = 0;
        std::size_t answers = 0;
        bool exhausted = false;
    };

    /**
     * Clause store for one given-clause run: every retained node by id, the
     * active/processed sets, the usable queue and the collected answer nodes.
     * Nodes are never removed; subsumed ones are only deactivated so that the
     * default-rule scan can still inspect them afterwards.
     */
    class SearchState
    {
    public:
        SearchState() = default;
        /// Creates one input node per clause, ids assigned in order.
        explicit SearchState(std::span<const Clause> inputs);

        /// Stores a node, assigns the next id and returns it. Input nodes get
        /// their lineage and input set filled in here.
        NodeId add(DerivationNode node);

        const DerivationNode &node(NodeId id) const { return nodes_.at(static_cast<std::size_t>(id)); }
        std::size_t size() const noexcept { return nodes_.size(); }
        const std::vector<DerivationNode> &nodes() const noexcept { return nodes_; }

        bool is_active(NodeId id) const { return active_.at(static_cast<std::size_t>(id)); }
        void deactivate(NodeId id);
        std::span<const NodeId> active_ids() const noexcept { return active_list_; }

        void push_usable(NodeId id);
        /// Next usable active node, or -1 when the queue is empty.
        NodeId pop_usable();
        bool has_usable() const noexcept { return !usable_.empty(); }
        void mark_processed(NodeId id) { processed_.push_back(id); }
        const std::vector<NodeId> &processed() const noexcept { return processed_; }

        void add_answer(NodeId id) { answer_nodes_.push_back(id); }
        const std::vector<NodeId> &answer_nodes() const noexcept { return answer_nodes_; }

        /// Ids of the node and all its ancestors, ascending.
        std::vector<NodeId> derivation(NodeId id) const;

        /// Per-node blocked marks written by default elimination.
        std::vector<bool> blocked;
        SaturationStats stats;

    private:
        std::vector<DerivationNode> nodes_;
        std::vector<bool> active_;
        std::vector<NodeId> active_list_;
        std::vector<NodeId> processed_;
        std::vector<NodeId> answer_nodes_;
        // (non-answer literal count, lineage rank, id)
        std::set<std::tuple<std::size_t, int, NodeId>> usable_;
    };

} // namespace saturn
