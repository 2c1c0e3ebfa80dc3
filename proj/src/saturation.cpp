#include "saturn/saturation.hpp"

#include "saturn/defaults.hpp"
#include "saturn/inference.hpp"

#include <algorithm>

namespace saturn
{

    namespace
    {
        bool input_subset(const std::vector<NodeId> &small, const std::vector<NodeId> &big)
        {
            return std::includes(big.begin(), big.end(), small.begin(), small.end());
        }

        bool is_terminal(const Clause &c) { return c.only_answer_literals(); }

        // Defaults are not contrapositive: a negative conclusion of a default
        // rule is never resolved upon.
        bool frozen(const DerivationNode &n, std::size_t lit)
        {
            return n.rule == Rule::Input && n.clause.is_negative_conclusion(lit) && is_default_rule(n.clause);
        }

        class Saturator
        {
        public:
            Saturator(SearchState &state, const SearchBudget &budget, const SaturationLimits &limits)
                : state_(state), budget_(budget), limits_(limits) {}

            void run()
            {
                auto &stats = state_.stats;
                if (state_.processed().empty())
                {
                    for (NodeId id = 0; id < static_cast<NodeId>(state_.size()); ++id)
                        if (state_.node(id).rule == Rule::Input && state_.is_active(id))
                            state_.push_usable(id);
                }
                while (state_.has_usable())
                {
                    if (out_of_budget())
                        return;
                    NodeId given = state_.pop_usable();
                    if (given < 0)
                        break;
                    ++stats.given;
                    infer_from(given);
                    state_.mark_processed(given);
                    if (stopped_)
                        return;
                }
                stats.exhausted = true;
            }

        private:
            bool out_of_budget()
            {
                if (budget_.steps && state_.stats.given >= *budget_.steps)
                    return true;
                if (budget_.deadline && Clock::now() >= *budget_.deadline)
                    return true;
                return false;
            }

            void infer_from(NodeId given_id)
            {
                // Copy: consider() may grow the node vector.
                const DerivationNode given = state_.node(given_id);
                const auto &gl = given.clause.literals();

                for (std::size_t i = 0; i < gl.size(); ++i)
                    for (std::size_t j = i + 1; j < gl.size(); ++j)
                        if (auto f = factor(given, i, j))
                            consider(std::move(*f));

                if (limits_.paramodulation)
                {
                    for (std::size_t i = 0; i < gl.size(); ++i)
                        if (auto r = equality_resolve(given, i))
                            consider(std::move(*r));
                    for (auto &p : paramodulate(given, given))
                        consider(std::move(p));
                }

                const std::vector<NodeId> partners = state_.processed();
                for (NodeId pid : partners)
                {
                    if (stopped_)
                        return;
                    if (!state_.is_active(pid) || !state_.is_active(given_id))
                        continue;
                    const DerivationNode partner = state_.node(pid);
                    resolve_pair(given, partner);
                    if (limits_.paramodulation)
                    {
                        for (auto &p : paramodulate(given, partner))
                            consider(std::move(p));
                        for (auto &p : paramodulate(partner, given))
                            consider(std::move(p));
                    }
                }
            }

            void resolve_pair(const DerivationNode &a, const DerivationNode &b)
            {
                const auto &al = a.clause.literals();
                const auto &bl = b.clause.literals();
                const bool a_positive = a.clause.is_positive();
                const bool b_positive = b.clause.is_positive();
                if (!a_positive && !b_positive)
                    return;
                for (std::size_t i = 0; i < al.size(); ++i)
                {
                    if (al[i].is_answer() || frozen(a, i))
                        continue;
                    for (std::size_t j = 0; j < bl.size(); ++j)
                    {
                        if (bl[j].is_answer() || frozen(b, j) || al[i].positive == bl[j].positive || al[i].predicate != bl[j].predicate)
                            continue;
                        // The premise contributing the positive literal must be a positive clause.
                        bool positive_side_ok = al[i].positive ? a_positive : b_positive;
                        if (!positive_side_ok)
                            continue;
                        if (auto r = binary_resolve(a, b, i, j))
                            consider(std::move(*r));
                    }
                }
            }

            void consider(DerivationNode candidate)
            {
                auto &stats = state_.stats;
                ++stats.generated;
                if ((stats.generated & 63) == 0 && budget_.deadline && Clock::now() >= *budget_.deadline)
                    stopped_ = true;
                const Clause &c = candidate.clause;
                if (c.size() > limits_.max_clause_literals || c.answer_literal_count() > limits_.max_answer_literals ||
                    c.max_depth() > limits_.max_term_depth)
                {
                    ++stats.discarded_limits;
                    return;
                }
                if (c.is_tautology())
                {
                    ++stats.discarded_tautologies;
                    return;
                }
                if (is_terminal(c) && c.answer_literal_count() == 0 && !candidate.question_lineage)
                {
                    // Contradiction unrelated to the question.
                    ++stats.discarded_irrelevant;
                    return;
                }
                RetentionDecision decision = retain_or_discard(candidate, state_);
                if (!decision.retain)
                {
                    ++stats.discarded_subsumed;
                    return;
                }
                bool terminal = is_terminal(c);
                NodeId id = state_.add(std::move(candidate));
                ++stats.kept;
                for (NodeId victim : decision.deactivate)
                    state_.deactivate(victim);
                if (terminal)
                {
                    state_.deactivate(id);
                    state_.add_answer(id);
                    ++stats.answers;
                    const DerivationNode answer = state_.node(id);
                    for (std::size_t i = 0; i < answer.clause.size(); ++i)
                        for (std::size_t j = i + 1; j < answer.clause.size(); ++j)
                            if (auto f = factor(answer, i, j))
                                consider(std::move(*f));
                    return;
                }
                state_.push_usable(id);
            }

            SearchState &state_;
            const SearchBudget &budget_;
            const SaturationLimits &limits_;
            bool stopped_ = false;
        };
    } // namespace

    RetentionDecision retain_or_discard(const DerivationNode &candidate, const SearchState &state)
    {
        RetentionDecision decision;
        const Clause &c = candidate.clause;
        if (is_terminal(c))
        {
            for (NodeId id : state.answer_nodes())
            {
                const auto &e = state.node(id);
                if (e.clause.same_literals(c) && e.inputs == candidate.inputs &&
                    e.step_confidence() >= candidate.step_confidence())
                {
                    decision.retain = false;
                    return decision;
                }
            }
            return decision;
        }
        for (NodeId id : state.active_ids())
        {
            const auto &e = state.node(id);
            if (e.question_lineage != candidate.question_lineage || is_terminal(e.clause))
                continue;
            if (e.clause.size() <= c.size() && e.step_confidence() >= candidate.step_confidence() &&
                input_subset(e.inputs, candidate.inputs) && subsumes(e.clause, c))
            {
                decision.retain = false;
                decision.deactivate.clear();
                return decision;
            }
            if (c.size() <= e.clause.size() && candidate.step_confidence() >= e.step_confidence() &&
                input_subset(candidate.inputs, e.inputs) && subsumes(c, e.clause))
                decision.deactivate.push_back(id);
        }
        return decision;
    }

    void saturate(SearchState &state, const SearchBudget &budget, const SaturationLimits &limits)
    {
        Saturator(state, budget, limits).run();
    }

} // namespace saturn
