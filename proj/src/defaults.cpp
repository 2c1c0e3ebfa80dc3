#include "saturn/defaults.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace saturn
{

    bool is_default_rule(const Clause &clause)
    {
        return clause.size() >= 2 && clause.confidence < 1;
    }

    bool depends_on_default(const SearchState &state, NodeId id)
    {
        for (NodeId in : state.node(id).inputs)
            if (is_default_rule(state.node(in).clause))
                return true;
        return false;
    }

    std::size_t specificity_count(const SearchState &state, std::span<const NodeId> ids)
    {
        std::set<NodeId> seen;
        for (NodeId id : ids)
            for (NodeId in : state.node(id).inputs)
            {
                const Clause &c = state.node(in).clause;
                if (c.is_taxonomy || c.origin == Origin::Similarity)
                    seen.insert(in);
            }
        return seen.size();
    }

    namespace
    {
        using UnitIndex = std::map<std::pair<std::string, bool>, std::vector<NodeId>>;

        UnitIndex collect_units(const SearchState &state)
        {
            UnitIndex units;
            for (const auto &n : state.nodes())
            {
                const Clause &c = n.clause;
                if (c.size() != 1 || c.answer_literal_count() != 0 || n.question_lineage || state.blocked[n.id()])
                    continue;
                const Literal &l = c.literals().front();
                units[{l.predicate, l.positive}].push_back(n.id());
            }
            return units;
        }

        // Whether `id` has `ancestor` in its DAG.
        bool derived_from(const SearchState &state, NodeId id, NodeId ancestor)
        {
            if (id < ancestor)
                return false;
            std::vector<NodeId> stack{id};
            std::set<NodeId> seen;
            while (!stack.empty())
            {
                NodeId cur = stack.back();
                stack.pop_back();
                if (cur == ancestor)
                    return true;
                if (cur < ancestor || !seen.insert(cur).second)
                    continue;
                for (NodeId p : state.node(cur).premises)
                    stack.push_back(p);
            }
            return false;
        }

        class ContradictionSearch
        {
        public:
            ContradictionSearch(const SearchState &state, const UnitIndex &units, NodeId target, std::size_t limit)
                : state_(state), units_(units), target_(target), limit_(limit)
            {
                for (const auto &l : state.node(target).clause.literals())
                    if (!l.is_answer())
                        lits_.push_back(&l);
            }

            std::vector<DirectContradiction> run()
            {
                if (lits_.empty())
                    return {};
                std::vector<NodeId> chosen;
                search(0, Substitution{}, state_.node(target_).clause.max_var() + 1, chosen);
                return std::move(out_);
            }

        private:
            void search(std::size_t k, const Substitution &sigma, VarId offset, std::vector<NodeId> &chosen)
            {
                if (out_.size() >= limit_)
                    return;
                if (k == lits_.size())
                {
                    out_.push_back({chosen});
                    return;
                }
                const Literal &lit = *lits_[k];
                auto it = units_.find({lit.predicate, !lit.positive});
                if (it == units_.end())
                    return;
                for (NodeId u : it->second)
                {
                    if (u == target_ || !usable(u))
                        continue;
                    const Literal &ul = state_.node(u).clause.literals().front();
                    if (ul.args.size() != lit.args.size())
                        continue;
                    Literal shifted = ul.shift_vars(offset);
                    std::optional<Substitution> s = sigma;
                    for (std::size_t a = 0; a < lit.args.size() && s; ++a)
                        s = unify(lit.args[a], shifted.args[a], std::move(*s));
                    if (!s)
                        continue;
                    chosen.push_back(u);
                    search(k + 1, *s, offset + ul.max_var() + 1, chosen);
                    chosen.pop_back();
                }
            }

            bool usable(NodeId u)
            {
                auto [it, inserted] = downstream_.try_emplace(u, false);
                if (inserted)
                    it->second = derived_from(state_, u, target_);
                return !it->second;
            }

            const SearchState &state_;
            const UnitIndex &units_;
            NodeId target_;
            std::size_t limit_;
            std::vector<const Literal *> lits_;
            std::map<NodeId, bool> downstream_;
            std::vector<DirectContradiction> out_;
        };

        class Eliminator
        {
        public:
            Eliminator(SearchState &state, int max_depth)
                : state_(state), max_depth_(max_depth), children_(state.size()), verdict_(state.size(), Unknown),
                  units_(collect_units(state))
            {
                for (const auto &n : state.nodes())
                    for (NodeId p : n.premises)
                        children_[static_cast<std::size_t>(p)].push_back(n.id());
            }

            bool derivation_survives(NodeId id, int depth)
            {
                for (NodeId m : state_.derivation(id))
                    if (!node_survives(m, depth))
                        return false;
                return !state_.blocked[id];
            }

            std::vector<std::string> warnings;

        private:
            enum Verdict : char
            {
                Unknown,
                Checking,
                Survives
            };

            bool node_survives(NodeId id, int depth)
            {
                auto idx = static_cast<std::size_t>(id);
                if (state_.blocked[idx])
                    return false;
                if (verdict_[idx] != Unknown)
                    return true;
                const DerivationNode &n = state_.node(id);
                if (n.clause.non_answer_count() == 0 || !depends_on_default(state_, id))
                {
                    verdict_[idx] = Survives;
                    return true;
                }
                verdict_[idx] = Checking;
                const std::size_t own = specificity_count(state_, std::span<const NodeId>(&id, 1));
                // Units blocked since construction are skipped below.
                for (const auto &dc : ContradictionSearch(state_, units_, id, 64).run())
                {
                    if (state_.blocked[idx])
                        break;
                    if (std::any_of(dc.blockers.begin(), dc.blockers.end(), [&](NodeId b)
                                    { return static_cast<bool>(state_.blocked[b]); }))
                        continue;
                    if (specificity_count(state_, dc.blockers) >= own)
                        continue;
                    if (depth >= max_depth_)
                    {
                        warnings.push_back("blocking check for clause " + std::to_string(id) +
                                           " stopped at depth " + std::to_string(max_depth_));
                        continue;
                    }
                    bool blockers_hold = std::all_of(dc.blockers.begin(), dc.blockers.end(), [&](NodeId b)
                                                     { return derivation_survives(b, depth + 1); });
                    if (blockers_hold)
                    {
                        block(id);
                        break;
                    }
                    for (NodeId b : dc.blockers)
                        block(b);
                }
                if (state_.blocked[idx])
                    return false;
                verdict_[idx] = Survives;
                return true;
            }

            void block(NodeId id)
            {
                std::vector<NodeId> stack{id};
                while (!stack.empty())
                {
                    auto cur = static_cast<std::size_t>(stack.back());
                    stack.pop_back();
                    if (state_.blocked[cur])
                        continue;
                    state_.blocked[cur] = true;
                    for (NodeId c : children_[cur])
                        stack.push_back(c);
                }
            }

            SearchState &state_;
            int max_depth_;
            std::vector<std::vector<NodeId>> children_;
            std::vector<Verdict> verdict_;
            UnitIndex units_;
        };
    } // namespace

    std::vector<DirectContradiction> find_direct_contradictions(const SearchState &state, NodeId target,
                                                                std::size_t limit)
    {
        UnitIndex units = collect_units(state);
        return ContradictionSearch(state, units, target, limit).run();
    }

    EliminationResult eliminate_defaults(SearchState &state, std::span<const NodeId> answers, int max_depth)
    {
        Eliminator elim(state, max_depth);
        std::vector<NodeId> order(answers.begin(), answers.end());
        std::sort(order.begin(), order.end());
        for (NodeId a : order)
            elim.derivation_survives(a, 0);

        EliminationResult result;
        for (NodeId a : answers)
            (state.blocked[a] ? result.blocked : result.surviving).push_back(a);
        result.warnings = std::move(elim.warnings);
        return result;
    }

} // namespace saturn
