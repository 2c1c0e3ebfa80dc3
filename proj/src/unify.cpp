#include "saturn/unify.hpp"

#include <algorithm>
#include <functional>

namespace saturn
{

    const Term *Substitution::lookup(VarId v) const
    {
        auto it = bindings_.find(v);
        return it == bindings_.end() ? nullptr : &it->second;
    }

    void Substitution::bind(VarId v, Term t)
    {
        bindings_.insert_or_assign(v, std::move(t));
    }

    Term Substitution::apply(const Term &t) const
    {
        if (bindings_.empty() || t.is_ground())
            return t;
        if (t.is_variable())
        {
            const Term *bound = lookup(t.var());
            return bound ? apply(*bound) : t;
        }
        std::vector<Term> args;
        args.reserve(t.arity());
        bool changed = false;
        for (const auto &a : t.args())
        {
            args.push_back(apply(a));
            changed = changed || !(args.back() == a);
        }
        return changed ? Term::compound(t.functor(), std::move(args)) : t;
    }

    Literal Substitution::apply(const Literal &lit) const
    {
        Literal out(lit.positive, lit.predicate, {});
        out.args.reserve(lit.args.size());
        for (const auto &a : lit.args)
            out.args.push_back(apply(a));
        return out;
    }

    Substitution Substitution::normalized() const
    {
        Substitution out;
        for (const auto &[v, t] : bindings_)
        {
            Term resolved = apply(t);
            if (!(resolved.is_variable() && resolved.var() == v))
                out.bindings_.emplace(v, std::move(resolved));
        }
        return out;
    }

    std::string to_string(const Substitution &s)
    {
        std::string out = "{";
        bool first = true;
        for (const auto &[v, t] : s.bindings())
        {
            if (!first)
                out += ", ";
            first = false;
            out += variable_name(v) + "->" + to_string(t);
        }
        return out + "}";
    }

    namespace
    {
        Term walk(const Term &t, const Substitution &s)
        {
            Term cur = t;
            while (cur.is_variable())
            {
                const Term *next = s.lookup(cur.var());
                if (!next)
                    break;
                cur = *next;
            }
            return cur;
        }

        bool occurs_in(VarId v, const Term &t, const Substitution &s)
        {
            Term w = walk(t, s);
            if (w.is_variable())
                return w.var() == v;
            if (w.is_ground())
                return false;
            return std::any_of(w.args().begin(), w.args().end(), [&](const Term &a)
                               { return occurs_in(v, a, s); });
        }

        bool unify_into(const Term &a, const Term &b, Substitution &s)
        {
            Term x = walk(a, s);
            Term y = walk(b, s);
            if (x.is_variable() && y.is_variable() && x.var() == y.var())
                return true;
            if (x.is_variable())
            {
                if (occurs_in(x.var(), y, s))
                    return false;
                s.bind(x.var(), y);
                return true;
            }
            if (y.is_variable())
            {
                if (occurs_in(y.var(), x, s))
                    return false;
                s.bind(y.var(), x);
                return true;
            }
            if (x.kind() != y.kind() || x.functor() != y.functor() || x.arity() != y.arity())
                return false;
            for (std::size_t i = 0; i < x.arity(); ++i)
                if (!unify_into(x.args()[i], y.args()[i], s))
                    return false;
            return true;
        }
    } // namespace

    std::optional<Substitution> unify(const Term &a, const Term &b, Substitution start)
    {
        if (!unify_into(a, b, start))
            return std::nullopt;
        return start.normalized();
    }

    std::optional<Substitution> unify(const Literal &a, const Literal &b)
    {
        if (a.predicate != b.predicate || a.args.size() != b.args.size())
            return std::nullopt;
        Substitution s;
        for (std::size_t i = 0; i < a.args.size(); ++i)
            if (!unify_into(a.args[i], b.args[i], s))
                return std::nullopt;
        return s.normalized();
    }

    bool match(const Term &pattern, const Term &target, std::map<VarId, Term> &bindings)
    {
        if (pattern.is_variable())
        {
            auto [it, inserted] = bindings.try_emplace(pattern.var(), target);
            return inserted || it->second == target;
        }
        if (pattern.kind() != target.kind() || pattern.functor() != target.functor() ||
            pattern.arity() != target.arity())
            return false;
        if (pattern.is_ground())
            return pattern == target;
        for (std::size_t i = 0; i < pattern.arity(); ++i)
            if (!match(pattern.args()[i], target.args()[i], bindings))
                return false;
        return true;
    }

    namespace
    {
        bool match_literal(const Literal &pattern, const Literal &target, std::map<VarId, Term> &bindings)
        {
            if (pattern.positive != target.positive || pattern.predicate != target.predicate ||
                pattern.args.size() != target.args.size())
                return false;
            for (std::size_t i = 0; i < pattern.args.size(); ++i)
                if (!match(pattern.args[i], target.args[i], bindings))
                    return false;
            return true;
        }

        void collect_vars(const Term &t, std::vector<VarId> &out)
        {
            if (t.is_variable())
            {
                if (std::find(out.begin(), out.end(), t.var()) == out.end())
                    out.push_back(t.var());
                return;
            }
            for (const auto &a : t.args())
                collect_vars(a, out);
        }

        // Backtracking over precomputed candidate lists, most constrained
        // general literal first. Gives up after kSubsumptionBudget steps.
        constexpr std::size_t kSubsumptionBudget = 2000;

        struct SubsumptionSearch
        {
            const std::vector<Literal> &general;
            const std::vector<Literal> &specific;
            std::vector<std::size_t> order;
            std::vector<std::vector<std::size_t>> candidates;
            std::vector<std::vector<VarId>> vars;
            std::size_t steps = 0;

            bool run(std::size_t k, std::map<VarId, Term> &bindings)
            {
                if (k == order.size())
                    return true;
                const Literal &lit = general[order[k]];
                std::vector<VarId> unbound;
                for (VarId v : vars[order[k]])
                    if (!bindings.count(v))
                        unbound.push_back(v);
                for (std::size_t c : candidates[order[k]])
                {
                    if (++steps > kSubsumptionBudget)
                        return false;
                    if (match_literal(lit, specific[c], bindings) && run(k + 1, bindings))
                        return true;
                    if (steps > kSubsumptionBudget)
                        return false;
                    for (VarId v : unbound)
                        bindings.erase(v);
                }
                return false;
            }
        };
    } // namespace

    bool subsumes(const Clause &general, const Clause &specific)
    {
        const auto &g = general.literals();
        const auto &s = specific.literals();
        SubsumptionSearch search{g, s, {}, std::vector<std::vector<std::size_t>>(g.size()),
                                 std::vector<std::vector<VarId>>(g.size())};
        for (std::size_t i = 0; i < g.size(); ++i)
        {
            for (const auto &t : g[i].args)
                collect_vars(t, search.vars[i]);
            for (std::size_t j = 0; j < s.size(); ++j)
            {
                std::map<VarId, Term> fresh;
                if (match_literal(g[i], s[j], fresh))
                    search.candidates[i].push_back(j);
            }
            if (search.candidates[i].empty())
                return false;
            search.order.push_back(i);
        }
        std::stable_sort(search.order.begin(), search.order.end(), [&](std::size_t a, std::size_t b)
                         { return search.candidates[a].size() < search.candidates[b].size(); });
        std::map<VarId, Term> bindings;
        return search.run(0, bindings);
    }

    Clause apply_substitution(const Clause &c, const Substitution &s)
    {
        if (s.empty())
            return c;
        std::vector<Literal> lits;
        lits.reserve(c.size());
        for (const auto &l : c.literals())
            lits.push_back(s.apply(l));
        Clause out(std::move(lits), c.confidence, c.origin, c.is_taxonomy);
        out.id = c.id;
        return out;
    }

} // namespace saturn
