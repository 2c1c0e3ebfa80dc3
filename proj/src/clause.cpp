#include "saturn/clause.hpp"

#include <algorithm>
#include <map>

namespace saturn
{

    std::string_view to_string(Origin origin)
    {
        switch (origin)
        {
        case Origin::Kb:
            return "kb";
        case Origin::Assumption:
            return "assumption";
        case Origin::Question:
            return "question";
        case Origin::Similarity:
            return "similarity";
        case Origin::Derived:
            return "derived";
        }
        return "?";
    }

    bool Literal::is_ground() const noexcept
    {
        return std::all_of(args.begin(), args.end(), [](const Term &t)
                           { return t.is_ground(); });
    }

    VarId Literal::max_var() const noexcept
    {
        VarId m = -1;
        for (const auto &a : args)
            m = std::max(m, a.max_var());
        return m;
    }

    int Literal::depth() const noexcept
    {
        int d = 0;
        for (const auto &a : args)
            d = std::max(d, a.depth());
        return d;
    }

    Literal Literal::shift_vars(VarId offset) const
    {
        Literal out(positive, predicate, {});
        out.args.reserve(args.size());
        for (const auto &a : args)
            out.args.push_back(a.shift_vars(offset));
        return out;
    }

    std::strong_ordering operator<=>(const Literal &a, const Literal &b)
    {
        if (auto c = a.is_answer() <=> b.is_answer(); c != 0)
            return c;
        if (auto c = a.predicate.compare(b.predicate); c != 0)
            return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        if (auto c = a.positive <=> b.positive; c != 0)
            return c;
        if (auto c = a.args.size() <=> b.args.size(); c != 0)
            return c;
        for (std::size_t i = 0; i < a.args.size(); ++i)
            if (auto c = a.args[i] <=> b.args[i]; c != 0)
                return c;
        return std::strong_ordering::equal;
    }

    namespace
    {
        // Structural order that treats all variables as equal, used to pick a
        // variable numbering that does not depend on the incoming numbering.
        std::weak_ordering shape(const Term &a, const Term &b)
        {
            if (auto c = a.kind() <=> b.kind(); c != 0)
                return c;
            if (a.is_variable())
                return std::weak_ordering::equivalent;
            if (auto c = a.functor().compare(b.functor()); c != 0)
                return c < 0 ? std::weak_ordering::less : std::weak_ordering::greater;
            if (auto c = a.arity() <=> b.arity(); c != 0)
                return c;
            for (std::size_t i = 0; i < a.arity(); ++i)
                if (auto c = shape(a.args()[i], b.args()[i]); c != 0)
                    return c;
            return std::weak_ordering::equivalent;
        }

        std::weak_ordering shape(const Literal &a, const Literal &b)
        {
            if (auto c = a.is_answer() <=> b.is_answer(); c != 0)
                return c;
            if (auto c = a.predicate.compare(b.predicate); c != 0)
                return c < 0 ? std::weak_ordering::less : std::weak_ordering::greater;
            if (auto c = a.positive <=> b.positive; c != 0)
                return c;
            if (auto c = a.args.size() <=> b.args.size(); c != 0)
                return c;
            for (std::size_t i = 0; i < a.args.size(); ++i)
                if (auto c = shape(a.args[i], b.args[i]); c != 0)
                    return c;
            return std::weak_ordering::equivalent;
        }

        Term renumber(const Term &t, std::map<VarId, VarId> &mapping)
        {
            if (t.is_ground())
                return t;
            if (t.is_variable())
            {
                auto [it, inserted] = mapping.try_emplace(t.var(), static_cast<VarId>(mapping.size()));
                return Term::variable(it->second);
            }
            std::vector<Term> args;
            args.reserve(t.arity());
            for (const auto &a : t.args())
                args.push_back(renumber(a, mapping));
            return Term::compound(t.functor(), std::move(args));
        }
    } // namespace

    Clause::Clause(std::vector<Literal> literals, Rational confidence, Origin origin, bool is_taxonomy)
        : confidence(std::move(confidence)), is_taxonomy(is_taxonomy), origin(origin)
    {
        canonicalize(std::move(literals), {});
    }

    Clause::Clause(std::vector<Literal> literals, const std::vector<bool> &conclusion, Rational confidence,
                   Origin origin, bool is_taxonomy)
        : confidence(std::move(confidence)), is_taxonomy(is_taxonomy), origin(origin)
    {
        canonicalize(std::move(literals), conclusion);
    }

    void Clause::canonicalize(std::vector<Literal> literals, std::vector<bool> conclusion)
    {
        struct Entry
        {
            Literal lit;
            bool conclusion;
        };
        std::vector<Entry> entries;
        entries.reserve(literals.size());
        for (std::size_t i = 0; i < literals.size(); ++i)
        {
            bool flag = i < conclusion.size() && conclusion[i] && !literals[i].positive;
            entries.push_back({std::move(literals[i]), flag});
        }
        std::stable_sort(entries.begin(), entries.end(),
                         [](const Entry &a, const Entry &b)
                         { return shape(a.lit, b.lit) < 0; });
        std::map<VarId, VarId> mapping;
        for (auto &e : entries)
            for (auto &arg : e.lit.args)
                arg = renumber(arg, mapping);
        std::stable_sort(entries.begin(), entries.end(), [](const Entry &a, const Entry &b)
                         { return a.lit < b.lit; });
        for (std::size_t i = 0; i < entries.size(); ++i)
        {
            if (!literals_.empty() && literals_.back() == entries[i].lit)
            {
                if (entries[i].conclusion)
                    negative_conclusion_.back() = true;
                continue;
            }
            literals_.push_back(std::move(entries[i].lit));
            negative_conclusion_.push_back(entries[i].conclusion);
        }
        // A unit is never used as a rule, so its flag carries no meaning.
        bool any_flag = std::find(negative_conclusion_.begin(), negative_conclusion_.end(), true) !=
                        negative_conclusion_.end();
        if (!any_flag || literals_.size() < 2)
            negative_conclusion_.clear();
    }

    bool Clause::only_answer_literals() const noexcept
    {
        return std::all_of(literals_.begin(), literals_.end(), [](const Literal &l)
                           { return l.is_answer(); });
    }

    std::size_t Clause::answer_literal_count() const noexcept
    {
        return static_cast<std::size_t>(std::count_if(literals_.begin(), literals_.end(), [](const Literal &l)
                                                      { return l.is_answer(); }));
    }

    bool Clause::is_positive() const noexcept
    {
        return std::none_of(literals_.begin(), literals_.end(), [](const Literal &l)
                            { return !l.positive && !l.is_answer(); });
    }

    bool Clause::is_tautology() const
    {
        for (std::size_t i = 0; i + 1 < literals_.size(); ++i)
            for (std::size_t j = i + 1; j < literals_.size(); ++j)
            {
                const auto &a = literals_[i];
                const auto &b = literals_[j];
                if (a.positive != b.positive && a.predicate == b.predicate && a.args == b.args)
                    return true;
            }
        return false;
    }

    bool Clause::is_ground() const noexcept
    {
        return std::all_of(literals_.begin(), literals_.end(), [](const Literal &l)
                           { return l.is_ground(); });
    }

    VarId Clause::max_var() const noexcept
    {
        VarId m = -1;
        for (const auto &l : literals_)
            m = std::max(m, l.max_var());
        return m;
    }

    int Clause::max_depth() const noexcept
    {
        int d = 0;
        for (const auto &l : literals_)
            d = std::max(d, l.depth());
        return d;
    }

    std::string to_string(const Literal &lit)
    {
        if (lit.is_equality())
            return to_string(lit.args[0]) + (lit.positive ? " = " : " != ") + to_string(lit.args[1]);
        std::string out = lit.positive ? "" : "-";
        out += lit.predicate;
        if (!lit.args.empty())
        {
            out += "(";
            for (std::size_t i = 0; i < lit.args.size(); ++i)
            {
                if (i)
                    out += ",";
                out += to_string(lit.args[i]);
            }
            out += ")";
        }
        return out;
    }

    std::string to_string(const Clause &clause)
    {
        if (clause.empty())
            return "false";
        std::vector<const Literal *> conditions, conclusions;
        for (std::size_t i = 0; i < clause.size(); ++i)
        {
            const Literal &l = clause.literals()[i];
            bool is_condition = !l.positive && !clause.is_negative_conclusion(i);
            (is_condition ? conditions : conclusions).push_back(&l);
        }
        auto join = [](const std::vector<const Literal *> &lits, std::string_view sep, bool strip_sign)
        {
            std::string out;
            for (std::size_t i = 0; i < lits.size(); ++i)
            {
                if (i)
                    out += sep;
                out += to_string(strip_sign ? lits[i]->negated() : *lits[i]);
            }
            return out;
        };
        if (conditions.empty() && clause.has_negative_conclusions())
        {
            // Keep the negative conclusions on the right by stating the
            // positive literals as negated conditions.
            std::vector<const Literal *> rest;
            for (const Literal *l : conclusions)
                (l->positive && !l->is_answer() ? conditions : rest).push_back(l);
            conclusions = std::move(rest);
        }
        if (conditions.empty() || conclusions.empty())
            return join(conditions.empty() ? conclusions : conditions, " V ", false);
        return join(conditions, " & ", true) + " => " + join(conclusions, " V ", false);
    }

} // namespace saturn
