#include "saturn/inference.hpp"

#include <algorithm>
#include <functional>
#include <iterator>

namespace saturn
{

    namespace
    {
        std::vector<NodeId> merged_inputs(const DerivationNode &a, const DerivationNode &b)
        {
            std::vector<NodeId> out;
            std::set_union(a.inputs.begin(), a.inputs.end(), b.inputs.begin(), b.inputs.end(),
                           std::back_inserter(out));
            return out;
        }

        DerivationNode conclusion(std::vector<Literal> lits, Rational confidence, Rule rule,
                                  const DerivationNode &a, const DerivationNode *b, Substitution unifier)
        {
            DerivationNode n;
            n.clause = Clause(std::move(lits), std::move(confidence), Origin::Derived);
            n.rule = rule;
            n.premises.push_back(a.id());
            if (b && b->id() != a.id())
                n.premises.push_back(b->id());
            n.unifier = std::move(unifier);
            n.question_lineage = a.question_lineage || (b && b->question_lineage);
            n.inputs = b ? merged_inputs(a, *b) : a.inputs;
            return n;
        }

        // Calls fn(subterm, rebuild) for every non-variable subterm occurrence,
        // where rebuild(replacement) yields the whole term with that occurrence
        // replaced.
        template <typename Fn>
        void for_each_position(const Term &t, const std::function<Term(const Term &)> &wrap, Fn &&fn)
        {
            if (t.is_variable())
                return;
            fn(t, wrap);
            for (std::size_t i = 0; i < t.arity(); ++i)
            {
                auto inner = [&, i](const Term &replacement)
                {
                    std::vector<Term> args = t.args();
                    args[i] = replacement;
                    return wrap(Term::compound(t.functor(), std::move(args)));
                };
                for_each_position(t.args()[i], inner, fn);
            }
        }
    } // namespace

    std::optional<DerivationNode> binary_resolve(const DerivationNode &a, const DerivationNode &b,
                                                 std::size_t lit_a, std::size_t lit_b)
    {
        const auto &la = a.clause.literals().at(lit_a);
        const auto &lb_orig = b.clause.literals().at(lit_b);
        if (la.positive == lb_orig.positive || la.is_answer() || lb_orig.is_answer() ||
            la.predicate != lb_orig.predicate)
            return std::nullopt;
        VarId offset = a.clause.max_var() + 1;
        Literal lb = lb_orig.shift_vars(offset);
        auto mgu = unify(la, lb);
        if (!mgu)
            return std::nullopt;
        std::vector<Literal> lits;
        lits.reserve(a.clause.size() + b.clause.size() - 2);
        for (std::size_t i = 0; i < a.clause.size(); ++i)
            if (i != lit_a)
                lits.push_back(mgu->apply(a.clause.literals()[i]));
        for (std::size_t j = 0; j < b.clause.size(); ++j)
            if (j != lit_b)
                lits.push_back(mgu->apply(b.clause.literals()[j].shift_vars(offset)));
        return conclusion(std::move(lits), a.step_confidence() * b.step_confidence(), Rule::BinaryResolution,
                          a, &b, std::move(*mgu));
    }

    std::optional<DerivationNode> factor(const DerivationNode &a, std::size_t lit1, std::size_t lit2)
    {
        if (lit1 == lit2)
            return std::nullopt;
        const auto &l1 = a.clause.literals().at(lit1);
        const auto &l2 = a.clause.literals().at(lit2);
        if (l1.positive != l2.positive)
            return std::nullopt;
        auto mgu = unify(l1, l2);
        if (!mgu)
            return std::nullopt;
        std::vector<Literal> lits;
        for (const auto &l : a.clause.literals())
            lits.push_back(mgu->apply(l));
        return conclusion(std::move(lits), a.step_confidence(), Rule::Factoring, a, nullptr, std::move(*mgu));
    }

    std::vector<DerivationNode> paramodulate(const DerivationNode &from, const DerivationNode &into)
    {
        std::vector<DerivationNode> out;
        VarId offset = from.clause.max_var() + 1;
        std::vector<Literal> target;
        for (const auto &l : into.clause.literals())
            target.push_back(l.shift_vars(offset));

        for (std::size_t k = 0; k < from.clause.size(); ++k)
        {
            const Literal &eq = from.clause.literals()[k];
            if (!eq.positive || !eq.is_equality())
                continue;
            for (int orientation = 0; orientation < 2; ++orientation)
            {
                const Term &lhs = eq.args[static_cast<std::size_t>(orientation)];
                const Term &rhs = eq.args[static_cast<std::size_t>(1 - orientation)];
                if (lhs.is_variable())
                    continue;
                for (std::size_t m = 0; m < target.size(); ++m)
                {
                    const Literal &lit = target[m];
                    if (lit.is_answer())
                        continue;
                    for (std::size_t argi = 0; argi < lit.args.size(); ++argi)
                    {
                        auto top = [&](const Term &replacement)
                        { return replacement; };
                        for_each_position(lit.args[argi], top, [&](const Term &sub, const auto &rebuild)
                                          {
                            auto mgu = unify(lhs, sub);
                            if (!mgu)
                                return;
                            std::vector<Literal> lits;
                            for (std::size_t i = 0; i < from.clause.size(); ++i)
                                if (i != k)
                                    lits.push_back(mgu->apply(from.clause.literals()[i]));
                            for (std::size_t i = 0; i < target.size(); ++i)
                            {
                                if (i != m)
                                {
                                    lits.push_back(mgu->apply(target[i]));
                                    continue;
                                }
                                Literal rewritten = lit;
                                rewritten.args[argi] = rebuild(rhs);
                                lits.push_back(mgu->apply(rewritten));
                            }
                            out.push_back(conclusion(std::move(lits), from.step_confidence() * into.step_confidence(),
                                                     Rule::Paramodulation, from, &into, std::move(*mgu))); });
                    }
                }
            }
        }
        return out;
    }

    std::optional<DerivationNode> equality_resolve(const DerivationNode &a, std::size_t lit)
    {
        const Literal &l = a.clause.literals().at(lit);
        if (l.positive || !l.is_equality())
            return std::nullopt;
        auto mgu = unify(l.args[0], l.args[1]);
        if (!mgu)
            return std::nullopt;
        std::vector<Literal> lits;
        for (std::size_t i = 0; i < a.clause.size(); ++i)
            if (i != lit)
                lits.push_back(mgu->apply(a.clause.literals()[i]));
        return conclusion(std::move(lits), a.step_confidence(), Rule::EqualityResolution, a, nullptr,
                          std::move(*mgu));
    }

} // namespace saturn
