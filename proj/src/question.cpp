#include "saturn/kb_io.hpp"
#include "saturn/unify.hpp"

#include <map>

namespace saturn
{

    namespace
    {
        std::string term_with_names(const Term &t, const Question &q)
        {
            if (t.is_variable())
            {
                for (std::size_t i = 0; i < q.variables.size(); ++i)
                    if (q.variables[i] == t.var() && i < q.variable_names.size())
                        return q.variable_names[i];
                return variable_name(t.var());
            }
            if (t.arity() == 0)
                return t.functor();
            std::string out = t.functor() + "(";
            for (std::size_t i = 0; i < t.arity(); ++i)
            {
                if (i)
                    out += ",";
                out += term_with_names(t.args()[i], q);
            }
            return out + ")";
        }
    } // namespace

    std::string to_string(const Question &q)
    {
        std::string out;
        for (std::size_t i = 0; i < q.body.size(); ++i)
        {
            if (i)
                out += " & ";
            const Literal &l = q.body[i];
            if (l.is_equality())
            {
                out += term_with_names(l.args[0], q) + (l.positive ? " = " : " != ") + term_with_names(l.args[1], q);
                continue;
            }
            out += l.positive ? "" : "-";
            out += l.predicate;
            if (!l.args.empty())
            {
                out += "(";
                for (std::size_t j = 0; j < l.args.size(); ++j)
                {
                    if (j)
                        out += ",";
                    out += term_with_names(l.args[j], q);
                }
                out += ")";
            }
        }
        return out;
    }

    Clause build_positive_question_clause(const Question &q)
    {
        std::vector<Literal> lits;
        lits.reserve(q.body.size() + 1);
        for (const auto &l : q.body)
            lits.push_back(l.negated());
        std::vector<Term> answer_args;
        for (VarId v : q.variables)
            answer_args.push_back(Term::variable(v));
        lits.emplace_back(true, std::string(kAnswerPredicate), std::move(answer_args));
        return Clause(std::move(lits), 1, Origin::Question);
    }

    std::vector<Clause> build_negative_question_clauses(const Question &q, std::span<const Term> values)
    {
        if (values.size() != q.variables.size())
            throw std::invalid_argument("expected " + std::to_string(q.variables.size()) + " values, got " +
                                        std::to_string(values.size()));
        Substitution s;
        for (std::size_t i = 0; i < values.size(); ++i)
        {
            if (!values[i].is_ground())
                throw std::invalid_argument("value " + to_string(values[i]) + " is not ground");
            s.bind(q.variables[i], values[i]);
        }
        std::vector<Clause> out;
        out.reserve(q.body.size());
        for (const auto &l : q.body)
        {
            Literal inst = s.apply(l);
            if (!inst.is_ground())
                throw std::invalid_argument("question literal " + to_string(inst) + " is not ground after substitution");
            out.emplace_back(std::vector<Literal>{std::move(inst)}, 1, Origin::Question);
        }
        return out;
    }

} // namespace saturn
