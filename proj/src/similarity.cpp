#include "saturn/similarity.hpp"

#include <stdexcept>

namespace saturn
{

    std::vector<Clause> expand_similarities(std::span<const SimilarityDecl> decls, const Rational &scale)
    {
        std::vector<Clause> out;
        for (const auto &d : decls)
        {
            if (d.arity_a >= 0 && d.arity_b >= 0 && d.arity_a != d.arity_b)
                throw std::invalid_argument("similarity between " + d.symbol_a + "/" + std::to_string(d.arity_a) +
                                            " and " + d.symbol_b + "/" + std::to_string(d.arity_b) +
                                            ": arity mismatch");
            int arity = std::max(d.arity_a, d.arity_b);
            if (arity < 0)
                continue;
            Rational confidence = d.strength * scale;
            if (confidence > 1)
                confidence = 1;
            std::vector<Term> vars;
            for (int i = 0; i < arity; ++i)
                vars.push_back(Term::variable(i));
            auto implication = [&](const std::string &from, const std::string &to)
            {
                return Clause({Literal(false, from, vars), Literal(true, to, vars)}, confidence, Origin::Similarity);
            };
            out.push_back(implication(d.symbol_a, d.symbol_b));
            out.push_back(implication(d.symbol_b, d.symbol_a));
        }
        return out;
    }

} // namespace saturn
