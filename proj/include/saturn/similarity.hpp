#pragma once

#include "saturn/clause.hpp"

#include <span>
#include <string>
#include <vector>

namespace saturn
{

    /// "similar king queen : 0.8" names two predicate symbols and a strength in (0,1).
    struct SimilarityDecl
    {
        std::string symbol_a;
        std::string symbol_b;
        /// Arities as seen in the knowledge base; -1 when a symbol is unused.
        int arity_a = -1;
        int arity_b = -1;
        Rational strength;
    };

    /// Expands each declaration into the pair a(X..) => b(X..) and
    /// b(X..) => a(X..), origin Similarity, confidence strength * scale.
    /// Both clauses have confidence below 1 and therefore act as default
    /// rules. Throws std::invalid_argument on an arity mismatch; declarations
    /// whose symbols never occur produce nothing.
    std::vector<Clause> expand_similarities(std::span<const SimilarityDecl> decls, const Rational &scale = 1);

} // namespace saturn
