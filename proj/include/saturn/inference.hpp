#pragma once

#include "saturn/derivation.hpp"

#include <optional>
#include <vector>

namespace saturn
{

    // Inference rules over derivation nodes. Results are unstored candidates:
    // their clause id is -1 until SearchState::add assigns one. Answer
    // literals are never resolved upon; they ride along in the conclusion.

    /// Resolves literal lit_a of a against literal lit_b of b (b is renamed
    /// apart). Confidence is the product of the premises' confidences.
    std::optional<DerivationNode> binary_resolve(const DerivationNode &a, const DerivationNode &b,
                                                 std::size_t lit_a, std::size_t lit_b);

    /// Merges two same-polarity literals of a by their mgu. Confidence is
    /// the premise's, unchanged.
    std::optional<DerivationNode> factor(const DerivationNode &a, std::size_t lit1, std::size_t lit2);

    /// All paramodulants obtained by rewriting one non-variable subterm
    /// occurrence of `into` with a positive equation of `from`, in either
    /// orientation. Confidence is the product. Empty when none apply.
    std::vector<DerivationNode> paramodulate(const DerivationNode &from, const DerivationNode &into);

    /// Removes a negative equation s != t whose sides unify.
    std::optional<DerivationNode> equality_resolve(const DerivationNode &a, std::size_t lit);

} // namespace saturn
