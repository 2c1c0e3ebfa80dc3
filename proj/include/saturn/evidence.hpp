#pragma once

#include "saturn/derivation.hpp"
#include "saturn/rational.hpp"

#include <span>
#include <vector>

namespace saturn
{

    /// One derivation of an answer: its answer node, the derivation's
    /// confidence and the non-question input clauses it rests on.
    struct EvidenceEntry
    {
        NodeId node = -1;
        Rational confidence;
        std::vector<NodeId> inputs;
    };

    struct EvidenceSet
    {
        /// Answer value vector; empty for variable-free questions.
        std::vector<Term> target;
        std::vector<EvidenceEntry> derivations;
    };

    /// 1 - |A ∩ B| / |A ∪ B| over sorted input-id sets; 0 when both are empty.
    Rational pairwise_independence(std::span<const NodeId> a, std::span<const NodeId> b);
    Rational pairwise_independence(const EvidenceEntry &a, const EvidenceEntry &b);

    /// max(c1 + c2*i*h - c1*c2*i*h, c1*i*h + c2 - c1*c2*i*h)
    Rational cumulative_pair(const Rational &c1, const Rational &c2, const Rational &i, const Rational &h);

    /**
     * Folds all derivations into one confidence. Entries are taken in
     * descending confidence (ties by node id); entries whose input set
     * repeats an earlier one add nothing. Each further entry is combined
     * with cumulative_pair, using its independence from the union of the
     * inputs folded so far. An empty set yields 0.
     */
    Rational cumulative_confidence(const EvidenceSet &evidence, const Rational &h);

    enum class Sign
    {
        Positive,
        Negative
    };

    std::string_view to_string(Sign sign);

    struct SignedConfidence
    {
        Sign sign = Sign::Positive;
        Rational confidence;
    };

    /// Positive with cp - cn when cp >= cn, otherwise negative with cn - cp.
    SignedConfidence combine_sign(const Rational &cp, const Rational &cn);

} // namespace saturn
