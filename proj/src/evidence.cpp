#include "saturn/evidence.hpp"

#include <algorithm>
#include <iterator>

namespace saturn
{

    Rational pairwise_independence(std::span<const NodeId> a, std::span<const NodeId> b)
    {
        std::vector<NodeId> both, either;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
        std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(either));
        if (either.empty())
            return 0;
        return Rational(1) - Rational(static_cast<long>(both.size()), static_cast<long>(either.size()));
    }

    Rational pairwise_independence(const EvidenceEntry &a, const EvidenceEntry &b)
    {
        return pairwise_independence(a.inputs, b.inputs);
    }

    Rational cumulative_pair(const Rational &c1, const Rational &c2, const Rational &i, const Rational &h)
    {
        Rational ih = i * h;
        Rational joint = c1 * c2 * ih;
        Rational first = c1 + c2 * ih - joint;
        Rational second = c1 * ih + c2 - joint;
        return std::max(first, second);
    }

    Rational cumulative_confidence(const EvidenceSet &evidence, const Rational &h)
    {
        std::vector<const EvidenceEntry *> order;
        for (const auto &e : evidence.derivations)
            order.push_back(&e);
        if (order.empty())
            return 0;
        std::sort(order.begin(), order.end(), [](const EvidenceEntry *a, const EvidenceEntry *b)
                  {
                      if (a->confidence != b->confidence)
                          return a->confidence > b->confidence;
                      return a->node < b->node; });

        Rational acc = order.front()->confidence;
        std::vector<NodeId> folded = order.front()->inputs;
        std::vector<const std::vector<NodeId> *> seen{&order.front()->inputs};
        for (std::size_t k = 1; k < order.size(); ++k)
        {
            const EvidenceEntry &next = *order[k];
            bool repeat = std::any_of(seen.begin(), seen.end(), [&](const std::vector<NodeId> *s)
                                      { return *s == next.inputs; });
            if (repeat)
                continue;
            seen.push_back(&next.inputs);
            Rational i = pairwise_independence(folded, next.inputs);
            acc = cumulative_pair(acc, next.confidence, i, h);
            std::vector<NodeId> merged;
            std::set_union(folded.begin(), folded.end(), next.inputs.begin(), next.inputs.end(),
                           std::back_inserter(merged));
            folded = std::move(merged);
        }
        return acc;
    }

    std::string_view to_string(Sign sign)
    {
        return sign == Sign::Positive ? "positive" : "negative";
    }

    SignedConfidence combine_sign(const Rational &cp, const Rational &cn)
    {
        Rational diff = cp - cn;
        if (diff < 0)
            return {Sign::Negative, -diff};
        return {Sign::Positive, diff};
    }

} // namespace saturn
