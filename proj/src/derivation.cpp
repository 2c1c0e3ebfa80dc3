#include "saturn/derivation.hpp"

#include <algorithm>

namespace saturn
{

    std::string_view to_string(Rule rule)
    {
        switch (rule)
        {
        case Rule::Input:
            return "input";
        case Rule::BinaryResolution:
            return "binaryResolution";
        case Rule::Factoring:
            return "factoring";
        case Rule::Paramodulation:
            return "paramodulation";
        case Rule::EqualityResolution:
            return "equalityResolution";
        }
        return "?";
    }

    SearchState::SearchState(std::span<const Clause> inputs)
    {
        for (const auto &c : inputs)
        {
            DerivationNode n;
            n.clause = c;
            add(std::move(n));
        }
    }

    NodeId SearchState::add(DerivationNode node)
    {
        NodeId id = static_cast<NodeId>(nodes_.size());
        node.clause.id = id;
        if (node.rule == Rule::Input)
        {
            node.premises.clear();
            node.question_lineage = node.clause.origin == Origin::Question;
            node.inputs.clear();
            if (!node.question_lineage)
                node.inputs.push_back(id);
        }
        nodes_.push_back(std::move(node));
        active_.push_back(true);
        active_list_.push_back(id);
        blocked.push_back(false);
        return id;
    }

    void SearchState::deactivate(NodeId id)
    {
        auto idx = static_cast<std::size_t>(id);
        if (!active_.at(idx))
            return;
        active_[idx] = false;
        active_list_.erase(std::find(active_list_.begin(), active_list_.end(), id));
        ++stats.deactivated;
    }

    void SearchState::push_usable(NodeId id)
    {
        const auto &n = node(id);
        usable_.emplace(n.clause.non_answer_count(), n.question_lineage ? 0 : 1, id);
    }

    NodeId SearchState::pop_usable()
    {
        while (!usable_.empty())
        {
            NodeId id = std::get<2>(*usable_.begin());
            usable_.erase(usable_.begin());
            if (is_active(id))
                return id;
        }
        return -1;
    }

    std::vector<NodeId> SearchState::derivation(NodeId id) const
    {
        std::vector<bool> seen(nodes_.size(), false);
        std::vector<NodeId> stack{id};
        std::vector<NodeId> out;
        while (!stack.empty())
        {
            NodeId cur = stack.back();
            stack.pop_back();
            if (seen[static_cast<std::size_t>(cur)])
                continue;
            seen[static_cast<std::size_t>(cur)] = true;
            out.push_back(cur);
            for (NodeId p : node(cur).premises)
                stack.push_back(p);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

} // namespace saturn
