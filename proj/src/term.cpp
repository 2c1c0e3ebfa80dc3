#include "saturn/term.hpp"

#include <algorithm>
#include <array>

namespace saturn
{

    struct Term::Node
    {
        Kind kind;
        VarId var = -1;
        std::string name;
        std::vector<Term> args;
        bool ground = true;
        int depth = 1;
        VarId max_var = -1;
    };

    Term::Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    Term Term::variable(VarId id)
    {
        auto n = std::make_shared<Node>();
        n->kind = Kind::Variable;
        n->var = id;
        n->ground = false;
        n->max_var = id;
        return Term(std::move(n));
    }

    Term Term::constant(std::string name)
    {
        auto n = std::make_shared<Node>();
        n->kind = Kind::Constant;
        n->name = std::move(name);
        return Term(std::move(n));
    }

    Term Term::compound(std::string functor, std::vector<Term> args)
    {
        auto n = std::make_shared<Node>();
        n->kind = Kind::Compound;
        n->name = std::move(functor);
        int depth = 0;
        for (const auto &a : args)
        {
            n->ground = n->ground && a.is_ground();
            depth = std::max(depth, a.depth());
            n->max_var = std::max(n->max_var, a.max_var());
        }
        n->depth = depth + 1;
        n->args = std::move(args);
        return Term(std::move(n));
    }

    Term Term::make(std::string functor, std::vector<Term> args)
    {
        if (args.empty())
            return constant(std::move(functor));
        return compound(std::move(functor), std::move(args));
    }

    Term::Kind Term::kind() const noexcept { return node_->kind; }
    VarId Term::var() const noexcept { return node_->var; }
    const std::string &Term::functor() const noexcept { return node_->name; }
    const std::vector<Term> &Term::args() const noexcept { return node_->args; }
    bool Term::is_ground() const noexcept { return node_->ground; }
    int Term::depth() const noexcept { return node_->depth; }
    VarId Term::max_var() const noexcept { return node_->max_var; }

    bool Term::occurs(VarId v) const
    {
        if (is_ground() || max_var() < v)
            return false;
        if (is_variable())
            return var() == v;
        return std::any_of(args().begin(), args().end(), [v](const Term &a)
                           { return a.occurs(v); });
    }

    Term Term::shift_vars(VarId offset) const
    {
        if (is_ground() || offset == 0)
            return *this;
        if (is_variable())
            return variable(var() + offset);
        std::vector<Term> shifted;
        shifted.reserve(args().size());
        for (const auto &a : args())
            shifted.push_back(a.shift_vars(offset));
        return compound(functor(), std::move(shifted));
    }

    bool operator==(const Term &a, const Term &b)
    {
        return (a <=> b) == std::strong_ordering::equal;
    }

    std::strong_ordering operator<=>(const Term &a, const Term &b)
    {
        if (a.node_ == b.node_)
            return std::strong_ordering::equal;
        if (auto c = a.kind() <=> b.kind(); c != 0)
            return c;
        if (a.is_variable())
            return a.var() <=> b.var();
        if (auto c = a.functor().compare(b.functor()); c != 0)
            return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        if (auto c = a.arity() <=> b.arity(); c != 0)
            return c;
        for (std::size_t i = 0; i < a.arity(); ++i)
            if (auto c = a.args()[i] <=> b.args()[i]; c != 0)
                return c;
        return std::strong_ordering::equal;
    }

    std::string variable_name(VarId id)
    {
        static constexpr std::array<const char *, 5> names = {"X", "Y", "Z", "U", "W"};
        if (id >= 0 && id < static_cast<VarId>(names.size()))
            return names[static_cast<std::size_t>(id)];
        return "X" + std::to_string(id);
    }

    std::string to_string(const Term &t)
    {
        switch (t.kind())
        {
        case Term::Kind::Variable:
            return variable_name(t.var());
        case Term::Kind::Constant:
            return t.functor();
        case Term::Kind::Compound:
            break;
        }
        std::string out = t.functor() + "(";
        for (std::size_t i = 0; i < t.arity(); ++i)
        {
            if (i)
                out += ",";
            out += to_string(t.args()[i]);
        }
        return out + ")";
    }

} // namespace saturn
