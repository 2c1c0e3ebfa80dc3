#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace saturn
{

    /// Variables are numbered per clause; two clauses never share variable
    /// identity, so callers rename one side apart before unifying.
    using VarId = int;

    /**
     * Immutable first-order term: a variable, a constant, or a compound
     * functor application. Copies share structure.
     */
    class Term
    {
    public:
        enum class Kind : std::uint8_t
        {
            Variable,
            Constant,
            Compound
        };

        static Term variable(VarId id);
        static Term constant(std::string name);
        static Term compound(std::string functor, std::vector<Term> args);
        /// Constant when args is empty, compound otherwise.
        static Term make(std::string functor, std::vector<Term> args = {});

        Kind kind() const noexcept;
        bool is_variable() const noexcept { return kind() == Kind::Variable; }
        VarId var() const noexcept;
        /// Functor or constant name; empty for variables.
        const std::string &functor() const noexcept;
        const std::vector<Term> &args() const noexcept;
        std::size_t arity() const noexcept { return args().size(); }

        bool is_ground() const noexcept;
        /// Constants and variables have depth 1.
        int depth() const noexcept;
        /// Largest variable id occurring in the term, -1 if ground.
        VarId max_var() const noexcept;
        bool occurs(VarId v) const;

        Term shift_vars(VarId offset) const;

        friend bool operator==(const Term &a, const Term &b);
        friend std::strong_ordering operator<=>(const Term &a, const Term &b);

    private:
        struct Node;
        explicit Term(std::shared_ptr<const Node> node);
        std::shared_ptr<const Node> node_;
    };

    /// Display name of a numbered variable: X, Y, Z, U, W, then X5, X6, ...
    std::string variable_name(VarId id);

    std::string to_string(const Term &t);

} // namespace saturn
