#pragma once

#include "saturn/rational.hpp"
#include "saturn/term.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace saturn
{

    /// Reserved predicate carrying the values of a question's existential
    /// variables. User knowledge bases may not mention it.
    inline constexpr std::string_view kAnswerPredicate = "answer";
    inline constexpr std::string_view kEqualityPredicate = "=";

    enum class Origin
    {
        Kb,
        Assumption,
        Question,
        Similarity,
        Derived
    };

    std::string_view to_string(Origin origin);

    struct Literal
    {
        bool positive = true;
        std::string predicate;
        std::vector<Term> args;

        Literal() = default;
        Literal(bool positive, std::string predicate, std::vector<Term> args = {})
            : positive(positive), predicate(std::move(predicate)), args(std::move(args)) {}

        bool is_answer() const noexcept { return predicate == kAnswerPredicate; }
        bool is_equality() const noexcept { return predicate == kEqualityPredicate && args.size() == 2; }
        Literal negated() const { return Literal(!positive, predicate, args); }
        bool is_ground() const noexcept;
        VarId max_var() const noexcept;
        int depth() const noexcept;
        Literal shift_vars(VarId offset) const;

        friend bool operator==(const Literal &a, const Literal &b) = default;
        /// Canonical order: answer literals last, then predicate, negatives
        /// before positives, then arguments.
        friend std::strong_ordering operator<=>(const Literal &a, const Literal &b);
    };

    /**
     * A disjunction of literals with a confidence in [0,1].
     *
     * The literal list is kept canonical: sorted, duplicate-free, and with
     * variables renumbered from 0 in order of first occurrence. Two clauses
     * built from the same literals in any order compare equal.
     */
    class Clause
    {
    public:
        Clause() = default;
        explicit Clause(std::vector<Literal> literals, Rational confidence = 1,
                        Origin origin = Origin::Kb, bool is_taxonomy = false);
        /// `conclusion[i]` marks literal i as written on the right of `=>`.
        /// Only negative conclusions are kept; see is_negative_conclusion().
        Clause(std::vector<Literal> literals, const std::vector<bool> &conclusion, Rational confidence,
               Origin origin, bool is_taxonomy);

        const std::vector<Literal> &literals() const noexcept { return literals_; }
        std::size_t size() const noexcept { return literals_.size(); }
        bool empty() const noexcept { return literals_.empty(); }

        /// True when every literal is an answer literal (vacuously for the empty clause).
        bool only_answer_literals() const noexcept;
        std::size_t answer_literal_count() const noexcept;
        std::size_t non_answer_count() const noexcept { return size() - answer_literal_count(); }
        /// No negative non-answer literal.
        bool is_positive() const noexcept;
        bool is_tautology() const;
        bool is_ground() const noexcept;
        VarId max_var() const noexcept;
        int max_depth() const noexcept;
        bool same_literals(const Clause &other) const { return literals_ == other.literals_; }

        /// True for a negative literal that the source rule states as a
        /// conclusion, as in `a(X) => -b(X)`. Default rules are not used
        /// contrapositively through such literals.
        bool is_negative_conclusion(std::size_t i) const noexcept
        {
            return i < negative_conclusion_.size() && negative_conclusion_[i];
        }
        bool has_negative_conclusions() const noexcept { return !negative_conclusion_.empty(); }

        Rational confidence{1};
        bool is_taxonomy = false;
        Origin origin = Origin::Kb;
        /// Assigned when the clause enters a search state; -1 until then.
        int id = -1;

    private:
        void canonicalize(std::vector<Literal> literals, std::vector<bool> conclusion);

        std::vector<Literal> literals_;
        std::vector<bool> negative_conclusion_;
    };

    std::string to_string(const Literal &lit);
    /// Implication form where possible: "a(X) & b(X) => c(X) V d(X)".
    std::string to_string(const Clause &clause);

} // namespace saturn
