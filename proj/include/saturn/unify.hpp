#pragma once

#include "saturn/clause.hpp"
#include "saturn/term.hpp"

#include <map>
#include <optional>

namespace saturn
{

    /**
     * Finite map from variables to terms.
     *
     * Bindings may be triangular while a unifier is being built; apply()
     * follows chains, and normalized() returns the equivalent idempotent map.
     */
    class Substitution
    {
    public:
        bool empty() const noexcept { return bindings_.empty(); }
        std::size_t size() const noexcept { return bindings_.size(); }
        const std::map<VarId, Term> &bindings() const noexcept { return bindings_; }

        const Term *lookup(VarId v) const;
        /// Precondition: v is unbound.
        void bind(VarId v, Term t);

        Term apply(const Term &t) const;
        Literal apply(const Literal &lit) const;
        Substitution normalized() const;

        friend bool operator==(const Substitution &, const Substitution &) = default;

    private:
        std::map<VarId, Term> bindings_;
    };

    std::string to_string(const Substitution &s);

    /// Most general unifier extending `start`, with occurs check.
    std::optional<Substitution> unify(const Term &a, const Term &b, Substitution start = {});

    /// Unifies the atoms of two literals, ignoring polarity. Both literals are
    /// read in one variable namespace; rename apart first if they come from
    /// different clauses. The result is idempotent.
    std::optional<Substitution> unify(const Literal &a, const Literal &b);

    /// One-way matching: binds only pattern variables; target variables are
    /// treated as constants. Extends `bindings` on success.
    bool match(const Term &pattern, const Term &target, std::map<VarId, Term> &bindings);

    /// Theta-subsumption on literal sets. Confidence is not consulted. Returns
    /// false when the search exceeds a fixed step budget, which only costs
    /// redundancy elimination.
    bool subsumes(const Clause &general, const Clause &specific);

    /// Applies s to every literal and re-canonicalizes (merging duplicates).
    /// Confidence, taxonomy flag, origin and id are copied unchanged.
    Clause apply_substitution(const Clause &c, const Substitution &s);

} // namespace saturn
