#pragma once

#include "saturn/clause.hpp"
#include "saturn/similarity.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace saturn
{

    /// An existentially quantified conjunction of literals, in prefix form.
    struct Question
    {
        /// Existential variables in order of first occurrence in the body.
        std::vector<VarId> variables;
        /// User-facing names of `variables`, same order.
        std::vector<std::string> variable_names;
        std::vector<Literal> body;

        bool is_ground() const noexcept { return variables.empty(); }
    };

    std::string to_string(const Question &q);

    /// Optional overrides read from a [params] section.
    struct QueryParams
    {
        std::optional<Rational> h;
        std::optional<Rational> split;
        std::optional<double> time;
        std::optional<std::size_t> steps;
    };

    struct QueryFile
    {
        std::vector<Clause> kb;
        std::vector<Clause> assumptions;
        Question question;
        std::vector<SimilarityDecl> similarities;
        QueryParams params;
    };

    class ParseError : public std::runtime_error
    {
    public:
        ParseError(std::size_t line, std::size_t column, const std::string &message);

        std::size_t line() const noexcept { return line_; }
        std::size_t column() const noexcept { return column_; }
        const std::string &detail() const noexcept { return detail_; }

    private:
        std::size_t line_;
        std::size_t column_;
        std::string detail_;
    };

    /**
     * Reads the line-oriented query format.
     *
     * Sections are introduced by [kb], [assumptions], [question], [params]
     * and [similarity]; statements before any header belong to [kb]. `#`
     * starts a comment. A clause is written either as a disjunction
     * (`-a(X) V b(X)`, `|` also accepted) or an implication
     * (`a(X) & b(X) => c(X) V d(X)`, `a(X) => b(X) & c(X)`,
     * `a(X) <=> b(X)`), optionally followed by `: <confidence>` and
     * `!taxonomy`. Equalities are written `s = t` and `s != t`.
     *
     * Throws ParseError carrying a 1-based line and column.
     */
    QueryFile parse_query_file(std::string_view text);

    /// Writes a file that parse_query_file reads back to the same clauses.
    std::string serialize_query_file(const QueryFile &file);

    /// -L1 V ... V -Lk V answer(X1,...,Xn), origin Question, confidence 1.
    Clause build_positive_question_clause(const Question &q);

    /// Unit clauses L1(values), ..., Lk(values), origin Question, confidence 1.
    /// Throws std::invalid_argument when a value is not ground or the vector
    /// length does not match the question's variables.
    std::vector<Clause> build_negative_question_clauses(const Question &q, std::span<const Term> values);

} // namespace saturn
