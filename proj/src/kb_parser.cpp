#include "saturn/kb_io.hpp"

#include <cctype>
#include <map>
#include <string>

namespace saturn
{

    ParseError::ParseError(std::size_t line, std::size_t column, const std::string &message)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          line_(line), column_(column), detail_(message)
    {
    }

    namespace
    {
        enum class Tok
        {
            Ident,
            Number,
            LParen,
            RParen,
            Comma,
            Minus,
            Amp,
            Bar,
            Implies,
            Iff,
            Eq,
            Neq,
            Colon,
            Bang,
            End
        };

        struct Token
        {
            Tok kind;
            std::string text;
            std::size_t column;
        };

        bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
        bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
        bool is_variable_name(const std::string &s) { return !s.empty() && (std::isupper(static_cast<unsigned char>(s[0])) || s[0] == '_'); }

        std::vector<Token> tokenize(std::string_view line, std::size_t line_no)
        {
            std::vector<Token> out;
            std::size_t i = 0;
            while (i < line.size())
            {
                char c = line[i];
                std::size_t col = i + 1;
                if (std::isspace(static_cast<unsigned char>(c)))
                {
                    ++i;
                    continue;
                }
                if (ident_start(c))
                {
                    std::size_t j = i;
                    while (j < line.size() && ident_char(line[j]))
                        ++j;
                    out.push_back({Tok::Ident, std::string(line.substr(i, j - i)), col});
                    i = j;
                    continue;
                }
                if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
                {
                    std::size_t j = i;
                    while (j < line.size() && (std::isdigit(static_cast<unsigned char>(line[j])) || line[j] == '.' || line[j] == '/'))
                        ++j;
                    out.push_back({Tok::Number, std::string(line.substr(i, j - i)), col});
                    i = j;
                    continue;
                }
                auto starts = [&](std::string_view s)
                { return line.substr(i, s.size()) == s; };
                if (starts("<=>"))
                {
                    out.push_back({Tok::Iff, "<=>", col});
                    i += 3;
                }
                else if (starts("=>"))
                {
                    out.push_back({Tok::Implies, "=>", col});
                    i += 2;
                }
                else if (starts("!="))
                {
                    out.push_back({Tok::Neq, "!=", col});
                    i += 2;
                }
                else
                {
                    Tok kind;
                    switch (c)
                    {
                    case '(':
                        kind = Tok::LParen;
                        break;
                    case ')':
                        kind = Tok::RParen;
                        break;
                    case ',':
                        kind = Tok::Comma;
                        break;
                    case '-':
                    case '~':
                        kind = Tok::Minus;
                        break;
                    case '&':
                        kind = Tok::Amp;
                        break;
                    case '|':
                        kind = Tok::Bar;
                        break;
                    case '=':
                        kind = Tok::Eq;
                        break;
                    case ':':
                        kind = Tok::Colon;
                        break;
                    case '!':
                        kind = Tok::Bang;
                        break;
                    default:
                        throw ParseError(line_no, col, std::string("unexpected character '") + c + "'");
                    }
                    out.push_back({kind, std::string(1, c), col});
                    ++i;
                }
            }
            out.push_back({Tok::End, "", line.size() + 1});
            return out;
        }

        enum class Section
        {
            Kb,
            Assumptions,
            Question,
            Params,
            Similarity
        };

        struct SymbolInfo
        {
            std::size_t arity;
            std::size_t line;
        };

        struct Signature
        {
            std::map<std::string, SymbolInfo> predicates;
            std::map<std::string, SymbolInfo> functions;
        };

        enum class Connective
        {
            None,
            And,
            Or
        };

        struct LiteralList
        {
            std::vector<Literal> literals;
            Connective connective = Connective::None;
        };

        class LineParser
        {
        public:
            LineParser(std::string_view line, std::size_t line_no, Signature &sig)
                : tokens_(tokenize(line, line_no)), line_no_(line_no), sig_(sig) {}

            std::vector<Clause> statement(Origin origin)
            {
                LiteralList lhs = literal_list();
                // Literals paired with a flag that marks rule conclusions.
                std::vector<std::pair<std::vector<Literal>, std::vector<bool>>> clauses;
                auto add = [&](std::vector<Literal> conditions, const std::vector<Literal> &conclusions)
                {
                    std::vector<bool> flags(conditions.size(), false);
                    flags.resize(conditions.size() + conclusions.size(), true);
                    conditions.insert(conditions.end(), conclusions.begin(), conclusions.end());
                    clauses.emplace_back(std::move(conditions), std::move(flags));
                };
                if (peek().kind == Tok::Implies || peek().kind == Tok::Iff)
                {
                    Token arrow = next();
                    if (lhs.connective == Connective::Or)
                        fail(arrow, "left side of an implication must be a conjunction");
                    LiteralList rhs = literal_list();
                    std::vector<Literal> negated_lhs;
                    for (const auto &l : lhs.literals)
                        negated_lhs.push_back(l.negated());
                    if (arrow.kind == Tok::Implies)
                    {
                        if (rhs.connective == Connective::And)
                        {
                            for (const auto &r : rhs.literals)
                                add(negated_lhs, {r});
                        }
                        else
                        {
                            add(negated_lhs, rhs.literals);
                        }
                    }
                    else
                    {
                        if (rhs.connective == Connective::And)
                            fail(arrow, "right side of a biconditional must be a literal or a disjunction");
                        add(negated_lhs, rhs.literals);
                        for (const auto &r : rhs.literals)
                            for (const auto &l : lhs.literals)
                                add({r.negated()}, {l});
                    }
                }
                else if (lhs.connective == Connective::And)
                {
                    for (const auto &l : lhs.literals)
                        clauses.push_back({{l}, {}});
                }
                else
                {
                    clauses.push_back({lhs.literals, {}});
                }

                Rational confidence = 1;
                bool taxonomy = false;
                bool have_confidence = false;
                std::size_t confidence_column = 0;
                while (peek().kind != Tok::End)
                {
                    Token t = next();
                    if (t.kind == Tok::Colon && !have_confidence)
                    {
                        Token num = next();
                        if (num.kind != Tok::Number)
                            fail(num, "expected a confidence after ':'");
                        confidence = number(num);
                        if (!in_unit_interval(confidence))
                            fail(num, "confidence " + num.text + " is outside [0,1]");
                        have_confidence = true;
                        confidence_column = num.column;
                    }
                    else if (t.kind == Tok::Bang && !taxonomy)
                    {
                        Token flag = next();
                        if (flag.kind != Tok::Ident || flag.text != "taxonomy")
                            fail(flag, "unknown flag; expected '!taxonomy'");
                        taxonomy = true;
                    }
                    else
                    {
                        fail(t, "unexpected '" + t.text + "'");
                    }
                }
                if (taxonomy && confidence < 1)
                    throw ParseError(line_no_, confidence_column, "a taxonomy rule must have confidence 1");

                std::vector<Clause> out;
                for (auto &[lits, flags] : clauses)
                    out.emplace_back(std::move(lits), flags, confidence, origin, taxonomy);
                return out;
            }

            Question question()
            {
                LiteralList body = literal_list();
                if (body.connective == Connective::Or)
                    fail(tokens_.front(), "a question is a conjunction of literals joined by '&'");
                if (peek().kind != Tok::End)
                    fail(peek(), "unexpected '" + peek().text + "' in question");
                Question q;
                q.body = std::move(body.literals);
                std::vector<std::pair<VarId, std::string>> ordered(vars_.size());
                for (const auto &[name, id] : vars_)
                    ordered[static_cast<std::size_t>(id)] = {id, name};
                for (auto &[id, name] : ordered)
                {
                    q.variables.push_back(id);
                    q.variable_names.push_back(name);
                }
                return q;
            }

            std::pair<std::string, Token> param()
            {
                Token key = next();
                if (key.kind != Tok::Ident)
                    fail(key, "expected a parameter name");
                Token eq = next();
                if (eq.kind != Tok::Eq && eq.kind != Tok::Colon)
                    fail(eq, "expected '=' after parameter name");
                Token value = next();
                if (value.kind != Tok::Number)
                    fail(value, "expected a number");
                if (peek().kind != Tok::End)
                    fail(peek(), "unexpected '" + peek().text + "'");
                return {key.text, value};
            }

            SimilarityDecl similarity()
            {
                Token kw = next();
                if (kw.kind != Tok::Ident || kw.text != "similar")
                    fail(kw, "expected 'similar <symbol> <symbol> : <strength>'");
                Token a = next();
                Token b = next();
                if (a.kind != Tok::Ident || is_variable_name(a.text))
                    fail(a, "expected a predicate symbol");
                if (b.kind != Tok::Ident || is_variable_name(b.text))
                    fail(b, "expected a predicate symbol");
                if (a.text == b.text)
                    fail(b, "a symbol cannot be declared similar to itself");
                check_not_reserved(a);
                check_not_reserved(b);
                Token colon = next();
                if (colon.kind != Tok::Colon)
                    fail(colon, "expected ':' before the similarity strength");
                Token s = next();
                if (s.kind != Tok::Number)
                    fail(s, "expected a similarity strength");
                Rational strength = number(s);
                if (strength <= 0 || strength >= 1)
                    fail(s, "similarity strength must lie strictly between 0 and 1");
                if (peek().kind != Tok::End)
                    fail(peek(), "unexpected '" + peek().text + "'");
                return SimilarityDecl{a.text, b.text, -1, -1, strength};
            }

            [[noreturn]] void fail(const Token &t, const std::string &message) const
            {
                throw ParseError(line_no_, t.column, message);
            }

            Rational number(const Token &t) const
            {
                try
                {
                    return parse_rational(t.text);
                }
                catch (const std::invalid_argument &e)
                {
                    fail(t, e.what());
                }
            }

        private:
            const Token &peek() const { return tokens_[pos_]; }
            Token next()
            {
                const Token &t = tokens_[pos_];
                if (t.kind != Tok::End)
                    ++pos_;
                return t;
            }

            LiteralList literal_list()
            {
                LiteralList out;
                out.literals.push_back(literal());
                while (true)
                {
                    Connective c = Connective::None;
                    const Token &t = peek();
                    if (t.kind == Tok::Amp)
                        c = Connective::And;
                    else if (t.kind == Tok::Bar || (t.kind == Tok::Ident && t.text == "V"))
                        c = Connective::Or;
                    else
                        break;
                    if (out.connective != Connective::None && out.connective != c)
                        fail(t, "cannot mix '&' and 'V' without an implication");
                    out.connective = c;
                    next();
                    out.literals.push_back(literal());
                }
                return out;
            }

            Literal literal()
            {
                bool positive = true;
                while (peek().kind == Tok::Minus)
                {
                    next();
                    positive = !positive;
                }
                Token start = peek();
                Term lhs = Term::constant("");
                if (start.kind == Tok::Ident && !is_variable_name(start.text))
                {
                    next();
                    std::vector<Term> args = arguments();
                    if (peek().kind != Tok::Eq && peek().kind != Tok::Neq)
                    {
                        check_not_reserved(start);
                        register_symbol(sig_.predicates, start.text, args.size(), start, "predicate");
                        return Literal(positive, start.text, std::move(args));
                    }
                    register_symbol(sig_.functions, start.text, args.size(), start, "function");
                    lhs = Term::make(start.text, std::move(args));
                }
                else
                {
                    lhs = term();
                    if (peek().kind != Tok::Eq && peek().kind != Tok::Neq)
                        fail(start, "expected a predicate, found '" + start.text + "'");
                }
                bool eq = next().kind == Tok::Eq;
                Term rhs = term();
                return Literal(positive == eq, std::string(kEqualityPredicate), {lhs, rhs});
            }

            std::vector<Term> arguments()
            {
                std::vector<Term> args;
                if (peek().kind != Tok::LParen)
                    return args;
                next();
                args.push_back(term());
                while (peek().kind == Tok::Comma)
                {
                    next();
                    args.push_back(term());
                }
                Token close = next();
                if (close.kind != Tok::RParen)
                    fail(close, "expected ')'");
                return args;
            }

            Term term()
            {
                Token t = next();
                if (t.kind == Tok::Number)
                {
                    for (char c : t.text)
                        if (!std::isdigit(static_cast<unsigned char>(c)))
                            fail(t, "numeric constants must be integers");
                    register_symbol(sig_.functions, t.text, 0, t, "function");
                    return Term::constant(t.text);
                }
                if (t.kind != Tok::Ident)
                    fail(t, t.kind == Tok::End ? "unexpected end of line" : "unexpected '" + t.text + "'");
                if (is_variable_name(t.text))
                {
                    if (peek().kind == Tok::LParen)
                        fail(peek(), "variable '" + t.text + "' cannot take arguments");
                    auto [it, inserted] = vars_.try_emplace(t.text, static_cast<VarId>(vars_.size()));
                    return Term::variable(it->second);
                }
                std::vector<Term> args = arguments();
                register_symbol(sig_.functions, t.text, args.size(), t, "function");
                return Term::make(t.text, std::move(args));
            }

            void check_not_reserved(const Token &t) const
            {
                if (t.text == kAnswerPredicate)
                    fail(t, "'answer' is reserved for answer extraction");
            }

            void register_symbol(std::map<std::string, SymbolInfo> &table, const std::string &name,
                                 std::size_t arity, const Token &t, const char *what)
            {
                auto [it, inserted] = table.try_emplace(name, SymbolInfo{arity, line_no_});
                if (!inserted && it->second.arity != arity)
                    fail(t, std::string(what) + " '" + name + "' used with arity " + std::to_string(arity) +
                                " but arity " + std::to_string(it->second.arity) + " on line " +
                                std::to_string(it->second.line));
            }

        private:
            std::vector<Token> tokens_;
            std::size_t pos_ = 0;
            std::size_t line_no_;
            Signature &sig_;
            std::map<std::string, VarId> vars_;
        };

        std::string_view trim(std::string_view s)
        {
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
                s.remove_prefix(1);
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
                s.remove_suffix(1);
            return s;
        }
    } // namespace

    QueryFile parse_query_file(std::string_view text)
    {
        QueryFile file;
        Signature sig;
        Section section = Section::Kb;
        bool have_question = false;
        std::vector<std::size_t> similarity_lines;
        std::size_t line_no = 0;

        while (!text.empty() || line_no == 0)
        {
            auto nl = text.find('\n');
            std::string_view raw = text.substr(0, nl);
            text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
            ++line_no;
            if (!raw.empty() && raw.back() == '\r')
                raw.remove_suffix(1);
            if (auto hash = raw.find('#'); hash != std::string_view::npos)
                raw = raw.substr(0, hash);
            std::string_view line = trim(raw);
            if (line.empty())
            {
                if (text.empty())
                    break;
                continue;
            }
            std::size_t indent = static_cast<std::size_t>(line.data() - raw.data());

            if (line.front() == '[')
            {
                if (line == "[kb]")
                    section = Section::Kb;
                else if (line == "[assumptions]")
                    section = Section::Assumptions;
                else if (line == "[question]")
                    section = Section::Question;
                else if (line == "[params]")
                    section = Section::Params;
                else if (line == "[similarity]")
                    section = Section::Similarity;
                else
                    throw ParseError(line_no, indent + 1, "unknown section header " + std::string(line));
                continue;
            }

            // Tokenize the untrimmed line so columns refer to the original text.
            LineParser parser(raw, line_no, sig);
            switch (section)
            {
            case Section::Kb:
            case Section::Assumptions:
            {
                Origin origin = section == Section::Kb ? Origin::Kb : Origin::Assumption;
                auto clauses = parser.statement(origin);
                auto &dest = section == Section::Kb ? file.kb : file.assumptions;
                dest.insert(dest.end(), clauses.begin(), clauses.end());
                break;
            }
            case Section::Question:
                if (have_question)
                    throw ParseError(line_no, indent + 1, "only one question is allowed per file");
                file.question = parser.question();
                have_question = true;
                break;
            case Section::Params:
            {
                auto [key, value] = parser.param();
                if (key == "h" || key == "split")
                {
                    Rational r = parser.number(value);
                    if (!in_unit_interval(r))
                        throw ParseError(line_no, value.column, key + " must lie in [0,1]");
                    (key == "h" ? file.params.h : file.params.split) = r;
                }
                else if (key == "time")
                {
                    Rational r = parser.number(value);
                    if (r <= 0)
                        throw ParseError(line_no, value.column, "time must be positive");
                    file.params.time = to_double(r);
                }
                else if (key == "steps")
                {
                    Rational r = parser.number(value);
                    if (r <= 0 || denominator(r) != 1)
                        throw ParseError(line_no, value.column, "steps must be a positive integer");
                    file.params.steps = static_cast<std::size_t>(numerator(r));
                }
                else
                {
                    throw ParseError(line_no, indent + 1, "unknown parameter '" + key + "'");
                }
                break;
            }
            case Section::Similarity:
                file.similarities.push_back(parser.similarity());
                similarity_lines.push_back(line_no);
                break;
            }
            if (text.empty())
                break;
        }

        if (!have_question)
            throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing [question] section");

        for (std::size_t i = 0; i < file.similarities.size(); ++i)
        {
            auto &d = file.similarities[i];
            if (auto it = sig.predicates.find(d.symbol_a); it != sig.predicates.end())
                d.arity_a = static_cast<int>(it->second.arity);
            if (auto it = sig.predicates.find(d.symbol_b); it != sig.predicates.end())
                d.arity_b = static_cast<int>(it->second.arity);
            if (d.arity_a >= 0 && d.arity_b >= 0 && d.arity_a != d.arity_b)
                throw ParseError(similarity_lines[i], 1,
                                 "similar predicates " + d.symbol_a + " and " + d.symbol_b + " differ in arity");
        }
        return file;
    }

} // namespace saturn
