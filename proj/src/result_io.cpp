#include "saturn/result_io.hpp"

#include <cstdio>
#include <set>
#include <sstream>

namespace saturn
{

    double rounded(const Rational &value)
    {
        return std::stod(to_fixed(value, 6));
    }

    namespace
    {
        using json = nlohmann::ordered_json;

        std::string fixed(const Rational &value) { return to_fixed(value, 6); }

        json values_json(const std::vector<Term> &values)
        {
            json out = json::array();
            for (const auto &t : values)
                out.push_back(to_string(t));
            return out;
        }

        json proof_json(const SearchState &state, NodeId answer, bool verbose)
        {
            json steps = json::array();
            for (NodeId id : state.derivation(answer))
            {
                const auto &n = state.node(id);
                json step;
                step["id"] = id;
                step["clause"] = to_string(n.clause);
                step["rule"] = std::string(to_string(n.rule));
                step["premises"] = n.premises;
                step["confidence"] = rounded(n.clause.confidence);
                if (verbose)
                    step["exact"] = to_exact_string(n.clause.confidence);
                step["origin"] = std::string(to_string(n.rule == Rule::Input ? n.clause.origin : Origin::Derived));
                steps.push_back(std::move(step));
            }
            json proof;
            proof["answer"] = answer;
            proof["confidence"] = rounded(state.node(answer).clause.confidence);
            proof["steps"] = std::move(steps);
            return proof;
        }

        json stats_json(const PhaseReport &phase, bool timing)
        {
            const auto &s = phase.stats;
            json out;
            out["phase"] = phase.name;
            out["given"] = s.given;
            out["generated"] = s.generated;
            out["kept"] = s.kept;
            out["discardedSubsumed"] = s.discarded_subsumed;
            out["discardedLimits"] = s.discarded_limits;
            out["discardedTautologies"] = s.discarded_tautologies;
            out["discardedIrrelevant"] = s.discarded_irrelevant;
            out["deactivated"] = s.deactivated;
            out["answersFound"] = s.answers;
            out["blocked"] = phase.blocked_answers;
            out["saturated"] = s.exhausted;
            if (timing)
                out["seconds"] = phase.seconds;
            return out;
        }

        std::string binding_text(const AnswerRecord &r, const Question &q)
        {
            if (r.indefinite)
            {
                std::string out;
                for (std::size_t a = 0; a < r.alternatives.size(); ++a)
                {
                    if (a)
                        out += " or ";
                    std::string alt;
                    for (std::size_t i = 0; i < r.alternatives[a].size(); ++i)
                        alt += (i ? ", " : "") + q.variable_names[i] + " = " + to_string(r.alternatives[a][i]);
                    out += r.alternatives[a].size() > 1 ? "(" + alt + ")" : alt;
                }
                return out;
            }
            if (r.values.empty())
                return "yes/no";
            std::string out;
            for (std::size_t i = 0; i < r.values.size(); ++i)
                out += (i ? ", " : "") + q.variable_names[i] + " = " + to_string(r.values[i]);
            return out;
        }

        class TreePrinter
        {
        public:
            TreePrinter(const SearchState &state, std::ostream &out) : state_(state), out_(out) {}

            void print(NodeId id, int indent)
            {
                const auto &n = state_.node(id);
                out_ << std::string(static_cast<std::size_t>(indent), ' ') << '[' << id << "] "
                     << to_string(n.clause) << "  ";
                if (n.rule == Rule::Input)
                    out_ << "input " << to_string(n.clause.origin);
                else
                {
                    out_ << to_string(n.rule) << '(';
                    for (std::size_t i = 0; i < n.premises.size(); ++i)
                        out_ << (i ? ", " : "") << n.premises[i];
                    out_ << ')';
                }
                out_ << "  " << fixed(n.clause.confidence);
                if (!shown_.insert(id).second && !n.premises.empty())
                {
                    out_ << "  (shown above)\n";
                    return;
                }
                out_ << '\n';
                for (NodeId p : n.premises)
                    print(p, indent + 2);
            }

        private:
            const SearchState &state_;
            std::ostream &out_;
            std::set<NodeId> shown_;
        };

        void print_proofs(std::ostream &out, const char *label, const SearchState &state,
                          const std::vector<NodeId> &ids)
        {
            std::size_t k = 0;
            for (NodeId id : ids)
            {
                out << "  " << label << " proof " << ++k << " (confidence "
                    << fixed(state.node(id).clause.confidence) << "):\n";
                TreePrinter(state, out).print(id, 4);
            }
        }

        std::vector<NodeId> ids_of(const EvidenceSet &e)
        {
            std::vector<NodeId> out;
            for (const auto &d : e.derivations)
                out.push_back(d.node);
            return out;
        }
    } // namespace

    nlohmann::ordered_json result_to_json(const QueryResult &result, const OutputOptions &options)
    {
        json out;
        out["question"] = result.question;
        json answers = json::array();
        for (const AnswerRecord *r : result.reported(options.verbose, options.max_answers))
        {
            json a;
            a["values"] = values_json(r->values);
            a["indefinite"] = r->indefinite;
            if (r->indefinite)
            {
                json alts = json::array();
                for (const auto &v : r->alternatives)
                    alts.push_back(values_json(v));
                a["alternatives"] = std::move(alts);
            }
            a["sign"] = std::string(to_string(r->sign));
            a["confidence"] = rounded(r->confidence);
            a["cp"] = rounded(r->cp);
            a["cn"] = rounded(r->cn);
            a["vetted"] = r->vetted;
            if (options.verbose)
                a["exact"] = {{"confidence", to_exact_string(r->confidence)},
                              {"cp", to_exact_string(r->cp)},
                              {"cn", to_exact_string(r->cn)}};
            json pos = json::array();
            for (const auto &d : r->positive_evidence.derivations)
                pos.push_back(proof_json(*result.positive_state, d.node, options.verbose));
            a["positiveProofs"] = std::move(pos);
            json neg = json::array();
            if (r->negative_state)
                for (const auto &d : r->negative_evidence.derivations)
                    neg.push_back(proof_json(*r->negative_state, d.node, options.verbose));
            a["negativeProofs"] = std::move(neg);
            if (options.verbose)
            {
                json blocked = json::array();
                for (NodeId id : r->blocked_positive)
                    blocked.push_back(proof_json(*result.positive_state, id, true));
                a["blockedProofs"] = std::move(blocked);
            }
            answers.push_back(std::move(a));
        }
        out["answers"] = std::move(answers);

        json stats;
        json phases = json::array();
        for (const auto &p : result.phases)
            phases.push_back(stats_json(p, options.include_timing));
        stats["phases"] = std::move(phases);
        std::size_t blocked = 0;
        for (const auto &p : result.phases)
            blocked += p.blocked_answers;
        stats["blocked"] = blocked;
        if (options.include_timing)
            stats["seconds"] = result.seconds;
        out["stats"] = std::move(stats);
        out["warnings"] = result.warnings;
        return out;
    }

    std::string result_to_text(const QueryResult &result, const QueryFile &file, const OutputOptions &options)
    {
        std::ostringstream out;
        out << "question: " << result.question << '\n';
        auto reported = result.reported(options.verbose, options.max_answers);
        if (reported.empty())
            out << "no answers\n";
        for (const AnswerRecord *r : reported)
        {
            out << "\nanswer " << binding_text(*r, file.question) << ": " << to_string(r->sign) << ' '
                << fixed(r->confidence) << " (cp " << fixed(r->cp) << ", cn " << fixed(r->cn);
            if (!r->vetted)
                out << ", not vetted";
            out << ")\n";
            if (options.verbose)
                out << "  exact: confidence " << to_exact_string(r->confidence) << ", cp " << to_exact_string(r->cp)
                    << ", cn " << to_exact_string(r->cn) << '\n';
            print_proofs(out, "positive", *result.positive_state, ids_of(r->positive_evidence));
            if (r->negative_state)
                print_proofs(out, "negative", *r->negative_state, ids_of(r->negative_evidence));
            if (options.verbose)
                print_proofs(out, "blocked", *result.positive_state, r->blocked_positive);
        }
        out << "\nstatistics:\n";
        for (const auto &p : result.phases)
        {
            const auto &s = p.stats;
            out << "  " << p.name << ": given " << s.given << ", generated " << s.generated << ", kept " << s.kept
                << ", subsumed " << s.discarded_subsumed << ", answers " << s.answers << ", blocked "
                << p.blocked_answers << (s.exhausted ? ", saturated" : "");
            if (options.include_timing)
            {
                char buf[32];
                std::snprintf(buf, sizeof buf, "%.3f", p.seconds);
                out << ", " << buf << "s";
            }
            out << '\n';
        }
        for (const auto &w : result.warnings)
            out << "warning: " << w << '\n';
        return out.str();
    }

} // namespace saturn
