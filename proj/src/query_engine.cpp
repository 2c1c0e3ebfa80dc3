#include "saturn/query_engine.hpp"

#include "saturn/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace saturn
{

    bool negative_search_relevance(const SearchState &state, NodeId id)
    {
        return state.node(id).question_lineage;
    }

    std::vector<const AnswerRecord *> QueryResult::reported(bool verbose, std::size_t max_answers) const
    {
        std::vector<const AnswerRecord *> out;
        for (const auto &r : records)
        {
            if (out.size() >= max_answers)
                break;
            bool show;
            if (verbose)
                show = true;
            else if (ground_question)
                show = !r.positive_evidence.derivations.empty() || !r.negative_evidence.derivations.empty();
            else
                show = !r.positive_evidence.derivations.empty() && r.sign == Sign::Positive;
            if (show)
                out.push_back(&r);
        }
        return out;
    }

    namespace
    {
        using Values = std::vector<Term>;

        double elapsed(Clock::time_point since)
        {
            return std::chrono::duration<double>(Clock::now() - since).count();
        }

        Clock::time_point deadline_after(double seconds)
        {
            return Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(seconds));
        }

        std::size_t floor_mul(std::size_t n, const Rational &r)
        {
            Rational product = Rational(static_cast<long long>(n)) * r;
            auto whole = boost::multiprecision::numerator(product) / boost::multiprecision::denominator(product);
            return static_cast<std::size_t>(whole.convert_to<long long>());
        }

        bool ground(const Values &v)
        {
            return std::all_of(v.begin(), v.end(), [](const Term &t)
                               { return t.is_ground(); });
        }

        EvidenceEntry entry_for(const SearchState &state, NodeId id)
        {
            const auto &n = state.node(id);
            return {id, n.clause.confidence, n.inputs};
        }

        std::string values_to_string(const Values &v)
        {
            std::string out = "[";
            for (std::size_t i = 0; i < v.size(); ++i)
                out += (i ? ", " : "") + to_string(v[i]);
            return out + "]";
        }

        struct Group
        {
            AnswerRecord record;
            std::vector<NodeId> nodes;
        };

        class QueryRun
        {
        public:
            QueryRun(const QueryFile &file, const QueryOptions &options)
                : file_(file), options_(options), start_(Clock::now())
            {
                background_ = file.kb;
                background_.insert(background_.end(), file.assumptions.begin(), file.assumptions.end());
                auto sims = expand_similarities(file.similarities, options.similarity_scale);
                background_.insert(background_.end(), sims.begin(), sims.end());
            }

            QueryResult run()
            {
                result_.question = to_string(file_.question);
                result_.ground_question = file_.question.is_ground();
                positive_phase();
                if (options_.budget.split < 1)
                    negative_phase();
                for (auto &g : groups_)
                {
                    auto &r = g.record;
                    if (!r.vetted)
                    {
                        r.cn = 0;
                        r.negative_evidence.derivations.clear();
                    }
                    auto sc = combine_sign(r.cp, r.cn);
                    r.sign = sc.sign;
                    r.confidence = sc.confidence;
                    result_.records.push_back(std::move(r));
                }
                result_.seconds = elapsed(start_);
                return std::move(result_);
            }

        private:
            bool steps_mode() const { return options_.budget.steps.has_value(); }

            void positive_phase()
            {
                auto started = Clock::now();
                std::vector<Clause> inputs = background_;
                inputs.push_back(build_positive_question_clause(file_.question));
                auto state = std::make_shared<SearchState>(inputs);

                SearchBudget budget;
                if (steps_mode())
                    budget.steps = floor_mul(*options_.budget.steps, options_.budget.split);
                else
                    budget.deadline = deadline_after(options_.budget.time_seconds * to_double(options_.budget.split));
                saturate(*state, budget, options_.limits);

                std::vector<NodeId> answers = state->answer_nodes();
                auto elim = eliminate_defaults(*state, answers, options_.max_blocking_depth);
                take_warnings(elim.warnings);
                group_answers(*state);

                PhaseReport report{"positive", state->stats, elim.blocked.size(), elapsed(started)};
                result_.phases.push_back(report);
                result_.positive_state = state;
            }

            void group_answers(const SearchState &state)
            {
                std::map<Values, std::size_t> definite;
                std::map<std::vector<Values>, std::size_t> indefinite;
                for (NodeId id : state.answer_nodes())
                {
                    const Clause &c = state.node(id).clause;
                    std::vector<Values> alts;
                    for (const auto &l : c.literals())
                        alts.push_back(l.args);
                    std::size_t slot;
                    if (alts.size() == 1)
                        slot = find_or_add(definite, alts.front(), [&]
                                           { return new_group(alts.front(), {}); });
                    else
                        slot = find_or_add(indefinite, alts, [&]
                                           { return new_group(alts.front(), alts); });
                    groups_[slot].nodes.push_back(id);
                }
                if (result_.ground_question && definite.empty())
                    definite.emplace(Values{}, new_group({}, {}));

                for (auto &g : groups_)
                {
                    auto &r = g.record;
                    r.positive_evidence.target = r.values;
                    for (NodeId id : g.nodes)
                    {
                        if (state.blocked[id])
                            r.blocked_positive.push_back(id);
                        else
                            r.positive_evidence.derivations.push_back(entry_for(state, id));
                    }
                    r.cp = cumulative_confidence(r.positive_evidence, options_.h);
                }

                // A disjunctive answer adds nothing once one of its
                // alternatives is a definite answer.
                std::vector<bool> drop(groups_.size(), false);
                for (std::size_t i = 0; i < groups_.size(); ++i)
                {
                    const auto &r = groups_[i].record;
                    if (!r.indefinite)
                        continue;
                    drop[i] = r.positive_evidence.derivations.empty() ||
                              std::any_of(r.alternatives.begin(), r.alternatives.end(), [&](const Values &v)
                                          {
                                              auto it = definite.find(v);
                                              return it != definite.end() &&
                                                     !groups_[it->second].record.positive_evidence.derivations.empty();
                                          });
                }
                std::vector<Group> kept;
                for (std::size_t i = 0; i < groups_.size(); ++i)
                    if (!drop[i])
                        kept.push_back(std::move(groups_[i]));
                groups_ = std::move(kept);
            }

            template <class Map, class Key, class Make>
            std::size_t find_or_add(Map &map, const Key &key, Make make)
            {
                auto it = map.find(key);
                if (it != map.end())
                    return it->second;
                std::size_t slot = make();
                map.emplace(key, slot);
                return slot;
            }

            std::size_t new_group(Values values, std::vector<Values> alternatives)
            {
                Group g;
                g.record.values = std::move(values);
                g.record.indefinite = !alternatives.empty();
                g.record.alternatives = std::move(alternatives);
                groups_.push_back(std::move(g));
                return groups_.size() - 1;
            }

            void negative_phase()
            {
                std::vector<std::size_t> order;
                for (std::size_t i = 0; i < groups_.size(); ++i)
                    if (!groups_[i].record.indefinite && ground(groups_[i].record.values))
                        order.push_back(i);
                std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b)
                                 { return groups_[a].record.cp > groups_[b].record.cp; });
                if (order.empty())
                    return;

                std::size_t steps_each = 0;
                double seconds_each = 0;
                if (steps_mode())
                {
                    std::size_t total = *options_.budget.steps;
                    std::size_t negative = total - floor_mul(total, options_.budget.split);
                    steps_each = negative / order.size();
                }
                else
                {
                    seconds_each = options_.budget.time_seconds * (1.0 - to_double(options_.budget.split)) /
                                   static_cast<double>(order.size());
                }

                for (std::size_t slot : order)
                {
                    auto &r = groups_[slot].record;
                    auto started = Clock::now();
                    std::vector<Clause> inputs = background_;
                    auto units = build_negative_question_clauses(file_.question, r.values);
                    inputs.insert(inputs.end(), units.begin(), units.end());
                    auto state = std::make_shared<SearchState>(inputs);

                    SearchBudget budget;
                    if (steps_mode())
                        budget.steps = steps_each;
                    else
                        budget.deadline = deadline_after(seconds_each);
                    saturate(*state, budget, options_.limits);

                    std::vector<NodeId> refutations;
                    for (NodeId id : state->answer_nodes())
                        if (negative_search_relevance(*state, id))
                            refutations.push_back(id);
                    auto elim = eliminate_defaults(*state, refutations, options_.max_blocking_depth);
                    take_warnings(elim.warnings);

                    r.negative_evidence.target = r.values;
                    for (NodeId id : elim.surviving)
                        r.negative_evidence.derivations.push_back(entry_for(*state, id));
                    r.cn = cumulative_confidence(r.negative_evidence, options_.h);
                    r.vetted = true;
                    r.negative_state = state;

                    PhaseReport report{"negative " + values_to_string(r.values), state->stats, elim.blocked.size(),
                                       elapsed(started)};
                    result_.phases.push_back(std::move(report));
                }
            }

            void take_warnings(std::vector<std::string> &w)
            {
                for (auto &s : w)
                    if (std::find(result_.warnings.begin(), result_.warnings.end(), s) == result_.warnings.end())
                        result_.warnings.push_back(std::move(s));
            }

            const QueryFile &file_;
            const QueryOptions &options_;
            Clock::time_point start_;
            std::vector<Clause> background_;
            std::vector<Group> groups_;
            QueryResult result_;
        };
    } // namespace

    QueryResult answer_query(const QueryFile &file, const QueryOptions &options)
    {
        return QueryRun(file, options).run();
    }

} // namespace saturn
