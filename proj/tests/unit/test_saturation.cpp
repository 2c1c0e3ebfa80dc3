#include "oracle/oracle.hpp"
#include "support.hpp"

#include "saturn/inference.hpp"
#include "saturn/saturation.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace saturn;
using test_support::clause;

namespace
{
    std::size_t index_of(const Clause &c, const std::string &pred, bool positive)
    {
        for (std::size_t i = 0; i < c.size(); ++i)
            if (c.literals()[i].predicate == pred && c.literals()[i].positive == positive)
                return i;
        throw std::runtime_error("no literal " + pred);
    }

    SearchState state_of(std::initializer_list<const char *> texts)
    {
        std::vector<Clause> cs;
        for (const char *t : texts)
            cs.push_back(clause(t));
        return SearchState(cs);
    }

    SearchState run(const QueryFile &f, std::size_t steps, SaturationLimits limits = {})
    {
        std::vector<Clause> cs = f.kb;
        cs.insert(cs.end(), f.assumptions.begin(), f.assumptions.end());
        cs.push_back(build_positive_question_clause(f.question));
        SearchState s(cs);
        SearchBudget b;
        b.steps = steps;
        saturate(s, b, limits);
        return s;
    }

    std::vector<std::string> answers(const SearchState &s)
    {
        std::vector<std::string> out;
        for (NodeId id : s.answer_nodes())
            out.push_back(to_string(s.node(id).clause));
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }
}

TEST(Resolution, ConfidenceIsProduct)
{
    SearchState s = state_of({"bird(tweety) : 0.8", "bird(X) => canfly(X) : 0.9"});
    const auto &a = s.node(0);
    const auto &b = s.node(1);
    auto r = binary_resolve(a, b, 0, index_of(b.clause, "bird", false));
    ASSERT_TRUE(r);
    EXPECT_TRUE(r->clause.same_literals(clause("canfly(tweety)")));
    EXPECT_EQ(r->clause.confidence, Rational(18, 25));
    EXPECT_EQ(r->rule, Rule::BinaryResolution);
    EXPECT_EQ(r->premises, (std::vector<NodeId>{0, 1}));
    EXPECT_EQ(r->inputs, (std::vector<NodeId>{0, 1}));
    EXPECT_EQ(r->clause.origin, Origin::Derived);
    EXPECT_FALSE(r->question_lineage);

    s.add(std::move(*r));
    SearchState t = std::move(s);
    t.add(DerivationNode{clause("canfly(X) => fast(X) : 0.7")});
    const auto &c = t.node(3);
    auto r2 = binary_resolve(t.node(2), c, 0, index_of(c.clause, "canfly", false));
    ASSERT_TRUE(r2);
    EXPECT_EQ(r2->clause.confidence, Rational(63, 125));
    EXPECT_EQ(r2->inputs, (std::vector<NodeId>{0, 1, 3}));
}

TEST(Resolution, AnswerLiteralCarried)
{
    QueryFile f = test_support::load("tweety_chain.kb");
    SearchState s = run(f, 100);
    ASSERT_EQ(answers(s), (std::vector<std::string>{"answer(tweety)"}));
    const auto &n = s.node(s.answer_nodes().front());
    EXPECT_EQ(n.clause.confidence, Rational(63, 125));
    EXPECT_TRUE(n.question_lineage);
    EXPECT_EQ(n.inputs.size(), 3u);
    EXPECT_TRUE(s.stats.exhausted);
}

TEST(Resolution, ClashFails)
{
    SearchState s = state_of({"p(a)", "p(b) => q"});
    EXPECT_FALSE(binary_resolve(s.node(0), s.node(1), 0, index_of(s.node(1).clause, "p", false)));
}

TEST(Factoring, Examples)
{
    SearchState s = state_of({"p(X) V p(a) : 0.7", "p(X) V p(Y)", "p(f(X)) V p(f(a)) : 0.3"});
    auto f0 = factor(s.node(0), 0, 1);
    ASSERT_TRUE(f0);
    EXPECT_TRUE(f0->clause.same_literals(clause("p(a)")));
    EXPECT_EQ(f0->clause.confidence, Rational(7, 10));
    EXPECT_EQ(f0->rule, Rule::Factoring);

    ASSERT_EQ(s.node(1).clause.size(), 2u);
    auto f1 = factor(s.node(1), 0, 1);
    ASSERT_TRUE(f1);
    EXPECT_TRUE(f1->clause.same_literals(clause("p(X)")));

    auto f2 = factor(s.node(2), 0, 1);
    ASSERT_TRUE(f2);
    EXPECT_TRUE(f2->clause.same_literals(clause("p(f(a))")));
    EXPECT_EQ(f2->clause.confidence, Rational(3, 10));

    SearchState t = state_of({"p(a) V -p(b)"});
    EXPECT_FALSE(factor(t.node(0), 0, 1));
}

TEST(Paramodulation, Examples)
{
    SearchState s = state_of({"a = b : 0.9", "p(a) : 0.8", "q(c) : 0.5", "f(X) = g(X) : 0.5", "q(f(c)) : 0.8"});
    auto r = paramodulate(s.node(0), s.node(1));
    ASSERT_EQ(r.size(), 1u);
    EXPECT_TRUE(r[0].clause.same_literals(clause("p(b)")));
    EXPECT_EQ(r[0].clause.confidence, Rational(18, 25));
    EXPECT_EQ(r[0].rule, Rule::Paramodulation);

    EXPECT_TRUE(paramodulate(s.node(0), s.node(2)).empty());

    auto r2 = paramodulate(s.node(3), s.node(4));
    ASSERT_FALSE(r2.empty());
    bool found = false;
    for (const auto &n : r2)
        if (n.clause.same_literals(clause("q(g(c))")))
        {
            found = true;
            EXPECT_EQ(n.clause.confidence, Rational(2, 5));
        }
    EXPECT_TRUE(found);
}

TEST(EqualityResolution, RemovesUnifiableDisequation)
{
    SearchState s = state_of({"X != a V p(X)"});
    const auto &c = s.node(0).clause;
    auto r = equality_resolve(s.node(0), index_of(c, "=", false));
    ASSERT_TRUE(r);
    EXPECT_TRUE(r->clause.same_literals(clause("p(a)")));
}

TEST(Saturate, SixClauseExampleHasThreeAnswers)
{
    QueryFile f = test_support::load("birds.kb");
    SearchState s = run(f, 1000);
    EXPECT_TRUE(s.stats.exhausted);
    EXPECT_EQ(answers(s),
              (std::vector<std::string>{"answer(bleepy) V answer(creepy)", "answer(fleepy)", "answer(tweety)"}));
}

TEST(Saturate, UnrelatedContradictionIsIgnored)
{
    auto f = parse_query_file("p\n-p\n[question]\nq(X)\n");
    SearchState s = run(f, 100);
    EXPECT_TRUE(s.stats.exhausted);
    EXPECT_TRUE(s.answer_nodes().empty());
    EXPECT_GT(s.stats.discarded_irrelevant, 0u);
}

TEST(Saturate, ContradictionWithQuestionLineageIsAnAnswer)
{
    // A ground question refuted through the question clause yields "answer".
    auto f = parse_query_file("p(a)\n[question]\np(a)\n");
    SearchState s = run(f, 100);
    EXPECT_EQ(answers(s), (std::vector<std::string>{"answer"}));
}

TEST(Saturate, EmptyKnowledgeBase)
{
    auto f = parse_query_file("[question]\nq(X)\n");
    SearchState s = run(f, 100);
    EXPECT_TRUE(s.stats.exhausted);
    EXPECT_TRUE(s.answer_nodes().empty());
    EXPECT_EQ(s.stats.given, 1u);
}

TEST(Saturate, StepBudgetIsRespected)
{
    QueryFile f = test_support::load("birds.kb");
    SearchState s = run(f, 3);
    EXPECT_EQ(s.stats.given, 3u);
    EXPECT_FALSE(s.stats.exhausted);
}

TEST(Saturate, PositivePremiseRestriction)
{
    // Two non-positive clauses never resolve with each other.
    auto f = parse_query_file("a(X) => b(X)\nb(X) => c(X)\n[question]\nz(X)\n");
    SearchState s = run(f, 100);
    for (const auto &n : s.nodes())
        EXPECT_EQ(n.rule, Rule::Input) << to_string(n.clause);
}

TEST(Saturate, DefaultNegativeConclusionIsNotResolvedUpon)
{
    auto f = parse_query_file("canfly(tweety)\npenguin(X) => -canfly(X) : 0.9\n[question]\nz\n");
    SearchState s = run(f, 100);
    for (const auto &n : s.nodes())
        EXPECT_EQ(n.rule, Rule::Input) << to_string(n.clause);

    // A certain rule stays contrapositive.
    auto g = parse_query_file("canfly(tweety)\npenguin(X) => -canfly(X)\n[question]\nz\n");
    SearchState t = run(g, 100);
    bool derived = false;
    for (const auto &n : t.nodes())
        derived |= n.clause.same_literals(clause("-penguin(tweety)"));
    EXPECT_TRUE(derived);
}

TEST(Saturate, LimitsDiscardDeepTerms)
{
    auto f = parse_query_file("p(a)\np(X) => p(f(X))\n[question]\nq\n");
    SaturationLimits limits;
    limits.max_term_depth = 4;
    SearchState s = run(f, 1000, limits);
    EXPECT_TRUE(s.stats.exhausted);
    EXPECT_GT(s.stats.discarded_limits, 0u);
    for (const auto &n : s.nodes())
        EXPECT_LE(n.clause.max_depth(), 4);
}

TEST(RetainOrDiscard, SubsumedByActiveClauseWithFewerInputs)
{
    SearchState s = state_of({"p(X)", "q(a)"});
    DerivationNode cand;
    cand.clause = clause("p(a) V q(b)");
    cand.rule = Rule::BinaryResolution;
    cand.inputs = {0, 1};
    EXPECT_FALSE(retain_or_discard(cand, s).retain);

    // An input set that does not contain E's keeps the candidate.
    cand.inputs = {1};
    EXPECT_TRUE(retain_or_discard(cand, s).retain);

    // Higher confidence than E keeps the candidate.
    SearchState w = state_of({"p(X) : 0.5"});
    DerivationNode strong;
    strong.clause = clause("p(a)");
    strong.rule = Rule::BinaryResolution;
    strong.inputs = {0};
    EXPECT_TRUE(retain_or_discard(strong, w).retain);

    // Different lineage keeps the candidate.
    cand.inputs = {0, 1};
    cand.question_lineage = true;
    EXPECT_TRUE(retain_or_discard(cand, s).retain);
}

TEST(RetainOrDiscard, CandidateDeactivatesWeakerClause)
{
    SearchState s = state_of({"p(a) V q(b) : 0.5", "r"});
    DerivationNode cand;
    cand.clause = clause("p(X)");
    cand.rule = Rule::BinaryResolution;
    cand.inputs = {0};
    auto d = retain_or_discard(cand, s);
    EXPECT_TRUE(d.retain);
    EXPECT_EQ(d.deactivate, (std::vector<NodeId>{0}));
}

TEST(RetainOrDiscard, TerminalClauses)
{
    QueryFile f = test_support::load("tweety_chain.kb");
    SearchState s = run(f, 100);
    const auto &a = s.node(s.answer_nodes().front());
    DerivationNode same = a;
    EXPECT_FALSE(retain_or_discard(same, s).retain);
    same.inputs = {0};
    EXPECT_TRUE(retain_or_discard(same, s).retain);
    DerivationNode stronger = a;
    stronger.clause.confidence = 1;
    EXPECT_TRUE(retain_or_discard(stronger, s).retain);
}

namespace
{
    void check_dag(const SearchState &s)
    {
        for (const auto &n : s.nodes())
        {
            for (NodeId p : n.premises)
                ASSERT_LT(p, n.id());
            if (n.rule == Rule::Input)
            {
                EXPECT_TRUE(n.premises.empty());
                continue;
            }
            // Confidence is the product of the premises'.
            Rational product = 1;
            for (NodeId p : n.premises)
                product *= s.node(p).clause.confidence;
            EXPECT_EQ(n.clause.confidence, product) << to_string(n.clause);
            // Lineage and input set are the union over the premises.
            bool lineage = false;
            std::set<NodeId> inputs;
            for (NodeId p : n.premises)
            {
                lineage |= s.node(p).question_lineage;
                inputs.insert(s.node(p).inputs.begin(), s.node(p).inputs.end());
            }
            EXPECT_EQ(n.question_lineage, lineage);
            EXPECT_EQ(n.inputs, std::vector<NodeId>(inputs.begin(), inputs.end()));
            EXPECT_TRUE(in_unit_interval(n.clause.confidence));
        }
    }
}

TEST(SaturateProperty, DerivationDagInvariants)
{
    for (const char *name : {"birds.kb", "cumulative.kb", "penguin.kb", "multilevel.kb", "relevance.kb"})
    {
        SearchState s = run(test_support::load(name), 500);
        check_dag(s);
    }
    std::mt19937 rng(19);
    for (int n = 0; n < 100; ++n)
    {
        QueryFile f = parse_query_file(oracle::random_kb_text(rng));
        SaturationLimits limits;
        SearchState s = run(f, 200, limits);
        check_dag(s);
    }
}

// Every ground derived clause without answer literals is entailed: the
// inputs together with its negation have no model.
TEST(SaturateProperty, GroundConsequencesAreEntailed)
{
    std::mt19937 rng(23);
    int checked = 0;
    for (int n = 0; n < 150; ++n)
    {
        QueryFile f = parse_query_file(oracle::random_kb_text(rng));
        if (!oracle::consistent(f))
            continue;
        SearchState s = run(f, 300);
        for (const auto &node : s.nodes())
        {
            const Clause &c = node.clause;
            if (node.rule == Rule::Input || node.question_lineage || !c.is_ground() || c.answer_literal_count())
                continue;
            QueryFile g = f;
            for (const auto &l : c.literals())
                g.assumptions.push_back(Clause({l.negated()}, 1, Origin::Assumption));
            EXPECT_FALSE(oracle::consistent(g)) << to_string(c);
            ++checked;
        }
    }
    EXPECT_GT(checked, 50);
}

TEST(SaturateProperty, MoreStepsNeverLoseAnswers)
{
    std::mt19937 rng(29);
    for (int n = 0; n < 60; ++n)
    {
        QueryFile f = parse_query_file(oracle::random_kb_text(rng));
        auto small = answers(run(f, 20));
        auto big = answers(run(f, 400));
        EXPECT_TRUE(std::includes(big.begin(), big.end(), small.begin(), small.end()));
    }
}
