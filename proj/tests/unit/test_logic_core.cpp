#include "oracle/oracle.hpp"
#include "support.hpp"

#include "saturn/clause.hpp"
#include "saturn/unify.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace saturn;
using test_support::clause;

namespace
{
    Term var(VarId v) { return Term::variable(v); }
    Term cst(const std::string &name) { return Term::constant(name); }
    Literal atom(const std::string &pred, std::vector<Term> args) { return Literal(true, pred, std::move(args)); }
}

TEST(Term, StructuralProperties)
{
    Term t = Term::compound("f", {var(0), Term::compound("g", {cst("a"), var(3)})});
    EXPECT_FALSE(t.is_ground());
    EXPECT_EQ(t.depth(), 3);
    EXPECT_EQ(t.max_var(), 3);
    EXPECT_TRUE(t.occurs(3));
    EXPECT_FALSE(t.occurs(1));
    EXPECT_EQ(to_string(t), "f(X,g(a,U))");
    EXPECT_EQ(t.shift_vars(2), Term::compound("f", {var(2), Term::compound("g", {cst("a"), var(5)})}));
    EXPECT_EQ(Term::make("a"), cst("a"));
}

TEST(Term, VariableNamesSkipDisjunctionToken)
{
    EXPECT_EQ(variable_name(0), "X");
    EXPECT_EQ(variable_name(1), "Y");
    EXPECT_EQ(variable_name(2), "Z");
    EXPECT_NE(variable_name(3), "V");
    EXPECT_NE(variable_name(4), "V");
}

TEST(Clause, VariantsAreEqualAfterCanonicalization)
{
    Clause a({Literal(false, "bird", {var(7)}), atom("canfly", {var(7)})});
    Clause b({atom("canfly", {var(2)}), Literal(false, "bird", {var(2)})});
    EXPECT_TRUE(a.same_literals(b));
}

TEST(Clause, DuplicateLiteralsMerge)
{
    Clause c({atom("p", {cst("a")}), atom("p", {cst("a")})});
    EXPECT_EQ(c.size(), 1u);
}

TEST(Clause, AnswerLiteralsSortLast)
{
    Clause c({atom("answer", {var(0)}), Literal(false, "zeta", {var(0)})});
    EXPECT_TRUE(c.literals().back().is_answer());
    EXPECT_EQ(c.answer_literal_count(), 1u);
    EXPECT_EQ(c.non_answer_count(), 1u);
}

TEST(Clause, Tautology)
{
    EXPECT_TRUE(clause("-p(X) V p(X)").is_tautology());
    EXPECT_FALSE(clause("-p(X) V p(a)").is_tautology());
}

TEST(Clause, PrintsImplicationForm)
{
    EXPECT_EQ(to_string(clause("bird(X) => canfly(X)")), "bird(X) => canfly(X)");
    EXPECT_EQ(to_string(clause("bird(X) & inair(X) => fast(X)")), "bird(X) & inair(X) => fast(X)");
    EXPECT_EQ(to_string(clause("penguin(X) => -canfly(X)")), "penguin(X) => -canfly(X)");
    EXPECT_EQ(to_string(clause("-p(X) V -q(X)")), "-p(X) V -q(X)");
    EXPECT_EQ(to_string(Clause(std::vector<Literal>{})), "false");
}

TEST(Clause, NegativeConclusionIsRecorded)
{
    Clause c = clause("penguin(X) => -canfly(X)");
    ASSERT_EQ(c.size(), 2u);
    for (std::size_t i = 0; i < c.size(); ++i)
        EXPECT_EQ(c.is_negative_conclusion(i), c.literals()[i].predicate == "canfly");
    EXPECT_FALSE(clause("-p(X) V -q(X)").has_negative_conclusions());
    EXPECT_FALSE(clause("bird(X) => canfly(X)").has_negative_conclusions());
    EXPECT_EQ(to_string(clause("-p(a) => -q(a) : 0.5")), "-p(a) => -q(a)");
    EXPECT_FALSE(clause("p => -p").has_negative_conclusions());
}

TEST(Unify, SingleBinding)
{
    auto s = unify(atom("bird", {var(0)}), atom("bird", {cst("tweety")}));
    ASSERT_TRUE(s);
    EXPECT_EQ(s->size(), 1u);
    EXPECT_EQ(s->apply(var(0)), cst("tweety"));
}

TEST(Unify, OccursCheck)
{
    auto a = atom("p", {var(0), Term::compound("f", {var(0)})});
    auto b = atom("p", {var(1), var(1)});
    EXPECT_FALSE(unify(a, b));
}

TEST(Unify, CompoundBinding)
{
    // p(X, f(Y)) vs p(a, Z)
    auto a = atom("p", {var(0), Term::compound("f", {var(1)})});
    auto b = atom("p", {cst("a"), var(2)});
    auto s = unify(a, b);
    ASSERT_TRUE(s);
    EXPECT_EQ(s->apply(var(0)), cst("a"));
    EXPECT_EQ(s->apply(var(2)), Term::compound("f", {var(1)}));
    EXPECT_EQ(s->apply(var(1)), var(1));

    auto universe = oracle::ground_universe(2);
    auto unifiers = oracle::ground_unifiers(a, b, universe);
    ASSERT_FALSE(unifiers.empty());
    for (const auto &theta : unifiers)
    {
        oracle::Binding lambda;
        for (VarId v : {0, 1, 2})
            ASSERT_TRUE(oracle::match(s->apply(var(v)), theta.at(v), lambda));
    }
}

TEST(Unify, DifferentPredicatesFail)
{
    EXPECT_FALSE(unify(atom("p", {var(0)}), atom("q", {var(0)})));
    EXPECT_FALSE(unify(atom("p", {var(0)}), atom("p", {var(0), var(1)})));
}

// Random pairs checked against exhaustive ground unifiers: the result must be
// a unifier, idempotent, and more general than every ground unifier; failure
// must mean no ground unifier exists.
TEST(UnifyProperty, AgreesWithBruteForceEnumeration)
{
    std::mt19937 rng(7);
    auto universe = oracle::ground_universe(2);
    int unified = 0;
    for (int n = 0; n < 1500; ++n)
    {
        Literal a = atom("p", {oracle::random_term(rng, 2, 2), oracle::random_term(rng, 2, 2)});
        Literal b = atom("p", {oracle::random_term(rng, 2, 2), oracle::random_term(rng, 2, 2)});
        auto sigma = unify(a, b);
        auto ground = oracle::ground_unifiers(a, b, universe);
        if (!sigma)
        {
            EXPECT_TRUE(ground.empty()) << to_string(a) << " / " << to_string(b);
            continue;
        }
        ++unified;
        oracle::Binding map(sigma->bindings().begin(), sigma->bindings().end());
        EXPECT_EQ(oracle::apply(a, map), oracle::apply(b, map)) << to_string(a) << " / " << to_string(b);
        for (const auto &[v, t] : map)
        {
            EXPECT_FALSE(t.occurs(v));
            EXPECT_EQ(oracle::apply(t, map), t) << "not idempotent";
        }
        std::set<VarId> vars;
        for (const auto &t : a.args)
            oracle::collect_vars(t, vars);
        for (const auto &t : b.args)
            oracle::collect_vars(t, vars);
        for (const auto &theta : ground)
        {
            oracle::Binding lambda;
            for (VarId v : vars)
                ASSERT_TRUE(oracle::match(sigma->apply(Term::variable(v)), theta.at(v), lambda))
                    << "mgu not more general for " << to_string(a) << " / " << to_string(b);
        }
    }
    EXPECT_GT(unified, 100);
}

TEST(Match, OneWay)
{
    std::map<VarId, Term> b;
    EXPECT_TRUE(match(Term::compound("f", {var(0), var(0)}), Term::compound("f", {cst("a"), cst("a")}), b));
    b.clear();
    EXPECT_FALSE(match(Term::compound("f", {var(0), var(0)}), Term::compound("f", {cst("a"), cst("b")}), b));
    b.clear();
    EXPECT_FALSE(match(cst("a"), var(0), b));
}

TEST(Subsumes, Examples)
{
    EXPECT_TRUE(subsumes(clause("p(X)"), clause("p(a) V q(b)")));
    EXPECT_FALSE(subsumes(clause("p(a)"), clause("p(X)")));
    EXPECT_TRUE(subsumes(clause("p(X) V p(Y)"), clause("p(a)")));
    EXPECT_FALSE(subsumes(clause("p(X,X)"), clause("p(a,b)")));
    EXPECT_TRUE(subsumes(clause("p(X,Y)"), clause("p(Y,X)")));
    EXPECT_TRUE(oracle::brute_force_subsumes(clause("p(X) V p(Y)"), clause("p(a)")));
}

TEST(SubsumesProperty, AgreesWithBruteForce)
{
    std::mt19937 rng(11);
    int positives = 0;
    for (int n = 0; n < 3000; ++n)
    {
        Clause g = oracle::random_clause(rng, 2);
        Clause s = oracle::random_clause(rng, 3);
        bool expected = oracle::brute_force_subsumes(g, s);
        positives += expected;
        EXPECT_EQ(subsumes(g, s), expected) << to_string(g) << " / " << to_string(s);
    }
    EXPECT_GT(positives, 20);
}

TEST(SubsumesProperty, Reflexive)
{
    std::mt19937 rng(3);
    for (int n = 0; n < 1000; ++n)
    {
        Clause c = oracle::random_clause(rng, 4);
        EXPECT_TRUE(subsumes(c, c)) << to_string(c);
    }
}

TEST(SubsumesProperty, Transitive)
{
    std::mt19937 rng(5);
    auto instance = [&](const Clause &c)
    {
        // Instantiate some variables and add an unrelated literal.
        oracle::Binding b;
        for (VarId v = 0; v <= 2; ++v)
            if (rng() % 2)
                b.emplace(v, oracle::random_term(rng, 1, 4).shift_vars(3));
        std::vector<Literal> lits;
        for (const auto &l : c.literals())
            lits.push_back(oracle::apply(l, b));
        if (rng() % 2)
            lits.push_back(oracle::random_clause(rng, 1).literals().front());
        return Clause(std::move(lits));
    };
    int chains = 0;
    for (int n = 0; n < 1000; ++n)
    {
        Clause a = oracle::random_clause(rng, 3);
        Clause b = instance(a);
        Clause c = instance(b);
        if (subsumes(a, b) && subsumes(b, c))
        {
            ++chains;
            EXPECT_TRUE(subsumes(a, c)) << to_string(a) << " / " << to_string(b) << " / " << to_string(c);
        }
        Clause x = oracle::random_clause(rng, 2), y = oracle::random_clause(rng, 2), z = oracle::random_clause(rng, 3);
        if (subsumes(x, y) && subsumes(y, z))
            EXPECT_TRUE(subsumes(x, z));
    }
    EXPECT_GT(chains, 300);
}

TEST(ApplySubstitution, Examples)
{
    Clause rule = clause("bird(X) => canfly(X) : 0.9");
    Substitution s;
    s.bind(0, cst("tweety"));
    Clause out = apply_substitution(rule, s);
    EXPECT_TRUE(out.same_literals(clause("bird(tweety) => canfly(tweety)")));
    EXPECT_EQ(out.confidence, Rational(9, 10));
    EXPECT_EQ(out.origin, rule.origin);
    EXPECT_EQ(out.is_taxonomy, rule.is_taxonomy);

    EXPECT_TRUE(apply_substitution(rule, Substitution{}).same_literals(rule));

    Clause two = clause("p(X) V p(Y)");
    Substitution both;
    both.bind(0, cst("a"));
    both.bind(1, cst("a"));
    Clause merged = apply_substitution(two, both);
    EXPECT_EQ(merged.size(), 1u);
    EXPECT_TRUE(merged.same_literals(clause("p(a)")));
}

TEST(ApplySubstitution, KeepsFlags)
{
    Clause tax = clause("penguin(X) => bird(X) !taxonomy");
    Substitution s;
    s.bind(0, cst("pengu"));
    Clause out = apply_substitution(tax, s);
    EXPECT_TRUE(out.is_taxonomy);
    EXPECT_EQ(out.confidence, 1);
}
