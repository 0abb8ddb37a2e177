#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "bentsmith/construction.hpp"
#include "bentsmith/error.hpp"
#include "bentsmith/oracle.hpp"
#include "bentsmith/tree_variation.hpp"
#include "support/generators.hpp"
#include "support/seeds.hpp"

using namespace bentsmith;

namespace {

ExprTree ctree(std::string_view text, int seed_vars = 4, int seeds = 4)
{
    return ExprTree::parse(text, TerminalSet::construction(seed_vars, seeds));
}

std::vector<SeedSet> sets_from(const std::vector<TruthTable>& pool, std::size_t offset = 0)
{
    std::vector<SeedSet> out;
    for (std::size_t s = 0; s < 4; ++s) {
        std::vector<TruthTable> group;
        for (std::size_t k = 0; k < 4; ++k) group.push_back(pool[(offset + 4 * s + k) % pool.size()]);
        out.emplace_back(group);
    }
    return out;
}

/// Direct case split of F(x0, x1, x) = x0 ? f0(x) : f1(x) xor x1.
TruthTable case_split(const TruthTable& f0, const TruthTable& f1)
{
    const int n = f0.num_vars();
    TruthTable out(n + 2);
    for (std::size_t i = 0; i < out.size(); ++i) {
        const bool x0 = (i >> (n + 1)) & 1U;
        const bool x1 = (i >> n) & 1U;
        const std::size_t x = i & (f0.size() - 1);
        out.set(i, x0 ? f0.get(x) : (f1.get(x) != x1));
    }
    return out;
}

}  // namespace

TEST(Expand, IfXorTreeMatchesCaseSplit)
{
    const auto t = ctree("IF(x0, f0, XOR(x1, f1))", 4, 2);
    const auto& sd = testkit::census4().self_dual;
    for (const auto& f0 : sd)
        for (const auto& f1 : sd) ASSERT_EQ(expand(t, SeedSet({f0, f1})), case_split(f0, f1));

    RandomStream rng(1);
    for (int k = 0; k < 200; ++k) {
        const auto f0 = testkit::random_table(4, rng);
        const auto f1 = testkit::random_table(4, rng);
        ASSERT_EQ(expand(t, SeedSet({f0, f1})), case_split(f0, f1));
    }
}

TEST(Expand, BareSeedAndSeedFreeTrees)
{
    const auto f0 = testkit::census4().self_dual[3];
    const auto out = expand(ctree("f0", 4, 1), SeedSet({f0}));
    for (std::size_t q = 0; q < 4; ++q)
        for (std::size_t x = 0; x < 16; ++x) ASSERT_EQ(out.get(q * 16 + x), f0.get(x));

    const auto lin = expand(ctree("XOR(x0, x1)", 4, 1), SeedSet({f0}));
    EXPECT_EQ(lin, TruthTable::variable(6, 1) ^ TruthTable::variable(6, 2));
}

TEST(Expand, SeedFreeTreesCommuteWithEvalTree)
{
    RandomStream rng(2);
    const auto terms = TerminalSet::construction(4, 0);
    const SeedSet ss({testkit::census4().self_dual[0]});
    for (int k = 0; k < 300; ++k) {
        const auto t = ramped_tree(terms, DepthPolicy(5), rng);
        ASSERT_EQ(expand(t, ss), eval_tree(t, 6));
    }
}

TEST(Expand, MatchesNaiveEvaluationWithSeeds)
{
    RandomStream rng(3);
    const auto terms = TerminalSet::construction(6, 4);
    const auto pool = testkit::self_dual_six();
    const SeedSet ss({pool[0], pool[5], pool[9], pool[13]});
    for (int k = 0; k < 100; ++k) {
        const auto t = ramped_tree(terms, DepthPolicy(5), rng);
        ASSERT_EQ(expand(t, ss), oracle::eval_tree_naive(t, 8, ss.seeds()));
    }
}

TEST(Expand, MissingSeed)
{
    const auto t = ctree("XOR(f0, f3)");
    EXPECT_THROW(expand(t, SeedSet({testkit::census4().self_dual[0]})), MissingSeed);
}

TEST(IsTrivial, Examples)
{
    const auto& sd = testkit::census4().self_dual;
    const SeedSet ss({sd[0], sd[7]});
    EXPECT_TRUE(is_trivial(ctree("XOR(AND(x0, x1), f0)", 4, 2), ss));
    EXPECT_TRUE(is_trivial(ctree("f0", 4, 2), ss));
    EXPECT_TRUE(is_trivial(ctree("XNOR(x1, f1)", 4, 2), ss));
    EXPECT_FALSE(is_trivial(ctree("IF(x0, f0, XOR(x1, f1))", 4, 2), ss));
}

TEST(IsTrivial, IfXorTreeOverAllSeedPairs)
{
    const auto& sd = testkit::census4().self_dual;
    const auto t = ctree("IF(x0, f0, XOR(x1, f1))", 4, 2);
    for (const auto& f0 : sd) {
        for (const auto& f1 : sd) {
            const bool related = f1 == f0 || f1 == f0.complement();
            ASSERT_EQ(is_trivial(t, SeedSet({f0, f1})), related);
        }
    }
}

TEST(ScoreConstruction, TrivialOptimumScoresTarget)
{
    const auto t = ctree("XOR(AND(x0, x1), f0)");
    const ConstructionTask small{sets_from(testkit::census4().self_dual), Scheme::Concurrent,
                                 ObjectiveKind::SelfDualFit1};
    const auto s = score_construction(t, small);
    EXPECT_EQ(s.total.value, 256.0);
    EXPECT_TRUE(s.total.optimal);
    EXPECT_EQ(small.optimum(), 256);

    const ConstructionTask large{sets_from(testkit::self_dual_six()), Scheme::Incremental,
                                 ObjectiveKind::SelfDualFit2};
    const auto s8 = score_construction(t, large);
    EXPECT_EQ(s8.total.value, 1024.0);
    EXPECT_EQ(s8.per_set.size(), 4U);
    EXPECT_EQ(large.optimum(), 1024);
}

TEST(ScoreConstruction, IncrementalGating)
{
    const auto& sd = testkit::census4().self_dual;
    auto sets = sets_from(sd);
    const ConstructionTask inc{sets, Scheme::Incremental, ObjectiveKind::SelfDualFit1};
    const ConstructionTask con{sets, Scheme::Concurrent, ObjectiveKind::SelfDualFit1};

    // x0 alone is far from self-dual bent: only set 1 is scored
    const auto weak = ctree("x0");
    const auto si = score_construction(weak, inc);
    EXPECT_EQ(si.per_set.size(), 1U);
    EXPECT_EQ(si.total.value, si.per_set[0].value);
    EXPECT_LT(si.per_set[0].value, 64.0);
    EXPECT_EQ(score_construction(weak, con).per_set.size(), 4U);

    // f0 xor f1 xor f2 collapses to f0 on a set where f1 = f2, so only the
    // first set is perfect and gating lets the other three through
    sets[0] = SeedSet({sd[0], sd[1], sd[1], sd[2]});
    const ConstructionTask gated{sets, Scheme::Incremental, ObjectiveKind::SelfDualFit1};
    const auto s = score_construction(ctree("XOR(AND(x0, x1), XOR(f0, XOR(f1, f2)))"), gated);
    ASSERT_EQ(s.per_set.size(), 4U);
    EXPECT_TRUE(s.per_set[0].optimal);
    EXPECT_FALSE(s.total.optimal);
}

TEST(ScoreConstruction, ConcurrentDominatesIncremental)
{
    RandomStream rng(4);
    const auto sets = sets_from(testkit::census4().self_dual, 2);
    const auto terms = TerminalSet::construction(4, 4);
    for (auto kind : {ObjectiveKind::SelfDualFit1, ObjectiveKind::SelfDualFit2}) {
        const ConstructionTask inc{sets, Scheme::Incremental, kind};
        const ConstructionTask con{sets, Scheme::Concurrent, kind};
        ConstructionScorer si(inc), sc(con);
        for (int k = 0; k < 500; ++k) {
            const auto t = ramped_tree(terms, DepthPolicy(4), rng);
            const auto a = si.score(t);
            const auto b = sc.score(t);
            ASSERT_GE(b.total.value, a.total.value);
            if (!a.per_set[0].optimal) ASSERT_EQ(a.per_set.size(), 1U);
        }
    }
}

TEST(ConstructionTask, Validation)
{
    const auto& sd = testkit::census4().self_dual;
    ConstructionTask task{sets_from(sd), Scheme::Concurrent, ObjectiveKind::SelfDualFit1};
    EXPECT_NO_THROW(task.validate());
    task.seed_sets.pop_back();
    EXPECT_THROW(task.validate(), ConfigInvalid);
    EXPECT_THROW(SeedSet({sd[0], TruthTable(6)}), SizeMismatch);
    EXPECT_THROW(SeedSet(std::vector<TruthTable>{}), ConfigInvalid);
}

TEST(SeedPool, ReadAndValidate)
{
    std::istringstream good("# pool\nn:4;tt:6ac0\n\nn:4;tt:6ca0\n");
    const auto pool = read_records(good);
    ASSERT_EQ(pool.size(), 2U);
    EXPECT_NO_THROW(validate_seed_pool(pool, ObjectiveKind::SelfDualFit1));
    EXPECT_THROW(validate_seed_pool(pool, ObjectiveKind::AntiSelfDualFit1), ConfigInvalid);
    EXPECT_NO_THROW(validate_seed_pool(pool, ObjectiveKind::NonlinearityOnly));

    std::istringstream bad("n:4;tt:6ac0\nn:4;tt:zz\n");
    try {
        read_records(bad);
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
    }
    std::vector<TruthTable> not_bent{TruthTable(4)};
    EXPECT_THROW(validate_seed_pool(not_bent, ObjectiveKind::NonlinearityOnly), ConfigInvalid);
}

TEST(SeedPool, Sampling)
{
    RandomStream rng(5);
    const auto& sd = testkit::census4().self_dual;
    const auto sets = sample_seed_sets(sd, 4, 4, rng);
    ASSERT_EQ(sets.size(), 4U);
    std::set<std::string> seen;
    for (const auto& ss : sets)
        for (const auto& s : ss.seeds()) seen.insert(s.to_record());
    EXPECT_EQ(seen.size(), 16U);  // pool of 20 is large enough to be disjoint

    const std::vector<TruthTable> small(sd.begin(), sd.begin() + 6);
    for (const auto& ss : sample_seed_sets(small, 4, 4, rng)) {
        std::set<std::string> in_set;
        for (const auto& s : ss.seeds()) in_set.insert(s.to_record());
        ASSERT_EQ(in_set.size(), 4U);
    }
    EXPECT_THROW(sample_seed_sets(small, 4, 7, rng), ConfigInvalid);
    EXPECT_THROW(sample_seed_sets({sd[0], sd[1]}, 4, 4, rng), ConfigInvalid);
}
