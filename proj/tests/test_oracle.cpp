#include <gtest/gtest.h>

#include "bentsmith/error.hpp"
#include "bentsmith/oracle.hpp"
#include "bentsmith/spectral.hpp"
#include "support/generators.hpp"

using namespace bentsmith;

TEST(WhtDirect, GuardAndExample)
{
    EXPECT_EQ(oracle::wht_direct(TruthTable::from_bits("0001")).coeffs, (std::vector<std::int32_t>{2, 2, 2, -2}));
    EXPECT_THROW(oracle::wht_direct(TruthTable(13)), TooLarge);
    EXPECT_NO_THROW(oracle::wht_direct(TruthTable(10)));
}

TEST(Census, TwoVariables)
{
    const auto r = oracle::census(2);
    EXPECT_EQ(r.examined, 16U);
    EXPECT_EQ(r.count_bent, 8U);
    EXPECT_EQ(r.count_self_dual, 2U);
    EXPECT_EQ(r.count_anti_self_dual, 2U);
}

TEST(Census, FourVariables)
{
    const auto& r = testkit::census4();
    EXPECT_EQ(r.examined, 65536U);
    EXPECT_EQ(r.count_bent, 896U);
    EXPECT_EQ(r.count_self_dual, 20U);
    EXPECT_EQ(r.count_anti_self_dual, 20U);
    ASSERT_EQ(r.self_dual.size(), 20U);
}

TEST(Census, WitnessesAgreeWithCoreDual)
{
    for (const auto& f : testkit::census4().self_dual) {
        ASSERT_EQ(dual(f), f);
        ASSERT_TRUE(classify(f).is_self_dual);
    }
    for (const auto& f : testkit::census4().anti_self_dual) {
        ASSERT_EQ(dual(f), f.complement());
        ASSERT_TRUE(classify(f).is_anti_self_dual);
    }
}

TEST(Census, ThreadedMatchesSerial)
{
    const auto r = oracle::census(4, 3);
    EXPECT_EQ(r.count_bent, 896U);
    EXPECT_EQ(r.self_dual, testkit::census4().self_dual);
}

TEST(Census, GuardsAndSampledMode)
{
    EXPECT_THROW(oracle::census(6), TooLarge);
    EXPECT_THROW(oracle::census(3), TooLarge);
    RandomStream rng(1);
    const auto r = oracle::census_sampled(6, 2000, rng);
    EXPECT_FALSE(r.exhaustive);
    EXPECT_EQ(r.examined, 2000U);
    EXPECT_EQ(r.count_self_dual, r.self_dual.size());
}
