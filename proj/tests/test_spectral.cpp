#include <gtest/gtest.h>

#include "bentsmith/error.hpp"
#include "bentsmith/oracle.hpp"
#include "bentsmith/spectral.hpp"
#include "support/generators.hpp"

using namespace bentsmith;

namespace {

std::vector<std::int32_t> coeffs(std::string_view bits)
{
    return wht_fast(TruthTable::from_bits(bits)).coeffs;
}

}  // namespace

TEST(WhtFast, SmallExamples)
{
    EXPECT_EQ(coeffs("0000"), (std::vector<std::int32_t>{4, 0, 0, 0}));
    EXPECT_EQ(coeffs("0110"), (std::vector<std::int32_t>{0, 0, 0, 4}));
    // x1 x2; expected values taken from the direct summation oracle
    EXPECT_EQ(oracle::wht_direct(TruthTable::from_bits("0001")).coeffs, (std::vector<std::int32_t>{2, 2, 2, -2}));
    EXPECT_EQ(coeffs("0001"), (std::vector<std::int32_t>{2, 2, 2, -2}));
}

TEST(WhtFast, MatchesDirectOracle)
{
    for (int n : {1, 2, 3})
        for (const auto& tt : testkit::all_tables(n)) ASSERT_EQ(wht_fast(tt), oracle::wht_direct(tt)) << tt.to_record();
    RandomStream rng(3);
    for (int n = 4; n <= 10; ++n)
        for (int k = 0; k < (n <= 8 ? 1000 : 100); ++k) {
            const auto tt = testkit::random_table(n, rng);
            ASSERT_EQ(wht_fast(tt), oracle::wht_direct(tt)) << tt.to_record();
        }
}

TEST(WhtFast, ParsevalAndWeightIdentity)
{
    RandomStream rng(5);
    for (int n : {1, 2, 4, 6, 8, 10, 12, 16}) {
        for (int k = 0; k < (n >= 12 ? 20 : 1000); ++k) {
            const auto tt = testkit::random_table(n, rng);
            const auto ws = wht_fast(tt);
            std::int64_t energy = 0;
            for (auto c : ws.coeffs) {
                energy += std::int64_t{c} * c;
                ASSERT_EQ(c % 2, 0);
                ASSERT_LE(std::abs(c), 1 << n);
            }
            ASSERT_EQ(energy, std::int64_t{1} << (2 * n));
            ASSERT_EQ(ws.coeffs[0], (1 << n) - 2 * static_cast<std::int32_t>(tt.weight()));
        }
    }
}

TEST(Nonlinearity, Examples)
{
    EXPECT_EQ(nonlinearity(wht_fast(TruthTable::from_bits("0000"))), 0);
    EXPECT_EQ(nonlinearity(wht_fast(TruthTable::from_bits("0001"))), 1);
    EXPECT_EQ(bent_nonlinearity(16), 32640);
    EXPECT_EQ(bent_nonlinearity(14), 8128);
    EXPECT_EQ(bent_nonlinearity(8), 120);
    EXPECT_THROW(bent_nonlinearity(7), OddN);
}

TEST(Nonlinearity, CoveringRadiusBound)
{
    RandomStream rng(9);
    for (int n : {2, 4, 6, 8, 10}) {
        const int bound = bent_nonlinearity(n);
        for (int k = 0; k < 500; ++k) {
            const auto ws = wht_fast(testkit::random_table(n, rng));
            const int nl = nonlinearity(ws);
            ASSERT_LE(nl, bound);
            ASSERT_EQ(nl == bound, is_bent(ws));
        }
    }
    for (const auto& tt : testkit::all_tables(4)) {
        const auto ws = wht_fast(tt);
        ASSERT_EQ(nonlinearity(ws) == 6, is_bent(ws));
    }
}

TEST(IsBent, Examples)
{
    EXPECT_TRUE(is_bent(WalshSpectrum{2, {2, 2, 2, -2}}));
    EXPECT_FALSE(is_bent(WalshSpectrum{2, {4, 0, 0, 0}}));
    for (const auto& tt : testkit::all_tables(3)) EXPECT_FALSE(is_bent(wht_fast(tt)));
}

TEST(Dual, Examples)
{
    EXPECT_EQ(dual(TruthTable::from_bits("0001")).to_bits(), "0001");
    EXPECT_EQ(dual(TruthTable::from_bits("0111")).to_bits(), "1000");
    EXPECT_THROW(dual(TruthTable::from_bits("0000")), NotBent);
}

TEST(Dual, InvolutionOnAllBentOfFourVariables)
{
    ASSERT_EQ(testkit::bent4().size(), 896U);
    for (const auto& f : testkit::bent4()) {
        const auto d = dual(f);
        ASSERT_TRUE(is_bent(wht_fast(d)));
        ASSERT_EQ(dual(d), f);
    }
}

TEST(Classify, Examples)
{
    const auto sd = classify(TruthTable::from_bits("0001"));
    EXPECT_EQ(sd.nonlinearity, 1);
    EXPECT_TRUE(sd.is_bent);
    EXPECT_TRUE(sd.is_self_dual);
    EXPECT_FALSE(sd.is_anti_self_dual);

    const auto asd = classify(TruthTable::from_bits("0111"));
    EXPECT_EQ(asd.nonlinearity, 1);
    EXPECT_TRUE(asd.is_bent);
    EXPECT_FALSE(asd.is_self_dual);
    EXPECT_TRUE(asd.is_anti_self_dual);

    const auto affine = classify(TruthTable::from_bits("0011"));
    EXPECT_EQ(affine.nonlinearity, 0);
    EXPECT_FALSE(affine.is_bent);
    EXPECT_FALSE(affine.is_self_dual || affine.is_anti_self_dual);
    EXPECT_EQ(affine.max_abs_coeff, 4);
}

TEST(Classify, FlagInvariantsAndComplementSymmetry)
{
    for (int n : {2, 4}) {
        for (const auto& f : testkit::all_tables(n)) {
            const auto r = classify(f);
            ASSERT_FALSE(r.is_self_dual && r.is_anti_self_dual);
            if (r.is_self_dual || r.is_anti_self_dual) ASSERT_TRUE(r.is_bent);
            if (r.is_self_dual) ASSERT_TRUE(classify(f.complement()).is_self_dual);
            if (r.is_anti_self_dual) ASSERT_TRUE(classify(f.complement()).is_anti_self_dual);
        }
    }
}
