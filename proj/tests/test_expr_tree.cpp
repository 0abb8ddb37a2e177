#include <gtest/gtest.h>

#include "bentsmith/error.hpp"
#include "bentsmith/expr_tree.hpp"
#include "bentsmith/oracle.hpp"
#include "bentsmith/tree_variation.hpp"
#include "support/generators.hpp"

using namespace bentsmith;

namespace {

ExprTree tree(std::string_view text, int n = 2)
{
    return ExprTree::parse(text, TerminalSet::direct(n));
}

std::string table(std::string_view text, int n = 2)
{
    return eval_tree(tree(text, n), n).to_bits();
}

}  // namespace

TEST(EvalTree, Examples)
{
    EXPECT_EQ(table("XOR(x1, x2)"), "0110");
    EXPECT_EQ(table("AND2(x1, x2)"), "0010");
    // enumerated by hand: (x1,x2) = 00 -> NOT x2 = 1, 01 -> 0, 10 -> x2 = 0, 11 -> 1
    EXPECT_EQ(oracle::eval_tree_naive(tree("IF(x1, x2, NOT(x2))"), 2).to_bits(), "1001");
    EXPECT_EQ(table("IF(x1, x2, NOT(x2))"), "1001");
}

TEST(EvalTree, OperatorSemantics)
{
    EXPECT_EQ(table("NOT(x1)", 1), "10");
    EXPECT_EQ(table("OR(x1, x2)"), "0111");
    EXPECT_EQ(table("AND(x1, x2)"), "0001");
    EXPECT_EQ(table("XNOR(x1, x2)"), "1001");
    EXPECT_EQ(table("AND2(x1, x2)"), "0010");
    EXPECT_EQ(table("XOR(x1, x2)"), "0110");
    // IF(c, t, e) over (c, t, e) = (x1, x2, x3)
    EXPECT_EQ(table("IF(x1, x2, x3)", 3), "01010011");
    EXPECT_EQ(table("x2", 2), "0101");
}

TEST(EvalTree, UnboundVariable)
{
    const auto t = tree("XOR(x1, x3)", 3);
    EXPECT_THROW(eval_tree(t, 2), UnboundVariable);
    EXPECT_THROW(tree("x3", 2), UnboundVariable);
    EXPECT_THROW(tree("x0", 2), UnboundVariable);
}

TEST(EvalTree, PackedMatchesNaiveOnRandomTrees)
{
    RandomStream rng(21);
    for (int k = 0; k < 1000; ++k) {
        const int n = 1 + k % 10;
        const auto terms = TerminalSet::direct(n);
        const auto t = ramped_tree(terms, DepthPolicy(1 + k % 6), rng);
        const auto packed = eval_tree(t, n);
        ASSERT_EQ(packed, oracle::eval_tree_naive(t, n)) << t.to_string(terms);
        ASSERT_EQ(packed, eval_tree(t, n));
    }
}

TEST(EvalTree, LargeArityUsesAllWords)
{
    const auto t = tree("AND(x1, x16)", 16);
    const auto tt = eval_tree(t, 16);
    EXPECT_EQ(tt.weight(), 1U << 14);
    EXPECT_FALSE(tt.get(0x7FFF));
    EXPECT_TRUE(tt.get(0x8001));
}

TEST(ExprTree, StructureQueries)
{
    const auto t = tree("IF(x1, x2, XOR(x1, NOT(x2)))");
    EXPECT_EQ(t.size(), 7U);
    EXPECT_EQ(t.depth(), 3);
    EXPECT_EQ(t.subtree_end(0), 7U);
    EXPECT_EQ(t.subtree_end(3), 7U);
    EXPECT_EQ(t.subtree_size(5), 2U);
    EXPECT_EQ(t.node_depths(), (std::vector<int>{0, 1, 1, 1, 2, 2, 3}));
    EXPECT_EQ(tree("x1").depth(), 0);
    EXPECT_EQ(t.replace(3, tree("x1")).to_string(TerminalSet::direct(2)), "IF(x1, x2, x1)");
}

TEST(ExprTree, ParseErrors)
{
    EXPECT_THROW(tree("XOR(x1)"), ParseError);
    EXPECT_THROW(tree("XOR(x1, x2) x1"), ParseError);
    EXPECT_THROW(tree("FOO(x1, x2)"), ParseError);
    EXPECT_THROW(tree("f0"), MissingSeed);
    EXPECT_THROW(ExprTree(std::vector<Node>{}), ParseError);
    EXPECT_THROW(ExprTree(std::vector<Node>{{Op::Xor, 0}, {Op::Var, 0}}), ParseError);
}

TEST(ExprTree, SerializationRoundTrip)
{
    RandomStream rng(22);
    for (const auto& terms : {TerminalSet::direct(8), TerminalSet::construction(4, 4)}) {
        for (int k = 0; k < 300; ++k) {
            const auto t = ramped_tree(terms, DepthPolicy(5), rng);
            ASSERT_EQ(ExprTree::parse(t.to_string(terms), terms), t);
        }
    }
    const auto cons = TerminalSet::construction(4, 2);
    EXPECT_EQ(ExprTree::parse("IF(x0,f0,XOR( x1 ,f1))", cons).to_string(cons), "IF(x0, f0, XOR(x1, f1))");
}
