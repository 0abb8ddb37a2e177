#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bentsmith/truth_table.hpp"

namespace bentsmith {

enum class Op : std::uint8_t {
    Var,   // input variable, index = position (0 = most significant input)
    Seed,  // seed function f_index (construction mode only)
    Not,
    Or,
    Xor,
    And,
    And2,  // a AND NOT b
    Xnor,
    If,    // IF(c, t, e) = c ? t : e
};

constexpr int arity(Op op) noexcept
{
    switch (op) {
        case Op::Var:
        case Op::Seed: return 0;
        case Op::Not: return 1;
        case Op::If: return 3;
        default: return 2;
    }
}

inline constexpr Op kFunctionSet[] = {Op::Not, Op::Or, Op::Xor, Op::And, Op::And2, Op::Xnor, Op::If};

struct Node {
    Op op = Op::Var;
    std::uint8_t index = 0;

    friend bool operator==(const Node&, const Node&) = default;
};

/// Which leaves a tree may use and how they are spelled.
///
/// Direct search: n variables named x1..xn. Construction mode: the two new
/// variables x0, x1 occupy the two most significant input positions of the
/// (n+2)-variable result and the seeds f0..f3 are evaluated on the low n bits.
struct TerminalSet {
    int num_vars = 0;   // inputs of the evaluated function
    int free_vars = 0;  // Var leaves available (positions 0..free_vars-1)
    int num_seeds = 0;
    int var_base = 1;   // printed index of position 0

    static TerminalSet direct(int n);
    static TerminalSet construction(int seed_vars, int num_seeds);

    std::size_t size() const noexcept { return static_cast<std::size_t>(free_vars + num_seeds); }
    Node terminal(std::size_t k) const noexcept;
};

/// Expression tree stored as a prefix-order node sequence.
class ExprTree {
  public:
    /// Throws ParseError if the sequence is not exactly one well-formed tree.
    explicit ExprTree(std::vector<Node> nodes);

    std::span<const Node> nodes() const noexcept { return nodes_; }
    std::size_t size() const noexcept { return nodes_.size(); }
    const Node& operator[](std::size_t i) const noexcept { return nodes_[i]; }

    /// Leaf-only tree has depth 0.
    int depth() const;

    /// One past the last node of the subtree rooted at i.
    std::size_t subtree_end(std::size_t i) const noexcept;
    std::size_t subtree_size(std::size_t i) const noexcept { return subtree_end(i) - i; }

    /// Depth of every node below the root (root = 0).
    std::vector<int> node_depths() const;

    /// Copy of the subtree rooted at i.
    ExprTree subtree(std::size_t i) const;

    /// Copy with the subtree at i replaced by `donor`.
    ExprTree replace(std::size_t i, const ExprTree& donor) const;

    bool uses_seeds() const noexcept;

    std::string to_string(const TerminalSet& terms) const;
    static ExprTree parse(std::string_view text, const TerminalSet& terms);

    friend bool operator==(const ExprTree&, const ExprTree&) = default;

  private:
    std::vector<Node> nodes_;
};

/// Bitwise-parallel evaluator: one pass over the packed words computes all
/// 2^n assignments. Holds scratch buffers, so one instance per thread.
class TreeEvaluator {
  public:
    /// Seeds may have fewer variables than `num_vars`; they are read from the
    /// low input bits. Throws SizeMismatch if a seed has more variables.
    explicit TreeEvaluator(int num_vars, std::span<const TruthTable> seeds = {});

    int num_vars() const noexcept { return n_; }

    /// Throws UnboundVariable / MissingSeed for leaves outside the bound set.
    TruthTable operator()(const ExprTree& tree);

  private:
    int n_;
    std::size_t words_;
    std::vector<std::vector<std::uint64_t>> vars_;
    std::vector<std::vector<std::uint64_t>> seeds_;
    std::vector<std::uint64_t> stack_;
};

/// Truth table of `tree` over n variables (direct mode leaves only).
TruthTable eval_tree(const ExprTree& tree, int n);

std::string_view op_name(Op op) noexcept;

}  // namespace bentsmith
