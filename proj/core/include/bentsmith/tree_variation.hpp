#pragma once

#include <string_view>

#include "bentsmith/expr_tree.hpp"
#include "bentsmith/random.hpp"

namespace bentsmith {

struct DepthPolicy {
    int max_depth = 5;

    /// Throws ConfigInvalid unless max_depth >= 1.
    explicit DepthPolicy(int depth);

    /// Default depth cap for n inputs: max(5, n - 5). The literal rule
    /// min(5, n - 5) is available as `literal_min`.
    static DepthPolicy for_vars(int n, bool literal_min = false);
};

enum class TreeCrossover {
    Simple,
    Uniform,
    SizeFair,
    OnePoint,
    ContextPreserving,
};

inline constexpr TreeCrossover kTreeCrossovers[] = {TreeCrossover::Simple, TreeCrossover::Uniform,
                                                    TreeCrossover::SizeFair, TreeCrossover::OnePoint,
                                                    TreeCrossover::ContextPreserving};

std::string_view to_string(TreeCrossover kind) noexcept;

/// Grow: every internal position picks uniformly from functions and terminals.
ExprTree grow_tree(const TerminalSet& terms, int max_depth, RandomStream& rng);
/// Full: functions down to exactly `depth`, then terminals.
ExprTree full_tree(const TerminalSet& terms, int depth, RandomStream& rng);
/// Ramped half-and-half with depth drawn from [min(2, max_depth), max_depth].
ExprTree ramped_tree(const TerminalSet& terms, const DepthPolicy& policy, RandomStream& rng);

/// Replaces a uniformly chosen node by a grown subtree that keeps the
/// result within the depth cap.
ExprTree mut_subtree(const ExprTree& t, const TerminalSet& terms, const DepthPolicy& policy, RandomStream& rng);

/// One child of `kind`; falls back to a copy of `a` when no depth-respecting
/// child is produced within a bounded number of attempts.
ExprTree cx_tree(TreeCrossover kind, const ExprTree& a, const ExprTree& b, const DepthPolicy& policy,
                 RandomStream& rng);

/// Crossover with the sub-operator picked uniformly.
ExprTree cx_tree(const ExprTree& a, const ExprTree& b, const DepthPolicy& policy, RandomStream& rng);

}  // namespace bentsmith
