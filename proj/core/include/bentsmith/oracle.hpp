#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bentsmith/expr_tree.hpp"
#include "bentsmith/random.hpp"
#include "bentsmith/spectral.hpp"
#include "bentsmith/truth_table.hpp"

/// Brute-force references. Nothing here shares code with the fast paths it
/// is used to check.
namespace bentsmith::oracle {

inline constexpr int kDirectWhtMaxVars = 12;

/// Literal double sum over x and a, O(4^n). Throws TooLarge for n > 12.
WalshSpectrum wht_direct(const TruthTable& tt);

/// Evaluates one assignment by walking the tree node by node.
bool eval_tree_at(const ExprTree& tree, int num_vars, std::size_t input, std::span<const TruthTable> seeds = {});

/// Assignment-by-assignment truth table of a tree.
TruthTable eval_tree_naive(const ExprTree& tree, int num_vars, std::span<const TruthTable> seeds = {});

struct CensusReport {
    int n = 0;
    std::uint64_t examined = 0;
    std::uint64_t count_bent = 0;
    std::uint64_t count_self_dual = 0;
    std::uint64_t count_anti_self_dual = 0;
    bool exhaustive = true;
    std::vector<TruthTable> self_dual;  // witnesses, in index order
    std::vector<TruthTable> anti_self_dual;
};

/// Classifies all 2^(2^n) functions; n must be 2 or 4 (TooLarge otherwise).
/// Spectra come from the direct transform.
CensusReport census(int n, unsigned jobs = 1);

/// Random sample of `samples` functions for n where exhaustion is impossible.
CensusReport census_sampled(int n, std::uint64_t samples, RandomStream& rng);

}  // namespace bentsmith::oracle
