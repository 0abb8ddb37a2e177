#pragma once

#include "bentsmith/bit_genome.hpp"
#include "bentsmith/construction.hpp"
#include "bentsmith/engine.hpp"
#include "bentsmith/expr_tree.hpp"
#include "bentsmith/fitness.hpp"
#include "bentsmith/tree_variation.hpp"

namespace bentsmith {

/// Truth-table encoding evolved directly against an objective.
class BitstringProblem {
  public:
    using Genome = BitGenome;

    explicit BitstringProblem(Objective objective) : objective_(objective) {}

    Genome random_genome(RandomStream& rng) const { return random_bit_genome(objective_.num_vars(), rng); }
    Genome crossover(const Genome& a, const Genome& b, RandomStream& rng) const { return bentsmith::crossover(a, b, rng); }
    Genome mutate(const Genome& g, RandomStream& rng) const { return bentsmith::mutate(g, rng); }
    FitnessValue evaluate(const Genome& g) const { return objective_.evaluate(g.bits); }
    GenomeDetails details(const Genome& g) const;

  private:
    Objective objective_;
};

/// Tree encoding over x1..xn.
class TreeProblem {
  public:
    using Genome = ExprTree;

    TreeProblem(Objective objective, DepthPolicy policy);

    Genome random_genome(RandomStream& rng) const { return ramped_tree(terms_, policy_, rng); }
    Genome crossover(const Genome& a, const Genome& b, RandomStream& rng) const { return cx_tree(a, b, policy_, rng); }
    Genome mutate(const Genome& g, RandomStream& rng) const { return mut_subtree(g, terms_, policy_, rng); }
    FitnessValue evaluate(const Genome& g) { return objective_.evaluate(eval_(g)); }
    GenomeDetails details(const Genome& g);

    const TerminalSet& terminals() const noexcept { return terms_; }

  private:
    Objective objective_;
    DepthPolicy policy_;
    TerminalSet terms_;
    TreeEvaluator eval_;
};

/// Tree encoding over x0, x1, f0..f3 scored across the task's seed sets.
/// With `reject_trivial`, trivial constructions (judged on the first seed
/// set) score zero.
class ConstructionProblem {
  public:
    using Genome = ExprTree;

    ConstructionProblem(ConstructionTask task, DepthPolicy policy, bool reject_trivial = false);

    Genome random_genome(RandomStream& rng) const { return ramped_tree(terms_, policy_, rng); }
    Genome crossover(const Genome& a, const Genome& b, RandomStream& rng) const { return cx_tree(a, b, policy_, rng); }
    Genome mutate(const Genome& g, RandomStream& rng) const { return mut_subtree(g, terms_, policy_, rng); }
    FitnessValue evaluate(const Genome& g);
    GenomeDetails details(const Genome& g);

    const TerminalSet& terminals() const noexcept { return terms_; }
    ConstructionScorer& scorer() noexcept { return scorer_; }

  private:
    ConstructionScorer scorer_;
    DepthPolicy policy_;
    TerminalSet terms_;
    bool reject_trivial_;
};

}  // namespace bentsmith
