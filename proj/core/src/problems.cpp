#include "bentsmith/problems.hpp"

#include <algorithm>

namespace bentsmith {

GenomeDetails BitstringProblem::details(const Genome& g) const
{
    return {g.bits.to_record(), g.bits.to_record(), classify(g.bits), std::nullopt};
}

TreeProblem::TreeProblem(Objective objective, DepthPolicy policy)
    : objective_(objective),
      policy_(policy),
      terms_(TerminalSet::direct(objective.num_vars())),
      eval_(objective.num_vars())
{
}

GenomeDetails TreeProblem::details(const Genome& g)
{
    const auto tt = eval_(g);
    return {g.to_string(terms_), tt.to_record(), classify(tt), std::nullopt};
}

ConstructionProblem::ConstructionProblem(ConstructionTask task, DepthPolicy policy, bool reject_trivial)
    : scorer_(std::move(task)), policy_(policy), reject_trivial_(reject_trivial)
{
    const auto& sets = scorer_.task().seed_sets;
    std::size_t seeds = sets.front().size();
    for (const auto& ss : sets) seeds = std::min(seeds, ss.size());
    terms_ = TerminalSet::construction(scorer_.task().seed_vars(), static_cast<int>(seeds));
}

FitnessValue ConstructionProblem::evaluate(const Genome& g)
{
    if (reject_trivial_ && is_trivial(scorer_.expand(g, 0), scorer_.task().seed_sets.front())) return {};
    return scorer_.score(g).total;
}

GenomeDetails ConstructionProblem::details(const Genome& g)
{
    const auto tt = scorer_.expand(g, 0);
    return {g.to_string(terms_), tt.to_record(), classify(tt), is_trivial(tt, scorer_.task().seed_sets.front())};
}

}  // namespace bentsmith
