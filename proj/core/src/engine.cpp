#include "bentsmith/engine.hpp"

#include <cmath>
#include <numeric>

namespace bentsmith {

void EngineConfig::validate() const
{
    if (tournament_size < 2) throw ConfigInvalid("tournament size must be at least 2");
    if (population_size < tournament_size)
        throw ConfigInvalid("population size must be at least the tournament size");
    if (max_evaluations < population_size)
        throw ConfigInvalid("evaluation budget must cover the initial population");
    if (!(p_mut >= 0.0 && p_mut <= 1.0)) throw ConfigInvalid("mutation probability must lie in [0, 1]");
    if (repetitions < 1) throw ConfigInvalid("at least one repetition is required");
}

bool RunRecord::same_outcome(const RunRecord& o) const
{
    return run_index == o.run_index && rng_seed == o.rng_seed && best_fitness == o.best_fitness &&
           best_genome == o.best_genome && best_table == o.best_table && evaluations_to_best == o.evaluations_to_best &&
           evaluations == o.evaluations && best_report == o.best_report && trivial == o.trivial && trace == o.trace;
}

std::size_t tournament_loser(const std::vector<double>& values, RandomStream& rng)
{
    const double worst = *std::min_element(values.begin(), values.end());
    std::vector<std::size_t> tied;
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i] == worst) tied.push_back(i);
    return tied.size() == 1 ? tied.front() : tied[uniform_int<std::size_t>(rng, 0, tied.size() - 1)];
}

std::vector<std::size_t> draw_distinct(std::size_t population, std::size_t count, RandomStream& rng)
{
    std::vector<std::size_t> out;
    while (out.size() < count) {
        const auto idx = uniform_int<std::size_t>(rng, 0, population - 1);
        if (std::find(out.begin(), out.end(), idx) == out.end()) out.push_back(idx);
    }
    return out;
}

FiveNumberSummary summarize(std::vector<double> values)
{
    FiveNumberSummary s;
    s.count = values.size();
    if (values.empty()) return s;
    std::sort(values.begin(), values.end());
    auto quantile = [&](double p) {
        const double pos = p * static_cast<double>(values.size() - 1);
        const auto lo = static_cast<std::size_t>(std::floor(pos));
        const auto hi = std::min(lo + 1, values.size() - 1);
        return values[lo] + (pos - static_cast<double>(lo)) * (values[hi] - values[lo]);
    };
    s.min = values.front();
    s.q1 = quantile(0.25);
    s.median = quantile(0.5);
    s.q3 = quantile(0.75);
    s.max = values.back();
    s.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
    return s;
}

CampaignSummary summarize(const std::vector<RunRecord>& runs)
{
    std::vector<double> fit, nl;
    CampaignSummary s;
    for (const auto& r : runs) {
        fit.push_back(r.best_fitness.value);
        nl.push_back(r.best_report.nonlinearity);
        s.optimal_runs += r.best_fitness.optimal;
        if (!r.trivial.value_or(false))
            s.best_nontrivial = std::max(s.best_nontrivial.value_or(r.best_fitness.value), r.best_fitness.value);
    }
    s.fitness = summarize(std::move(fit));
    s.nonlinearity = summarize(std::move(nl));
    return s;
}

}  // namespace bentsmith
