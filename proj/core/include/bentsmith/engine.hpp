#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <concepts>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "bentsmith/error.hpp"
#include "bentsmith/fitness.hpp"
#include "bentsmith/random.hpp"
#include "bentsmith/spectral.hpp"

namespace bentsmith {

struct EngineConfig {
    std::int64_t population_size = 500;
    std::int64_t max_evaluations = 1'000'000;
    int tournament_size = 3;
    double p_mut = 0.5;
    int repetitions = 30;
    std::uint64_t rng_seed = 0;
    bool stop_at_optimum = true;

    /// Throws ConfigInvalid.
    void validate() const;
};

/// What a problem reports about the best genome of a run.
struct GenomeDetails {
    std::string genome;
    std::string table;  // truth-table record of the evaluated function
    SpectralReport report;
    std::optional<bool> trivial;  // construction runs only
};

struct TracePoint {
    std::int64_t evaluation = 0;
    double value = 0.0;

    friend bool operator==(const TracePoint&, const TracePoint&) = default;
};

struct RunRecord {
    int run_index = 0;
    std::uint64_t rng_seed = 0;
    FitnessValue best_fitness;
    std::string best_genome;
    std::string best_table;
    std::int64_t evaluations_to_best = 0;
    std::int64_t evaluations = 0;
    SpectralReport best_report;
    std::optional<bool> trivial;
    std::vector<TracePoint> trace;  // best-so-far improvements
    double wall_time_ms = 0.0;

    /// Equality of everything except the wall clock.
    bool same_outcome(const RunRecord& other) const;
};

/// A problem binds a genome type to its variation operators and objective.
template <typename P>
concept EvolutionProblem = requires(P& p, const typename P::Genome& g, RandomStream& rng) {
    { p.random_genome(rng) } -> std::same_as<typename P::Genome>;
    { p.crossover(g, g, rng) } -> std::same_as<typename P::Genome>;
    { p.mutate(g, rng) } -> std::same_as<typename P::Genome>;
    { p.evaluate(g) } -> std::same_as<FitnessValue>;
    { p.details(g) } -> std::same_as<GenomeDetails>;
};

/// Index of the individual removed by a tournament over `contestants`:
/// the lowest fitness, ties broken uniformly.
std::size_t tournament_loser(const std::vector<double>& contestant_values, RandomStream& rng);

/// `count` distinct indices drawn uniformly from [0, population).
std::vector<std::size_t> draw_distinct(std::size_t population, std::size_t count, RandomStream& rng);

/// Steady-state loop with tournament elimination: the loser of a random
/// tournament is replaced by the (optionally mutated) offspring of two of the
/// survivors. Every objective call, including the initial population, counts
/// against the budget. Stops early at the objective's optimum.
template <EvolutionProblem P>
RunRecord run_steady_state(const EngineConfig& cfg, P& problem, std::uint64_t seed, int run_index = 0)
{
    cfg.validate();
    using Genome = typename P::Genome;
    const auto started = std::chrono::steady_clock::now();
    RandomStream rng(seed);

    RunRecord rec;
    rec.run_index = run_index;
    rec.rng_seed = seed;

    std::vector<Genome> population;
    std::vector<double> fitness;
    population.reserve(static_cast<std::size_t>(cfg.population_size));
    fitness.reserve(static_cast<std::size_t>(cfg.population_size));

    std::optional<Genome> best;
    bool done = false;
    std::int64_t evals = 0;

    auto consider = [&](const Genome& g, const FitnessValue& fv) {
        ++evals;
        if (!best || fv.value > rec.best_fitness.value) {
            best = g;
            rec.best_fitness = fv;
            rec.evaluations_to_best = evals;
            rec.trace.push_back({evals, fv.value});
        }
        if (cfg.stop_at_optimum && fv.optimal) done = true;
    };

    for (std::int64_t i = 0; i < cfg.population_size && !done; ++i) {
        population.push_back(problem.random_genome(rng));
        const auto fv = problem.evaluate(population.back());
        fitness.push_back(fv.value);
        consider(population.back(), fv);
    }

    const auto tsize = static_cast<std::size_t>(cfg.tournament_size);
    while (!done && evals < cfg.max_evaluations) {
        auto picked = draw_distinct(population.size(), tsize, rng);
        std::vector<double> values;
        for (auto idx : picked) values.push_back(fitness[idx]);
        const auto loser_slot = tournament_loser(values, rng);
        const auto loser = picked[loser_slot];
        picked.erase(picked.begin() + static_cast<std::ptrdiff_t>(loser_slot));

        // random parent order
        if (coin(rng)) std::swap(picked[0], picked[1]);
        Genome child = problem.crossover(population[picked[0]], population[picked[1]], rng);
        if (coin(rng, cfg.p_mut)) child = problem.mutate(child, rng);

        const auto fv = problem.evaluate(child);
        population[loser] = std::move(child);
        fitness[loser] = fv.value;
        consider(population[loser], fv);
    }

    rec.evaluations = evals;
    const auto details = problem.details(*best);
    rec.best_genome = details.genome;
    rec.best_table = details.table;
    rec.best_report = details.report;
    rec.trivial = details.trivial;
    rec.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    return rec;
}

/// Five-number summary with linear interpolation between order statistics.
struct FiveNumberSummary {
    double min = 0, q1 = 0, median = 0, q3 = 0, max = 0;
    double mean = 0;
    std::size_t count = 0;
};

FiveNumberSummary summarize(std::vector<double> values);

struct CampaignSummary {
    FiveNumberSummary fitness;
    FiveNumberSummary nonlinearity;
    std::size_t optimal_runs = 0;
    /// Best fitness over runs whose best genome is not trivial; equals
    /// fitness.max when triviality does not apply.
    std::optional<double> best_nontrivial;
};

CampaignSummary summarize(const std::vector<RunRecord>& runs);

/// cfg.repetitions independent runs; run i uses derive_seed(cfg.rng_seed, i)
/// and a problem freshly made by `make_problem`. Results are ordered by run
/// index and do not depend on `jobs`.
template <typename Factory>
std::vector<RunRecord> run_campaign(const EngineConfig& cfg, Factory&& make_problem, unsigned jobs = 1)
{
    cfg.validate();
    const auto reps = static_cast<std::size_t>(cfg.repetitions);
    std::vector<RunRecord> out(reps);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        for (std::size_t i = next++; i < reps; i = next++) {
            try {
                auto problem = make_problem();
                out[i] = run_steady_state(cfg, problem, derive_seed(cfg.rng_seed, i), static_cast<int>(i));
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };

    jobs = std::clamp(jobs, 1U, static_cast<unsigned>(std::max<std::size_t>(reps, 1)));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

}  // namespace bentsmith
