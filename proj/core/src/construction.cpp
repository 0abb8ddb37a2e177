#include "bentsmith/construction.hpp"

#include <istream>
#include <numeric>
#include <string>

#include "bentsmith/error.hpp"
#include "bentsmith/spectral.hpp"

namespace bentsmith {

SeedSet::SeedSet(std::vector<TruthTable> seeds) : seeds_(std::move(seeds))
{
    if (seeds_.empty() || seeds_.size() > 4) throw ConfigInvalid("a seed set holds between one and four functions");
    for (const auto& s : seeds_)
        if (s.num_vars() != seeds_.front().num_vars())
            throw SizeMismatch("all seeds of a set must share the same variable count");
}

std::string_view to_string(Scheme scheme) noexcept
{
    return scheme == Scheme::Incremental ? "incremental" : "concurrent";
}

Scheme parse_scheme(std::string_view name)
{
    if (name == "incremental") return Scheme::Incremental;
    if (name == "concurrent") return Scheme::Concurrent;
    throw ConfigInvalid("unknown scheme '" + std::string(name) + "' (expected incremental|concurrent)");
}

void ConstructionTask::validate() const
{
    if (seed_sets.size() != kConstructionSets)
        throw ConfigInvalid("a construction task needs exactly 4 seed sets, got " + std::to_string(seed_sets.size()));
    for (const auto& ss : seed_sets)
        if (ss.num_vars() != seed_vars()) throw ConfigInvalid("seed sets disagree on the variable count");
    (void)target();
}

TruthTable expand(const ExprTree& tree, const SeedSet& seeds)
{
    TreeEvaluator eval(seeds.num_vars() + 2, seeds.seeds());
    return eval(tree);
}

ConstructionScorer::ConstructionScorer(ConstructionTask task)
    : task_(std::move(task)), objective_((task_.validate(), task_.target()))
{
    for (const auto& ss : task_.seed_sets) evaluators_.emplace_back(ss.num_vars() + 2, ss.seeds());
}

TruthTable ConstructionScorer::expand(const ExprTree& tree, std::size_t set)
{
    return evaluators_.at(set)(tree);
}

ConstructionScore ConstructionScorer::score(const ExprTree& tree)
{
    ConstructionScore out;
    out.total.optimal = true;
    for (std::size_t k = 0; k < evaluators_.size(); ++k) {
        const auto fv = objective_.evaluate(evaluators_[k](tree));
        out.per_set.push_back(fv);
        out.total.value += fv.value;
        out.total.integer_part += fv.integer_part;
        out.total.optimal = out.total.optimal && fv.optimal;
        if (k == 0 && task_.scheme == Scheme::Incremental && !fv.optimal) break;
    }
    out.total.optimal = out.total.optimal && out.per_set.size() == evaluators_.size();
    return out;
}

ConstructionScore score_construction(const ExprTree& tree, const ConstructionTask& task)
{
    ConstructionScorer scorer(task);
    return scorer.score(tree);
}

bool is_trivial(const TruthTable& expanded, const SeedSet& seeds)
{
    const int n = seeds.num_vars();
    if (expanded.num_vars() != n + 2) throw SizeMismatch("expanded table must have n + 2 variables");
    const std::size_t quadrant = std::size_t{1} << n;
    for (const auto& seed : seeds.seeds()) {
        bool matches = true;
        for (std::size_t q = 0; q < 4 && matches; ++q) {
            const std::size_t base = q * quadrant;
            const bool offset = expanded.get(base) != seed.get(0);
            for (std::size_t x = 1; x < quadrant; ++x) {
                if ((expanded.get(base + x) != seed.get(x)) != offset) {
                    matches = false;
                    break;
                }
            }
        }
        if (matches) return true;
    }
    return false;
}

bool is_trivial(const ExprTree& tree, const SeedSet& seeds)
{
    return is_trivial(expand(tree, seeds), seeds);
}

std::vector<TruthTable> read_records(std::istream& in)
{
    std::vector<TruthTable> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        try {
            out.push_back(TruthTable::from_record(line));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

void validate_seed_pool(const std::vector<TruthTable>& pool, ObjectiveKind objective)
{
    if (pool.empty()) throw ConfigInvalid("seed pool is empty");
    for (std::size_t i = 0; i < pool.size(); ++i) {
        if (pool[i].num_vars() != pool.front().num_vars())
            throw ConfigInvalid("seed " + std::to_string(i + 1) + " has a different variable count");
        const auto r = classify(pool[i]);
        bool ok = r.is_bent;
        switch (objective) {
            case ObjectiveKind::SelfDualFit1:
            case ObjectiveKind::SelfDualFit2: ok = r.is_self_dual; break;
            case ObjectiveKind::AntiSelfDualFit1:
            case ObjectiveKind::AntiSelfDualFit2: ok = r.is_anti_self_dual; break;
            case ObjectiveKind::NonlinearityOnly: break;
        }
        if (!ok)
            throw ConfigInvalid("seed " + std::to_string(i + 1) + " (" + pool[i].to_record() +
                                ") does not have the property required by objective " +
                                std::string(to_string(objective)));
    }
}

std::vector<SeedSet> sample_seed_sets(const std::vector<TruthTable>& pool, std::size_t sets, std::size_t per_set,
                                      RandomStream& rng)
{
    if (per_set == 0 || per_set > 4) throw ConfigInvalid("seeds per set must be between 1 and 4");
    if (pool.size() < per_set)
        throw ConfigInvalid("seed pool has " + std::to_string(pool.size()) + " functions, need at least " +
                            std::to_string(per_set));

    auto partial_shuffle = [&](std::vector<std::size_t>& idx, std::size_t count) {
        for (std::size_t i = 0; i < count; ++i) std::swap(idx[i], idx[uniform_int(rng, i, idx.size() - 1)]);
    };

    std::vector<std::size_t> idx(pool.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    const bool disjoint = pool.size() >= sets * per_set;
    if (disjoint) partial_shuffle(idx, sets * per_set);

    std::vector<SeedSet> out;
    for (std::size_t s = 0; s < sets; ++s) {
        std::size_t offset = s * per_set;
        if (!disjoint) {
            partial_shuffle(idx, per_set);
            offset = 0;
        }
        std::vector<TruthTable> group;
        for (std::size_t k = 0; k < per_set; ++k) group.push_back(pool[idx[offset + k]]);
        out.emplace_back(std::move(group));
    }
    return out;
}

}  // namespace bentsmith
