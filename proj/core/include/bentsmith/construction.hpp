#pragma once

#include <cstddef>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "bentsmith/expr_tree.hpp"
#include "bentsmith/fitness.hpp"
#include "bentsmith/random.hpp"
#include "bentsmith/truth_table.hpp"

namespace bentsmith {

/// Seed functions bound to the terminals f0..f3, all over the same n.
class SeedSet {
  public:
    explicit SeedSet(std::vector<TruthTable> seeds);

    int num_vars() const noexcept { return seeds_.front().num_vars(); }
    std::size_t size() const noexcept { return seeds_.size(); }
    const std::vector<TruthTable>& seeds() const noexcept { return seeds_; }
    const TruthTable& operator[](std::size_t i) const noexcept { return seeds_[i]; }

  private:
    std::vector<TruthTable> seeds_;
};

enum class Scheme { Incremental, Concurrent };

std::string_view to_string(Scheme scheme) noexcept;
Scheme parse_scheme(std::string_view name);

inline constexpr std::size_t kConstructionSets = 4;

struct ConstructionTask {
    std::vector<SeedSet> seed_sets;
    Scheme scheme = Scheme::Concurrent;
    ObjectiveKind objective = ObjectiveKind::SelfDualFit1;

    /// Checks the set count, shared seed dimension and that n + 2 is a valid
    /// objective size. Throws ConfigInvalid.
    void validate() const;

    int seed_vars() const noexcept { return seed_sets.front().num_vars(); }
    Objective target() const { return {objective, seed_vars() + 2}; }
    /// Sum of the per-set optima.
    std::int64_t optimum() const { return target().optimum() * static_cast<std::int64_t>(seed_sets.size()); }
};

/// (n+2)-variable function of the tree with seeds on the low n inputs and
/// x0, x1 as the two most significant inputs. Throws MissingSeed.
TruthTable expand(const ExprTree& tree, const SeedSet& seeds);

struct ConstructionScore {
    FitnessValue total;
    std::vector<FitnessValue> per_set;  // only the sets actually evaluated
};

/// Scores one construction over a task, reusing per-set evaluators. Not
/// thread-safe; one instance per run.
class ConstructionScorer {
  public:
    explicit ConstructionScorer(ConstructionTask task);

    const ConstructionTask& task() const noexcept { return task_; }

    ConstructionScore score(const ExprTree& tree);
    TruthTable expand(const ExprTree& tree, std::size_t set);

  private:
    ConstructionTask task_;
    Objective objective_;
    std::vector<TreeEvaluator> evaluators_;
};

/// Incremental: set 1 gates the rest, which are only scored after a perfect
/// first score. Concurrent: every set is scored. Either way the sum is
/// returned.
ConstructionScore score_construction(const ExprTree& tree, const ConstructionTask& task);

/// True iff expand(tree) = g(x0, x1) xor f_i(x) for some seed i and some
/// two-variable g, checked quadrant by quadrant.
bool is_trivial(const ExprTree& tree, const SeedSet& seeds);
bool is_trivial(const TruthTable& expanded, const SeedSet& seeds);

/// Reads one truth-table record per line; blank lines and '#' comments are
/// skipped. Throws ParseError naming the line.
std::vector<TruthTable> read_records(std::istream& in);

/// Seeds must be self-dual bent for self-dual objectives, anti-self-dual for
/// anti-self-dual objectives, bent for the nonlinearity objective. Throws
/// ConfigInvalid naming the first offending entry.
void validate_seed_pool(const std::vector<TruthTable>& pool, ObjectiveKind objective);

/// `sets` groups of `per_set` seeds. Without replacement from the whole pool
/// when it is large enough; otherwise each group draws distinct seeds on
/// its own and groups may share seeds.
std::vector<SeedSet> sample_seed_sets(const std::vector<TruthTable>& pool, std::size_t sets, std::size_t per_set,
                                      RandomStream& rng);

}  // namespace bentsmith
