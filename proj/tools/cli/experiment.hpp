#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bentsmith/construction.hpp"
#include "bentsmith/engine.hpp"
#include "bentsmith/fitness.hpp"

namespace bentsmith::cli {

enum class Subcommand { Evolve, EvolveConstruction, Enumerate, Analyze };
enum class Encoding { TruthTable, Tree };

struct ExperimentSpec {
    Subcommand subcommand = Subcommand::Evolve;
    Encoding encoding = Encoding::Tree;
    ObjectiveKind objective = ObjectiveKind::SelfDualFit2;
    int n = 6;
    EngineConfig engine;
    unsigned jobs = 1;
    std::optional<int> max_depth;
    bool literal_depth_rule = false;

    // construction
    std::filesystem::path seeds_file;
    Scheme scheme = Scheme::Concurrent;
    std::size_t sets = kConstructionSets;
    std::size_t seeds_per_set = 4;
    bool reject_trivial = false;

    // enumerate
    std::optional<std::filesystem::path> witnesses_file;
    bool anti_witnesses = false;
    std::uint64_t samples = 100'000;

    // analyze
    std::filesystem::path input_file;

    std::filesystem::path out_dir = "results";

    /// Throws ConfigInvalid for inconsistent combinations.
    void validate() const;
};

/// Resolution order: explicit flag, then BENTSMITH_SEED, then a fresh random seed.
std::uint64_t resolve_seed(std::optional<std::uint64_t> flag);

/// Writes runs.csv, summary.json and genomes.txt under spec.out_dir and a
/// one-line summary to `log`. Returns the process exit status.
int cmd_evolve(const ExperimentSpec& spec, std::ostream& log);
int cmd_evolve_construction(const ExperimentSpec& spec, std::ostream& log);
int cmd_enumerate(const ExperimentSpec& spec, std::ostream& log);
int cmd_analyze(std::istream& in, std::ostream& out);

/// Outcome of a campaign together with the files describing it.
struct CampaignOutput {
    std::vector<RunRecord> runs;
    CampaignSummary summary;
};

/// The subcommands without any printing, for tests and tooling.
CampaignOutput evolve_campaign(const ExperimentSpec& spec);
CampaignOutput construction_campaign(const ExperimentSpec& spec, std::vector<SeedSet>* used_sets = nullptr);

void write_runs_csv(const std::vector<RunRecord>& runs, std::ostream& out);
/// Rows of a runs.csv as written by write_runs_csv.
struct CsvRow {
    int run_index = 0;
    std::uint64_t rng_seed = 0;
    double best_fitness = 0;
    std::int64_t evaluations_to_best = 0;
    int nonlinearity = 0;
    bool is_bent = false;
    bool is_self_dual = false;
    bool is_anti_self_dual = false;
    double wall_time_ms = 0;
    std::string genome;
};
std::vector<CsvRow> read_runs_csv(std::istream& in);

int run_main(int argc, char** argv);

}  // namespace bentsmith::cli
