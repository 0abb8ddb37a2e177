#include "experiment.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "bentsmith/error.hpp"
#include "bentsmith/oracle.hpp"
#include "bentsmith/problems.hpp"
#include "bentsmith/spectral.hpp"

namespace bentsmith::cli {

namespace {

using nlohmann::json;

std::string_view to_string(Encoding e)
{
    return e == Encoding::Tree ? "gp" : "tt";
}

std::string format_double(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_quote(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

std::vector<std::string> csv_split(const std::string& line)
{
    std::vector<std::string> fields(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                fields.back() += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                fields.back() += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.emplace_back();
        } else if (c != '\r') {
            fields.back() += c;
        }
    }
    return fields;
}

json to_json(const FiveNumberSummary& s)
{
    return {{"min", s.min}, {"q1", s.q1},     {"median", s.median}, {"q3", s.q3},
            {"max", s.max}, {"mean", s.mean}, {"count", s.count}};
}

std::ofstream open_output(const std::filesystem::path& path)
{
    std::ofstream out(path);
    if (!out) throw ConfigInvalid("cannot write " + path.string());
    return out;
}

DepthPolicy depth_policy(const ExperimentSpec& spec, int vars)
{
    if (spec.max_depth) return DepthPolicy(*spec.max_depth);
    return DepthPolicy::for_vars(vars, spec.literal_depth_rule);
}

void write_outputs(const ExperimentSpec& spec, const CampaignOutput& result, json header)
{
    std::filesystem::create_directories(spec.out_dir);
    {
        auto csv = open_output(spec.out_dir / "runs.csv");
        write_runs_csv(result.runs, csv);
    }
    {
        auto genomes = open_output(spec.out_dir / "genomes.txt");
        for (const auto& r : result.runs) genomes << r.run_index << '\t' << r.best_genome << '\n';
    }
    const auto& s = result.summary;
    header["config"] = {{"population_size", spec.engine.population_size},
                        {"max_evaluations", spec.engine.max_evaluations},
                        {"tournament_size", spec.engine.tournament_size},
                        {"p_mut", spec.engine.p_mut},
                        {"repetitions", spec.engine.repetitions},
                        {"rng_seed", spec.engine.rng_seed},
                        {"jobs", spec.jobs}};
    header["optimal_runs"] = s.optimal_runs;
    header["fitness"] = to_json(s.fitness);
    header["nonlinearity"] = to_json(s.nonlinearity);
    json trivial = json::array();
    for (const auto& r : result.runs)
        if (r.trivial) trivial.push_back(*r.trivial);
    if (!trivial.empty()) {
        header["trivial"] = trivial;
        header["best_nontrivial"] = s.best_nontrivial ? json(*s.best_nontrivial) : json(nullptr);
    }
    auto js = open_output(spec.out_dir / "summary.json");
    js << header.dump(2) << '\n';
}

void print_summary(std::ostream& log, const CampaignOutput& result, std::int64_t optimum)
{
    const auto& s = result.summary;
    log << "runs=" << s.fitness.count << " optimum=" << optimum << " best=" << format_double(s.fitness.max)
        << " median=" << format_double(s.fitness.median) << " optimal_runs=" << s.optimal_runs
        << " best_nl=" << s.nonlinearity.max << '\n';
}

std::uint64_t parse_u64(const std::string& text)
{
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw ConfigInvalid("invalid 64-bit seed '" + text + "'");
    return v;
}

}  // namespace

void ExperimentSpec::validate() const
{
    engine.validate();
    if (engine.tournament_size != 3) throw ConfigInvalid("tournament size is fixed at 3");
    if (subcommand == Subcommand::EvolveConstruction) {
        if (encoding != Encoding::Tree) throw ConfigInvalid("evolve-construction requires the gp encoding");
        if (seeds_file.empty()) throw ConfigInvalid("evolve-construction requires --seeds <file>");
        if (sets != kConstructionSets) throw ConfigInvalid("construction tasks use exactly 4 seed sets");
    }
    if (subcommand == Subcommand::Evolve) (void)Objective(objective, n);
}

std::uint64_t resolve_seed(std::optional<std::uint64_t> flag)
{
    if (flag) return *flag;
    if (const char* env = std::getenv("BENTSMITH_SEED"); env && *env) return parse_u64(env);
    std::random_device rd;
    return (std::uint64_t{rd()} << 32) ^ rd();
}

void write_runs_csv(const std::vector<RunRecord>& runs, std::ostream& out)
{
    out << "run_index,rng_seed,best_fitness,evaluations_to_best,nonlinearity,is_bent,is_self_dual,"
           "is_anti_self_dual,wall_time_ms,genome\n";
    for (const auto& r : runs) {
        const auto& rep = r.best_report;
        out << r.run_index << ',' << r.rng_seed << ',' << format_double(r.best_fitness.value) << ','
            << r.evaluations_to_best << ',' << rep.nonlinearity << ',' << rep.is_bent << ',' << rep.is_self_dual << ','
            << rep.is_anti_self_dual << ',' << format_double(r.wall_time_ms) << ',' << csv_quote(r.best_genome)
            << '\n';
    }
}

std::vector<CsvRow> read_runs_csv(std::istream& in)
{
    std::vector<CsvRow> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        if (++lineno == 1 || line.empty()) continue;
        const auto f = csv_split(line);
        if (f.size() != 10) throw ParseError("runs.csv line " + std::to_string(lineno) + ": expected 10 fields");
        CsvRow r;
        r.run_index = std::stoi(f[0]);
        r.rng_seed = std::stoull(f[1]);
        r.best_fitness = std::stod(f[2]);
        r.evaluations_to_best = std::stoll(f[3]);
        r.nonlinearity = std::stoi(f[4]);
        r.is_bent = f[5] == "1";
        r.is_self_dual = f[6] == "1";
        r.is_anti_self_dual = f[7] == "1";
        r.wall_time_ms = std::stod(f[8]);
        r.genome = f[9];
        rows.push_back(std::move(r));
    }
    return rows;
}

CampaignOutput evolve_campaign(const ExperimentSpec& spec)
{
    spec.validate();
    const Objective objective(spec.objective, spec.n);
    CampaignOutput out;
    if (spec.encoding == Encoding::TruthTable) {
        out.runs = run_campaign(spec.engine, [&] { return BitstringProblem(objective); }, spec.jobs);
    } else {
        const auto policy = depth_policy(spec, spec.n);
        out.runs = run_campaign(spec.engine, [&] { return TreeProblem(objective, policy); }, spec.jobs);
    }
    out.summary = summarize(out.runs);
    return out;
}

CampaignOutput construction_campaign(const ExperimentSpec& spec, std::vector<SeedSet>* used_sets)
{
    spec.validate();
    std::ifstream in(spec.seeds_file);
    if (!in) throw ConfigInvalid("cannot read seed pool " + spec.seeds_file.string());
    const auto pool = read_records(in);
    validate_seed_pool(pool, spec.objective);

    RandomStream sampler(derive_seed(spec.engine.rng_seed, ~std::uint64_t{0}));
    ConstructionTask task{sample_seed_sets(pool, spec.sets, spec.seeds_per_set, sampler), spec.scheme,
                          spec.objective};
    task.validate();
    if (used_sets) *used_sets = task.seed_sets;

    const auto policy = depth_policy(spec, task.seed_vars() + 2);
    CampaignOutput out;
    out.runs = run_campaign(
        spec.engine, [&] { return ConstructionProblem(task, policy, spec.reject_trivial); }, spec.jobs);
    out.summary = summarize(out.runs);
    return out;
}

int cmd_evolve(const ExperimentSpec& spec, std::ostream& log)
{
    const auto result = evolve_campaign(spec);
    json header{{"subcommand", "evolve"},
                {"encoding", to_string(spec.encoding)},
                {"objective", bentsmith::to_string(spec.objective)},
                {"n", spec.n},
                {"optimum", Objective(spec.objective, spec.n).optimum()}};
    if (spec.encoding == Encoding::Tree) header["max_depth"] = depth_policy(spec, spec.n).max_depth;
    write_outputs(spec, result, header);

    if (spec.witnesses_file) {
        std::set<std::string> seen;
        auto out = open_output(*spec.witnesses_file);
        for (const auto& r : result.runs)
            if (r.best_fitness.optimal && seen.insert(r.best_table).second) out << r.best_table << '\n';
    }
    print_summary(log, result, Objective(spec.objective, spec.n).optimum());
    return 0;
}

int cmd_evolve_construction(const ExperimentSpec& spec, std::ostream& log)
{
    std::vector<SeedSet> sets;
    const auto result = construction_campaign(spec, &sets);
    const int seed_vars = sets.front().num_vars();
    json seed_sets = json::array();
    for (const auto& ss : sets) {
        json group = json::array();
        for (const auto& s : ss.seeds()) group.push_back(s.to_record());
        seed_sets.push_back(group);
    }
    const ConstructionTask task{sets, spec.scheme, spec.objective};
    json header{{"subcommand", "evolve-construction"},
                {"encoding", "gp"},
                {"objective", bentsmith::to_string(spec.objective)},
                {"seed_vars", seed_vars},
                {"n", seed_vars + 2},
                {"scheme", to_string(spec.scheme)},
                {"reject_trivial", spec.reject_trivial},
                {"max_depth", depth_policy(spec, seed_vars + 2).max_depth},
                {"optimum", task.optimum()},
                {"seed_sets", seed_sets}};
    write_outputs(spec, result, header);
    print_summary(log, result, task.optimum());
    if (result.summary.best_nontrivial)
        log << "best_nontrivial=" << format_double(*result.summary.best_nontrivial) << '\n';
    return 0;
}

int cmd_enumerate(const ExperimentSpec& spec, std::ostream& log)
{
    oracle::CensusReport report;
    if (spec.n == 2 || spec.n == 4) {
        report = oracle::census(spec.n, spec.jobs);
    } else {
        RandomStream rng(spec.engine.rng_seed);
        report = oracle::census_sampled(spec.n, spec.samples, rng);
    }
    log << "n=" << report.n << " mode=" << (report.exhaustive ? "exhaustive" : "sampled")
        << " examined=" << report.examined << " bent=" << report.count_bent
        << " self_dual=" << report.count_self_dual << " anti_self_dual=" << report.count_anti_self_dual << '\n';
    if (spec.witnesses_file) {
        auto out = open_output(*spec.witnesses_file);
        for (const auto& tt : spec.anti_witnesses ? report.anti_self_dual : report.self_dual)
            out << tt.to_record() << '\n';
    }
    return 0;
}

int cmd_analyze(std::istream& in, std::ostream& out)
{
    const auto tables = read_records(in);
    for (const auto& tt : tables) {
        const auto ws = wht_fast(tt);
        const auto r = classify(tt, ws);
        out << tt.to_record() << '\n';
        out << "  nonlinearity=" << r.nonlinearity << " max_abs_walsh=" << r.max_abs_coeff
            << " bent=" << (r.is_bent ? "yes" : "no") << " self_dual=" << (r.is_self_dual ? "yes" : "no")
            << " anti_self_dual=" << (r.is_anti_self_dual ? "yes" : "no") << '\n';
        if (tt.num_vars() % 2 == 0) {
            out << "  fit1(sd)=" << fit1(tt, ws, false).value << " fit2(sd)=" << format_double(fit2(tt, ws, false).value)
                << " fit1(asd)=" << fit1(tt, ws, true).value << " fit2(asd)=" << format_double(fit2(tt, ws, true).value)
                << '\n';
        } else {
            out << "  fitness undefined for odd n\n";
        }
        if (r.is_bent) out << "  dual=" << dual(ws).to_record() << '\n';
    }
    return 0;
}

int run_main(int argc, char** argv)
{
    CLI::App app{"Evolve and analyze (anti-)self-dual bent Boolean functions"};
    app.require_subcommand(1);

    ExperimentSpec spec;
    std::optional<std::uint64_t> seed_flag;
    std::string objective = "sd2";
    std::string encoding = "gp";
    std::string scheme = "concurrent";
    std::string depth_rule = "max";
    std::string witnesses;
    std::string analyze_file;

    auto add_engine = [&](CLI::App* cmd) {
        cmd->add_option("--objective", objective, "sd1|sd2|asd1|asd2|nl")->check(
            CLI::IsMember({"sd1", "sd2", "asd1", "asd2", "nl"}));
        cmd->add_option("--pop", spec.engine.population_size, "Population size")->capture_default_str();
        cmd->add_option("--evals", spec.engine.max_evaluations, "Fitness evaluation budget")->capture_default_str();
        cmd->add_option("--pmut", spec.engine.p_mut, "Mutation probability")->capture_default_str();
        cmd->add_option("--reps", spec.engine.repetitions, "Independent runs")->capture_default_str();
        cmd->add_option("--seed", seed_flag, "Campaign RNG seed (falls back to BENTSMITH_SEED)");
        cmd->add_option("--jobs", spec.jobs, "Runs executed in parallel")->capture_default_str();
        cmd->add_option("--max-depth", spec.max_depth, "Tree depth cap (overrides --depth-rule)");
        cmd->add_option("--depth-rule", depth_rule, "Default depth cap: max -> max(5,n-5), min -> min(5,n-5)")
            ->check(CLI::IsMember({"max", "min"}));
        cmd->add_option("--out", spec.out_dir, "Output directory")->capture_default_str();
        cmd->add_flag("--no-early-stop", [&](std::int64_t) { spec.engine.stop_at_optimum = false; },
                      "Keep running after the optimum is reached");
    };

    auto* evolve = app.add_subcommand("evolve", "Evolve functions directly");
    add_engine(evolve);
    evolve->add_option("--encoding", encoding, "tt|gp")->check(CLI::IsMember({"tt", "gp"}));
    evolve->add_option("--n", spec.n, "Number of variables")->required();
    evolve->add_option("--emit-witnesses", witnesses, "Write optimal truth tables found");

    auto* construct = app.add_subcommand("evolve-construction", "Evolve secondary constructions over seed sets");
    add_engine(construct);
    construct->add_option("--encoding", encoding, "Must be gp")->check(CLI::IsMember({"gp"}));
    construct->add_option("--seeds", spec.seeds_file, "Seed pool file")->required();
    construct->add_option("--scheme", scheme, "incremental|concurrent")
        ->check(CLI::IsMember({"incremental", "concurrent"}));
    construct->add_option("--sets", spec.sets, "Number of seed sets")->capture_default_str();
    construct->add_option("--seeds-per-set", spec.seeds_per_set, "Seeds bound to f0..f3")->capture_default_str();
    construct->add_flag("--reject-trivial", spec.reject_trivial, "Score trivial constructions as zero");

    auto* enumerate = app.add_subcommand("enumerate", "Census of bent and (anti-)self-dual functions");
    enumerate->add_option("--n", spec.n, "Number of variables (2 or 4 exhaustive, otherwise sampled)")->required();
    enumerate->add_option("--emit-witnesses", witnesses, "Write the self-dual bent tables found");
    enumerate->add_flag("--anti", spec.anti_witnesses, "Emit anti-self-dual tables instead");
    enumerate->add_option("--samples", spec.samples, "Sample count in sampled mode")->capture_default_str();
    enumerate->add_option("--seed", seed_flag, "RNG seed for sampled mode");
    enumerate->add_option("--jobs", spec.jobs, "Worker threads")->capture_default_str();

    auto* analyze = app.add_subcommand("analyze", "Spectral report for truth-table records");
    analyze->add_option("file", analyze_file, "Record file, '-' for stdin")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        spec.objective = Objective::parse_kind(objective);
        spec.encoding = encoding == "tt" ? Encoding::TruthTable : Encoding::Tree;
        spec.scheme = parse_scheme(scheme);
        spec.literal_depth_rule = depth_rule == "min";
        if (!witnesses.empty()) spec.witnesses_file = witnesses;

        if (*analyze) {
            spec.subcommand = Subcommand::Analyze;
            if (analyze_file == "-") return cmd_analyze(std::cin, std::cout);
            std::ifstream in(analyze_file);
            if (!in) throw ConfigInvalid("cannot read " + analyze_file);
            return cmd_analyze(in, std::cout);
        }
        spec.engine.rng_seed = resolve_seed(seed_flag);
        if (*enumerate) {
            spec.subcommand = Subcommand::Enumerate;
            return cmd_enumerate(spec, std::cout);
        }
        if (*construct) {
            spec.subcommand = Subcommand::EvolveConstruction;
            return cmd_evolve_construction(spec, std::cout);
        }
        spec.subcommand = Subcommand::Evolve;
        return cmd_evolve(spec, std::cout);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace bentsmith::cli
