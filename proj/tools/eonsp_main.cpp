#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eonsp/analysis.hpp"
#include "eonsp/campaign.hpp"
#include "eonsp/csv.hpp"
#include "eonsp/errors.hpp"
#include "eonsp/gabriel.hpp"
#include "eonsp/simulator.hpp"
#include "eonsp/verify.hpp"

namespace fs = std::filesystem;
using namespace eonsp;

namespace {

int cmd_gen_topo(int vertices, int count, std::uint64_t seed, const std::string& out_dir)
{
    fs::create_directories(out_dir);
    std::printf("# gen-topo vertices=%d count=%d seed=%llu\n", vertices, count,
                static_cast<unsigned long long>(seed));
    for (int i = 0; i < count; ++i) {
        Network net = generate_gabriel_connected(vertices, seed + i);
        const std::string name = "g" + std::to_string(vertices) + "_" + std::to_string(i);
        net.name = name;
        const std::string path = (fs::path(out_dir) / (name + ".topo")).string();
        save_topology(net, path);
        std::printf("%s vertices=%d edges=%d seed=%llu\n", path.c_str(), net.vertex_count(),
                    net.edge_count(), static_cast<unsigned long long>(net.seed));
    }
    return 0;
}

struct SimulateArgs {
    std::string topo_file;
    int units = 100;
    double fraction = 0.1;
    std::uint64_t seed = 1;
    double max_util = 0.6;
    std::string algo = "both";
    std::string out = "calls.csv";
    int block_cap = 1000;
    int mod_levels = 4;
    double reach_factor = 1.5;
    std::string mod_table;
};

int cmd_simulate(const SimulateArgs& args)
{
    Network net = load_topology(args.topo_file);
    if (net.name.empty())
        net.name = fs::path(args.topo_file).stem().string();

    SimConfig cfg;
    cfg.topology = &net;
    cfg.units = args.units;
    cfg.mean_demand_fraction = args.fraction;
    cfg.seed = args.seed;
    cfg.max_utilization = args.max_util;
    cfg.run_filtered = args.algo != "generic";
    cfg.run_generic = args.algo != "filtered";
    cfg.block_cap = args.block_cap;
    cfg.modulation_levels = args.mod_levels;
    cfg.reach_factor = args.reach_factor;
    ModulationTable table{{{1, 1}}};
    if (!args.mod_table.empty()) {
        table = ModulationTable::from_string(args.mod_table);
        cfg.table = &table;
    }

    const auto records = run_simulation(cfg);

    SimMeta meta;
    meta.topology = net.name;
    meta.vertices = net.vertex_count();
    meta.edges = net.edge_count();
    meta.units = args.units;
    meta.mean_demand = mean_units_for(args.fraction, args.units);
    meta.seed = args.seed;
    write_calls_csv(args.out, meta, records);

    int accepted = 0;
    for (const auto& rec : records)
        accepted += rec.accepted ? 1 : 0;
    std::printf("%s: %zu records (%d accepted) -> %s\n", net.name.c_str(), records.size(),
                accepted, args.out.c_str());
    return 0;
}

// Defaults give a desk-scale run: ~1e5 cross-checked calls in phase (c).
struct VerifyArgs {
    long long spectrum_ops = 1'000'000;
    int instances = 5000;
    std::uint64_t seed = 12345;
    std::vector<int> vertices{25, 50, 100};
    int graphs = 4;
    std::vector<int> units{100, 200};
    std::vector<double> fractions{0.1, 0.05};
    int sim_seeds = 3;
    std::string mutate = "none";
};

int cmd_verify(const VerifyArgs& args)
{
    GenericOptions generic_opts;
    FilteredOptions filtered_opts;
    if (args.mutate == "domination")
        generic_opts.cost_only_domination = true;
    else if (args.mutate == "last-fit")
        filtered_opts.last_fit = true;
    else if (args.mutate != "none") {
        std::fprintf(stderr, "unknown mutation '%s'\n", args.mutate.c_str());
        return 2;
    }
    if (args.mutate != "none")
        std::printf("MUTATION ACTIVE: %s (a correct build must FAIL below)\n",
                    args.mutate.c_str());

    bool all_passed = true;

    const PhaseReport algebra = verify_spectrum_algebra(args.spectrum_ops, args.seed);
    std::printf("[%s] phase a %s: %lld checks, %lld mismatches\n",
                algebra.passed() ? "PASS" : "FAIL", algebra.name.c_str(), algebra.checks,
                algebra.mismatches);
    if (!algebra.passed()) {
        std::printf("  first counterexample: %s\n", algebra.first_mismatch.c_str());
        all_passed = false;
    }

    const PhaseReport oracle =
        verify_solver_oracle(args.instances, args.seed + 1, generic_opts, filtered_opts);
    std::printf("[%s] phase b %s: %lld instances, %lld mismatches\n",
                oracle.passed() ? "PASS" : "FAIL", oracle.name.c_str(), oracle.checks,
                oracle.mismatches);
    if (!oracle.passed()) {
        std::printf("  first counterexample: %s\n", oracle.first_mismatch.c_str());
        all_passed = false;
    }

    EquivalenceReport equivalence;
    for (int v : args.vertices)
        for (int g = 0; g < args.graphs; ++g) {
            Network topo = generate_gabriel_connected(v, args.seed + g);
            topo.name = "g" + std::to_string(v) + "_" + std::to_string(g);
            for (int units : args.units)
                for (double frac : args.fractions)
                    for (int s = 1; s <= args.sim_seeds; ++s)
                        equivalence.merge(verify_equivalence(topo, units, frac, s, 0.6,
                                                             generic_opts, filtered_opts));
        }
    std::printf("[%s] phase c cross-solver equivalence: %lld calls, %lld outcome / %lld cost / "
                "%lld assignment mismatches\n",
                equivalence.passed() ? "PASS" : "FAIL", equivalence.calls,
                equivalence.outcome_mismatches, equivalence.cost_mismatches,
                equivalence.assignment_mismatches);
    if (!equivalence.passed()) {
        std::printf("  first counterexample: %s\n", equivalence.first_mismatch.c_str());
        all_passed = false;
    }

    std::printf("%s\n", all_passed ? "PASS" : "FAIL");
    return all_passed ? 0 : 1;
}

struct CampaignArgs {
    CampaignSpec spec;
    int seed_count = 3;
    std::uint64_t sim_seed_base = 1;
};

int cmd_campaign(CampaignArgs& args)
{
    args.spec.seeds.clear();
    for (int s = 0; s < args.seed_count; ++s)
        args.spec.seeds.push_back(args.sim_seed_base + s);
    std::printf("# campaign: %zu cells -> %s (jobs=%d)\n", args.spec.cell_count(),
                args.spec.out_dir.c_str(), args.spec.jobs);
    const CampaignResult result = run_campaign(args.spec);
    std::printf("executed %d, skipped %d (resume), failed %zu\n", result.executed,
                result.skipped, result.failed_cells.size());
    for (const std::string& failure : result.failed_cells)
        std::fprintf(stderr, "FAILED %s\n", failure.c_str());
    std::printf("merged: %s\n", result.merged_csv.c_str());
    return result.failed_cells.empty() ? 0 : 1;
}

int cmd_fit(const std::string& in, const std::string& dimension, const std::string& algo,
            const std::string& csv_out)
{
    const auto rows = read_calls_csv(in);
    GrowthDimension dim;
    if (dimension == "vertices")
        dim = GrowthDimension::Vertices;
    else if (dimension == "units")
        dim = GrowthDimension::Units;
    else
        dim = GrowthDimension::Utilization;
    const Algorithm algorithm = algo == "filtered" ? Algorithm::Filtered : Algorithm::Generic;

    const auto fits = fit_growth(rows, dim, algorithm);
    std::printf("# fit --dimension %s --algo %s (%d samples)\n", dimension.c_str(), algo.c_str(),
                fits.front().sample_count);
    std::printf("%-12s %14s %14s %10s\n", "model", "a", "b", "r2");
    std::string csv = "model,a,b,r_squared\n";
    char line[160];
    for (const FitResult& fit : fits) {
        std::printf("%-12s %14.6g %14.6g %10.6f\n", growth_model_name(fit.model), fit.coeff_a,
                    fit.coeff_b, fit.r_squared);
        std::snprintf(line, sizeof line, "%s,%.17g,%.17g,%.17g\n", growth_model_name(fit.model),
                      fit.coeff_a, fit.coeff_b, fit.r_squared);
        csv += line;
    }
    if (!csv_out.empty()) {
        std::ofstream out(csv_out);
        out << csv;
    }
    return 0;
}

int cmd_cdf(const std::string& in, const std::string& out, const std::string& plot)
{
    const RatioCdf cdf = speedup_cdf(read_calls_csv(in));
    std::printf("pairs=%zu mean_ratio=%.4g ratio_of_means=%.4g median=%.4g fraction_faster=%.4f\n",
                cdf.sorted_ratios.size(), cdf.mean_ratio, cdf.ratio_of_means, cdf.median,
                cdf.fraction_above_one);
    if (!out.empty()) {
        std::ofstream file(out);
        file << "ratio\n";
        char buf[40];
        for (double r : cdf.sorted_ratios) {
            std::snprintf(buf, sizeof buf, "%.9g\n", r);
            file << buf;
        }
    }
    if (!plot.empty()) {
        std::ofstream file(plot);
        file << render_cdf_svg(cdf);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Spectrum-aware shortest paths for elastic optical networks"};
    app.require_subcommand(1);
    app.fallthrough();

    // gen-topo
    int gt_vertices = 25, gt_count = 1;
    std::uint64_t gt_seed = 42;
    std::string gt_out = ".";
    auto* gen = app.add_subcommand("gen-topo", "Generate Gabriel graph topology files");
    gen->add_option("--vertices", gt_vertices, "number of vertices")->check(CLI::Range(2, 100000));
    gen->add_option("--count", gt_count, "graphs to generate");
    gen->add_option("--seed", gt_seed, "base generator seed (graph i uses seed+i)");
    gen->add_option("--out", gt_out, "output directory");

    // simulate
    SimulateArgs sim;
    auto* simulate = app.add_subcommand("simulate", "Run one dynamic-traffic simulation");
    simulate->add_option("--topo", sim.topo_file, "topology file")->required();
    simulate->add_option("--units", sim.units, "spectrum units per edge")->check(CLI::PositiveNumber);
    simulate->add_option("--mean-demand-frac", sim.fraction, "mean demand as fraction of units");
    simulate->add_option("--seed", sim.seed, "demand generator seed");
    simulate->add_option("--max-util", sim.max_util, "stop at this utilization");
    simulate->add_option("--algo", sim.algo, "both|generic|filtered")
        ->check(CLI::IsMember({"both", "generic", "filtered"}));
    simulate->add_option("--out", sim.out, "calls CSV path");
    simulate->add_option("--block-cap", sim.block_cap, "consecutive blocked demands before stop");
    simulate->add_option("--mod-levels", sim.mod_levels, "modulation level count");
    simulate->add_option("--mod-reach-factor", sim.reach_factor,
                         "reach_1 = factor * longest shortest path");
    simulate->add_option("--mod-table", sim.mod_table, "explicit table r1:d1,r2:d2,...");

    // verify
    VerifyArgs ver;
    auto* verify = app.add_subcommand("verify", "Oracle and cross-solver verification");
    verify->add_option("--spectrum-ops", ver.spectrum_ops, "phase a randomized checks");
    verify->add_option("--instances", ver.instances, "phase b randomized instances");
    verify->add_option("--seed", ver.seed, "verification seed");
    verify->add_option("--vertices", ver.vertices, "phase c vertex counts")->delimiter(',');
    verify->add_option("--graphs", ver.graphs, "phase c graphs per size");
    verify->add_option("--units", ver.units, "phase c unit counts")->delimiter(',');
    verify->add_option("--fractions", ver.fractions, "phase c demand fractions")->delimiter(',');
    verify->add_option("--sim-seeds", ver.sim_seeds, "phase c seeds per cell");
    verify->add_option("--mutate", ver.mutate,
                       "inject a known defect (none|domination|last-fit); a correct build "
                       "must then FAIL");

    // campaign
    CampaignArgs camp;
    auto* campaign = app.add_subcommand("campaign", "Run a simulation grid");
    campaign->add_option("--vertices", camp.spec.vertex_counts, "vertex counts")->delimiter(',');
    campaign->add_option("--graphs", camp.spec.graphs_per_size, "graphs per size");
    campaign->add_option("--units", camp.spec.unit_counts, "unit counts")->delimiter(',');
    campaign->add_option("--fracs", camp.spec.fractions, "demand fractions")->delimiter(',');
    campaign->add_option("--seeds", camp.seed_count, "demand seeds per cell (base..base+n-1)");
    campaign->add_option("--seed-base", camp.sim_seed_base, "first demand seed");
    campaign->add_option("--topo-seed", camp.spec.topology_seed, "topology generator seed");
    std::string camp_algo = "both";
    campaign->add_option("--algo", camp_algo, "both|generic|filtered")
        ->check(CLI::IsMember({"both", "generic", "filtered"}));
    campaign->add_option("--max-util", camp.spec.max_utilization, "stop utilization");
    campaign->add_option("--block-cap", camp.spec.block_cap,
                         "consecutive blocked demands before a cell stops");
    campaign->add_option("--out", camp.spec.out_dir, "output directory");
    campaign->add_option("--jobs", camp.spec.jobs, "parallel workers");
    campaign->add_flag("--no-resume", [&](std::int64_t) { camp.spec.resume = false; },
                       "recompute cells even if their CSV exists");

    // fit
    std::string fit_in, fit_dim = "vertices", fit_algo = "generic", fit_csv;
    auto* fit = app.add_subcommand("fit", "Fit growth models to call times");
    fit->add_option("--in", fit_in, "calls CSV")->required();
    fit->add_option("--dimension", fit_dim, "vertices|units|utilization")
        ->check(CLI::IsMember({"vertices", "units", "utilization"}));
    fit->add_option("--algo", fit_algo, "generic|filtered")
        ->check(CLI::IsMember({"generic", "filtered"}));
    fit->add_option("--csv-out", fit_csv, "also write results as CSV");

    // cdf
    std::string cdf_in, cdf_out, cdf_plot;
    auto* cdf = app.add_subcommand("cdf", "Speedup CDF over matched call pairs");
    cdf->add_option("--in", cdf_in, "calls CSV with both algorithm tags")->required();
    cdf->add_option("--out", cdf_out, "write sorted ratios CSV");
    cdf->add_option("--plot", cdf_plot, "write an SVG chart");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed())
            return cmd_gen_topo(gt_vertices, gt_count, gt_seed, gt_out);
        if (simulate->parsed())
            return cmd_simulate(sim);
        if (verify->parsed())
            return cmd_verify(ver);
        if (campaign->parsed()) {
            camp.spec.run_filtered = camp_algo != "generic";
            camp.spec.run_generic = camp_algo != "filtered";
            return cmd_campaign(camp);
        }
        if (fit->parsed())
            return cmd_fit(fit_in, fit_dim, fit_algo, fit_csv);
        if (cdf->parsed())
            return cmd_cdf(cdf_in, cdf_out, cdf_plot);
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
