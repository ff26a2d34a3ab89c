// mttsim: multi-target tracking swarm simulator front end.
//
// Subcommands:
//   run           one episode -> trajectory/radio/summary files
//   compare       several policies x seeds -> comparison table
//   mfg-solve     standalone power-control solve -> m/u/p grid files
//   cluster-bench sub-swarm division benchmark (CETA vs k-means vs FCM)

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <iostream>

#include "mtt/mtt.hpp"

namespace fs = std::filesystem;
using namespace mtt;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfigError = 2;
constexpr int kExitHorizonExhausted = 3;

sim::SimOptions load_options(const std::string& config_path) {
    const io::Config cfg = io::Config::load(config_path);
    return sim::SimOptions::from_config(cfg);
}

fs::path resolve_outdir(std::string out) {
    if (const char* env = std::getenv("MTTSIM_OUT"); env && out.empty()) out = env;
    if (out.empty()) out = "out";
    fs::create_directories(out);
    return out;
}

int cmd_run(const std::string& config, std::uint64_t seed, bool seed_set, const std::string& out,
            bool quiet) {
    sim::SimOptions opt = load_options(config);
    if (seed_set) opt.scenario.seed = seed;
    const Scenario scenario = build_scenario(opt.scenario);
    const sim::EpisodeLog log = sim::run_episode(scenario, opt);
    const fs::path dir = resolve_outdir(out);
    io::export_episode(log, dir);
    if (!quiet) {
        std::cout << "episode seed=" << opt.scenario.seed << " config_hash=0x"
                  << io::hash_hex(opt.config_hash) << "\n"
                  << io::summary_json(log);
        std::cout << "wrote " << (dir / "summary.json") << "\n";
    }
    return log.summary.horizon_exhausted ? kExitHorizonExhausted : kExitOk;
}

int cmd_compare(const std::string& config, std::vector<std::uint64_t> seeds,
                std::vector<std::string> policies, const std::string& out, bool quiet) {
    sim::SimOptions opt = load_options(config);
    if (seeds.empty()) seeds = {opt.scenario.seed};
    if (policies.empty())
        policies = {"dynamic-collaboration", "no-jammer-cooperative", "sct-apf+fractional",
                    "sct-apf+uniform"};
    std::vector<std::pair<std::string, sim::CollabConfig>> configs;
    for (const auto& name : policies) {
        sim::CollabConfig cc = opt.collab;
        cc.policy = sim::policy_from_string(name);
        configs.emplace_back(name, cc);
    }
    const auto report = sim::compare_policies(opt, configs, seeds);
    const fs::path dir = resolve_outdir(out);
    io::write_file(dir / "comparison.csv", io::comparison_csv(report));
    io::write_file(dir / "comparison.txt", io::comparison_table(report));
    if (!quiet) std::cout << io::comparison_table(report);
    return kExitOk;
}

int cmd_mfg_solve(const std::string& config, const std::string& out, bool quiet) {
    const sim::SimOptions opt = load_options(config);
    mfg::CostParams cp;
    cp.omega1 = opt.omega1;
    cp.omega2 = opt.omega2;
    cp.gamma_th = opt.channel.gamma_th;
    cp.sigma2 = opt.channel.noise_power;
    cp.g_direct = opt.mfg_g_direct;
    cp.i_bar_u = opt.mfg_i_bar_u;
    cp.i_bar_j = opt.mfg_i_bar_j;
    cp.p_max = opt.channel.p_max_uav;

    const fs::path dir = resolve_outdir(out);
    std::vector<double> m0(static_cast<std::size_t>(opt.grid.n_energy), 1.0 / opt.grid.e0);
    double worst_mass_err = 0.0;
    for (int slot = 0; slot < opt.scenario.n_slots; ++slot) {
        const auto sol = mfg::solve_mfg(m0, opt.grid, cp, opt.mfg_max_iter, opt.mfg_tol);
        io::export_mfg_solution(sol, dir, slot, opt.config_hash);
        for (int t = 0; t <= opt.grid.n_time; ++t) {
            double mass = 0.0;
            for (int z = 0; z < opt.grid.n_energy; ++z)
                mass += sol.m(static_cast<std::size_t>(t), static_cast<std::size_t>(z)) *
                        opt.grid.de();
            worst_mass_err = std::max(worst_mass_err, std::abs(mass - 1.0));
        }
        m0.assign(sol.m.row(static_cast<std::size_t>(opt.grid.n_time)),
                  sol.m.row(static_cast<std::size_t>(opt.grid.n_time)) + opt.grid.n_energy);
        if (!quiet)
            std::cout << "slot " << slot << ": iterations=" << sol.iterations
                      << " converged=" << (sol.converged ? "yes" : "no")
                      << " max_clipped_mass=" << sol.max_clipped_mass << "\n";
    }
    if (!quiet)
        std::cout << "mass conservation self-check: worst |sum(m)*de - 1| = " << worst_mass_err
                  << "\n";
    return kExitOk;
}

int cmd_cluster_bench(int instances, int n_uavs, int m_clusters, std::uint64_t seed,
                      const std::string& regime, const std::string& out, bool quiet) {
    RngStream rng(seed, Stream::Bench);
    std::vector<double> sse_c, sse_k, sse_f, sc_c, sc_k, sc_f, it_k, it_f;
    for (int inst = 0; inst < instances; ++inst) {
        std::vector<Vec3> pts;
        if (regime == "uniform") {
            for (int i = 0; i < n_uavs; ++i)
                pts.push_back({rng.uniform(0, 130), rng.uniform(0, 130), rng.uniform(0, 15)});
        } else if (regime == "spawn-areas") {
            // staging areas with mildly unequal sub-swarm sizes
            std::vector<int> sizes(static_cast<std::size_t>(m_clusters),
                                   n_uavs / m_clusters);
            for (int r = 0; r < n_uavs % m_clusters; ++r) sizes[static_cast<std::size_t>(r)] += 1;
            for (int k = 0; k < m_clusters; ++k)
                sizes[static_cast<std::size_t>(k)] += (m_clusters / 2 - k) * (n_uavs / 20);
            int total = 0;
            for (int v : sizes) total += v;
            sizes[0] += n_uavs - total;
            for (int k = 0; k < m_clusters; ++k) {
                const Vec3 c{rng.uniform(0, 130), rng.uniform(0, 130), rng.uniform(0, 15)};
                for (int i = 0; i < sizes[static_cast<std::size_t>(k)]; ++i)
                    pts.push_back(c + Vec3{3.5 * rng.normal(), 3.5 * rng.normal(),
                                           3.5 * rng.normal()});
            }
        } else {
            throw InvalidConfig("cluster-bench: unknown regime '" + regime + "'");
        }
        int passes = 0;
        const auto pc = assoc::ceta_partition(pts, m_clusters, assoc::cutoff_distance(pts),
                                              &passes);
        const auto [pk, ik] = assoc::kmeans_partition(pts, m_clusters, seed + inst);
        const auto [pf, iff] = assoc::fcm_partition(pts, m_clusters, 2.0, 1e-5, 100, seed + inst);
        sse_c.push_back(assoc::sse(pts, pc));
        sse_k.push_back(assoc::sse(pts, pk));
        sse_f.push_back(assoc::sse(pts, pf));
        sc_c.push_back(assoc::silhouette(pts, pc));
        sc_k.push_back(assoc::silhouette(pts, pk));
        sc_f.push_back(assoc::silhouette(pts, pf));
        it_k.push_back(ik);
        it_f.push_back(iff);
    }
    auto mean = [](const std::vector<double>& v) {
        double s = 0.0;
        for (double x : v) s += x;
        return s / static_cast<double>(v.size());
    };
    std::ostringstream table;
    table << "algorithm,iterations,sse,sc\n";
    table << "ceta,1," << mean(sse_c) << "," << mean(sc_c) << "\n";
    table << "kmeans," << mean(it_k) << "," << mean(sse_k) << "," << mean(sc_k) << "\n";
    table << "fcm," << mean(it_f) << "," << mean(sse_f) << "," << mean(sc_f) << "\n";
    const fs::path dir = resolve_outdir(out);
    io::write_file(dir / "cluster_bench.csv", table.str());
    if (!quiet) std::cout << table.str();
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multi-target tracking swarm simulator"};
    app.require_subcommand(1);
    bool quiet = false;
    app.add_flag("--quiet", quiet, "suppress console output");

    std::string config, out;
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::vector<std::uint64_t> seeds;
    std::vector<std::string> policies;

    auto* run = app.add_subcommand("run", "run one episode");
    run->add_option("--config", config, "scenario config file")->required();
    run->add_option("--seed", seed, "override the scenario seed")
        ->each([&seed_set](const std::string&) { seed_set = true; });
    run->add_option("--out", out, "output directory");

    auto* cmp = app.add_subcommand("compare", "compare policies over seeds");
    cmp->add_option("--config", config, "scenario config file")->required();
    cmp->add_option("--seeds", seeds, "episode seeds");
    cmp->add_option("--policy", policies, "policies to compare (default: all four)");
    cmp->add_option("--out", out, "output directory");

    auto* mfg_cmd = app.add_subcommand("mfg-solve", "standalone power-control solve");
    mfg_cmd->add_option("--config", config, "scenario config file")->required();
    mfg_cmd->add_option("--out", out, "output directory");

    auto* bench = app.add_subcommand("cluster-bench", "sub-swarm division benchmark");
    int instances = 1000, n_uavs = 100, m_clusters = 5;
    std::string regime = "spawn-areas";
    bench->add_option("--instances", instances, "number of random instances");
    bench->add_option("--uavs", n_uavs, "UAVs per instance");
    bench->add_option("--clusters", m_clusters, "sub-swarms per instance");
    bench->add_option("--seed", seed, "benchmark seed");
    bench->add_option("--regime", regime, "instance generator: spawn-areas | uniform");
    bench->add_option("--out", out, "output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) return cmd_run(config, seed, seed_set, out, quiet);
        if (*cmp) return cmd_compare(config, seeds, policies, out, quiet);
        if (*mfg_cmd) return cmd_mfg_solve(config, out, quiet);
        if (*bench) return cmd_cluster_bench(instances, n_uavs, m_clusters, seed, regime, out,
                                             quiet);
    } catch (const InvalidConfig& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
