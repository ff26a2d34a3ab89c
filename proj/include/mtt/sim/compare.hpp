#pragma once

#include <cmath>
#include <future>
#include <string>
#include <thread>
#include <vector>

#include "mtt/sim/episode.hpp"
#include "mtt/sim/options.hpp"

namespace mtt::sim {

struct Aggregate {
    double mean = 0.0;
    double stdev = 0.0;
};

inline Aggregate aggregate(const std::vector<double>& xs) {
    Aggregate a;
    if (xs.empty()) return a;
    for (double x : xs) a.mean += x;
    a.mean /= static_cast<double>(xs.size());
    double v = 0.0;
    for (double x : xs) v += (x - a.mean) * (x - a.mean);
    a.stdev = xs.size() > 1 ? std::sqrt(v / (static_cast<double>(xs.size()) - 1)) : 0.0;
    return a;
}

struct ComparisonRow {
    std::string name;
    int n_seeds = 0;
    Aggregate steps;
    Aggregate switches;
    Aggregate interference;   // [W]
    Aggregate sinr;           // linear
    Aggregate sinr_ok;        // fraction of subslots meeting gamma_th
    int arrived_all = 0;      // episodes where every UAV arrived
    std::size_t violations = 0;
};

struct ComparisonReport {
    std::vector<ComparisonRow> rows;
    std::vector<std::uint64_t> seeds;
    std::uint64_t config_hash = 0;
};

// Runs every (config, seed) episode; episodes are independent (share-nothing
// RNG streams), so seeds fan out across a small thread pool. Results merge in
// (config index, seed index) order regardless of completion order.
inline ComparisonReport compare_policies(const SimOptions& base,
                                         const std::vector<std::pair<std::string, CollabConfig>>& configs,
                                         const std::vector<std::uint64_t>& seeds,
                                         bool parallel = true) {
    ComparisonReport report;
    report.seeds = seeds;
    report.config_hash = base.config_hash;
    for (const auto& [name, collab] : configs) {
        SimOptions opt = base;
        opt.collab = collab;
        std::vector<EpisodeLog> logs(seeds.size());
        auto run_one = [&opt](std::uint64_t seed) {
            ScenarioConfig sc = opt.scenario;
            sc.seed = seed;
            const Scenario scenario = build_scenario(sc);
            return run_episode(scenario, opt);
        };
        if (parallel && seeds.size() > 1) {
            const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
            std::vector<std::future<EpisodeLog>> futs(seeds.size());
            std::size_t next = 0;
            while (next < seeds.size()) {
                const std::size_t batch = std::min<std::size_t>(hw, seeds.size() - next);
                for (std::size_t b = 0; b < batch; ++b)
                    futs[next + b] = std::async(std::launch::async, run_one, seeds[next + b]);
                for (std::size_t b = 0; b < batch; ++b) logs[next + b] = futs[next + b].get();
                next += batch;
            }
        } else {
            for (std::size_t k = 0; k < seeds.size(); ++k) logs[k] = run_one(seeds[k]);
        }

        ComparisonRow row;
        row.name = name;
        row.n_seeds = static_cast<int>(seeds.size());
        std::vector<double> steps, sw, intf, snr, ok;
        for (const auto& log : logs) {
            const auto& s = log.summary;
            steps.push_back(s.steps_to_all_arrived > 0
                                ? s.steps_to_all_arrived
                                : opt.scenario.n_slots * opt.scenario.subslots_per_slot);
            sw.push_back(s.mean_switches);
            intf.push_back(s.mean_interference);
            snr.push_back(s.mean_sinr);
            ok.push_back(s.sinr_ok_fraction);
            row.violations += s.violations;
            if (!s.horizon_exhausted) ++row.arrived_all;
        }
        row.steps = aggregate(steps);
        row.switches = aggregate(sw);
        row.interference = aggregate(intf);
        row.sinr = aggregate(snr);
        row.sinr_ok = aggregate(ok);
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace mtt::sim
