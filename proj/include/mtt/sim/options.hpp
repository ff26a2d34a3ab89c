#pragma once

#include <cmath>
#include <map>
#include <set>
#include <string>

#include "mtt/apf/forces.hpp"
#include "mtt/channel/channel.hpp"
#include "mtt/core/scenario.hpp"
#include "mtt/io/config.hpp"
#include "mtt/mfg/mfg.hpp"
#include "mtt/sim/collab.hpp"

namespace mtt::sim {

// Everything a run needs, resolved from one config file.
struct SimOptions {
    ScenarioConfig scenario;
    channel::ChannelParams channel;
    channel::ProbePowers probes;
    apf::ApfGains apf;
    mfg::MfgGrid grid;
    double omega1 = 1e4;
    double omega2 = 1e6;
    double mfg_tol = 1e-6;
    int mfg_max_iter = 200;
    // standalone mfg-solve channel inputs
    double mfg_g_direct = 1e-3;
    double mfg_i_bar_u = 5e-6;
    double mfg_i_bar_j = 1e-5;
    CollabConfig collab;
    std::uint64_t config_hash = 0;

    static const std::map<std::string, std::set<std::string>>& schema() {
        static const std::map<std::string, std::set<std::string>> s = {
            {"scenario",
             {"n_uavs", "seed", "n_slots", "subslots_per_slot", "dt", "d_max", "v_max",
              "start_box_min", "start_box_max", "jammer_offset"}},
            {"target", {"start", "direction", "speed"}},
            {"obstacle", {"center", "radius"}},
            {"channel",
             {"alpha", "nakagami_m", "noise_power", "p_max_uav", "p_max_jam", "gamma_th_db",
              "probe1_uav", "probe1_jam", "probe2_uav", "probe2_jam"}},
            {"apf", {"k_att", "k_rep", "k_obs", "k_jam", "k_ext", "d0", "q", "step_len"}},
            {"mfg",
             {"n_energy", "e0", "nu", "omega1", "omega2", "tol", "max_iter", "g_direct",
              "i_bar_u", "i_bar_j"}},
            {"collab",
             {"i_th_u", "i_th_j", "policy", "association", "planner", "fractional_tau",
              "fractional_p0"}},
        };
        return s;
    }

    static SimOptions from_config(const io::Config& cfg) {
        cfg.validate_schema(schema());
        SimOptions o;
        o.config_hash = cfg.hash();

        const auto* sc = cfg.find("scenario");
        if (!sc) throw InvalidConfig("missing [scenario] section");
        o.scenario.n_uavs = io::Config::get_int(*sc, "n_uavs", 0);
        o.scenario.seed = static_cast<std::uint64_t>(io::Config::get_double(*sc, "seed", 0));
        o.scenario.n_slots = io::Config::get_int(*sc, "n_slots", 15);
        o.scenario.subslots_per_slot = io::Config::get_int(*sc, "subslots_per_slot", 20);
        o.scenario.dt = io::Config::get_double(*sc, "dt", 0.1);
        o.scenario.d_max = io::Config::get_double(*sc, "d_max", 1.0);
        o.scenario.v_max = io::Config::get_double(*sc, "v_max", 20.0);
        o.scenario.start_box_min = io::Config::get_vec3(*sc, "start_box_min", {0, 0, 0});
        o.scenario.start_box_max = io::Config::get_vec3(*sc, "start_box_max", {50, 50, 20});
        o.scenario.jammer_offset = io::Config::require_vec3(*sc, "jammer_offset");

        for (const auto* t : cfg.all("target")) {
            TargetTrack tr;
            tr.start = io::Config::require_vec3(*t, "start");
            tr.direction = io::Config::require_vec3(*t, "direction");
            tr.speed = io::Config::get_double(*t, "speed", 0.0);
            o.scenario.targets.push_back(tr);
        }
        for (const auto* ob : cfg.all("obstacle")) {
            Obstacle obs;
            obs.center = io::Config::require_vec3(*ob, "center");
            obs.radius = io::Config::require_double(*ob, "radius");
            o.scenario.obstacles.push_back(obs);
        }

        if (const auto* ch = cfg.find("channel")) {
            o.channel.alpha = io::Config::get_double(*ch, "alpha", 4.0);
            o.channel.nakagami_m = io::Config::get_double(*ch, "nakagami_m", 3.0);
            o.channel.noise_power = io::Config::get_double(*ch, "noise_power", 1e-8);
            o.channel.p_max_uav = io::Config::get_double(*ch, "p_max_uav", 0.1);
            o.channel.p_max_jam = io::Config::get_double(*ch, "p_max_jam", 0.4);
            o.channel.gamma_th =
                std::pow(10.0, io::Config::get_double(*ch, "gamma_th_db", 3.0) / 10.0);
            o.probes.p1_u = io::Config::get_double(*ch, "probe1_uav", 0.05);
            o.probes.p1_j = io::Config::get_double(*ch, "probe1_jam", 0.2);
            o.probes.p2_u = io::Config::get_double(*ch, "probe2_uav", 0.1);
            o.probes.p2_j = io::Config::get_double(*ch, "probe2_jam", 0.1);
        }
        o.channel.validate();

        if (const auto* ap = cfg.find("apf")) {
            o.apf.k_att = io::Config::get_double(*ap, "k_att", 5.0);
            o.apf.k_rep = io::Config::get_double(*ap, "k_rep", 10.0);
            o.apf.k_obs = io::Config::get_double(*ap, "k_obs", 10.0);
            o.apf.k_jam = io::Config::get_double(*ap, "k_jam", 10.0);
            o.apf.k_ext = io::Config::get_double(*ap, "k_ext", 5.0);
            o.apf.d0 = io::Config::get_double(*ap, "d0", 5.0);
            o.apf.q = io::Config::get_double(*ap, "q", 1.0);
            o.apf.step_len = io::Config::get_double(*ap, "step_len", 0.5);
        }

        if (const auto* mf = cfg.find("mfg")) {
            o.grid.n_energy = io::Config::get_int(*mf, "n_energy", 50);
            o.grid.e0 = io::Config::get_double(*mf, "e0", 1.0);
            o.grid.nu = io::Config::get_double(*mf, "nu", 0.01);
            o.omega1 = io::Config::get_double(*mf, "omega1", 1e4);
            o.omega2 = io::Config::get_double(*mf, "omega2", 1e6);
            o.mfg_tol = io::Config::get_double(*mf, "tol", 1e-6);
            o.mfg_max_iter = io::Config::get_int(*mf, "max_iter", 200);
            o.mfg_g_direct = io::Config::get_double(*mf, "g_direct", 1e-3);
            o.mfg_i_bar_u = io::Config::get_double(*mf, "i_bar_u", 5e-6);
            o.mfg_i_bar_j = io::Config::get_double(*mf, "i_bar_j", 1e-5);
        }
        o.grid.n_time = o.scenario.subslots_per_slot;
        o.grid.dt = o.scenario.dt;

        if (const auto* co = cfg.find("collab")) {
            o.collab.i_th_u = io::Config::get_double(*co, "i_th_u", 1e-3);
            o.collab.i_th_j = io::Config::get_double(*co, "i_th_j", 1e-3);
            o.collab.policy =
                policy_from_string(io::Config::get_string(*co, "policy", "dynamic-collaboration"));
            o.collab.association =
                association_from_string(io::Config::get_string(*co, "association", "ceta"));
            o.collab.planner = planner_from_string(io::Config::get_string(*co, "planner", "jssct"));
            o.collab.fractional_tau = io::Config::get_double(*co, "fractional_tau", 1.0);
            o.collab.fractional_p0 = io::Config::get_double(*co, "fractional_p0", 1e-5);
        }
        o.collab.validate();
        o.apf.validate(o.scenario.v_max, o.scenario.dt);
        o.grid.validate(o.channel.p_max_uav);
        return o;
    }
};

}  // namespace mtt::sim
