#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "mtt/apf/rrt.hpp"
#include "mtt/apf/step.hpp"
#include "mtt/assoc/baselines.hpp"
#include "mtt/assoc/metrics.hpp"
#include "mtt/assoc/partition.hpp"
#include "mtt/channel/channel.hpp"
#include "mtt/core/rng.hpp"
#include "mtt/core/scenario.hpp"
#include "mtt/core/state.hpp"
#include "mtt/mfg/mfg.hpp"
#include "mtt/sim/collab.hpp"
#include "mtt/sim/options.hpp"

namespace mtt::sim {

struct UavRecord {
    int t;
    int uav;
    Vec3 pos;
    double power;
    double energy;
    double i_u;   // enumerated inter-UAV interference at this UAV's receiver [W]
    double i_j;   // enumerated jamming at the receiver [W]
    double sinr;  // linear
    int label;
    int assigned_target;
    double f_tot_norm;
    double turning_angle;  // raw delta-beta [deg]
    bool used_external;
    bool used_jitter_fix;
    bool arrived;
};

struct SubslotRecord {
    int t;
    double mean_interference;  // mean over UAVs of (I_U + I_J) [W]
    double mean_sinr;          // linear
    double i_bar_u;            // per-subslot interference mean field [W]
    double i_bar_j;            // per-subslot jamming mean field [W]
    int n_arrived;
};

struct TriggerEvent {
    int t;
    std::string kind;  // "reassociation" | "replan-k_rep" | "replan-k_jam"
    double value;      // new gain for replans, 0 for reassociation
};

struct SlotRecord {
    int slot;
    double i_bar_u;  // slot-averaged interference mean field [W]
    double i_bar_j;
    double k_rep;    // gains in force after this slot's adaptation
    double k_jam;
    int mfg_iterations;
    bool mfg_converged;
};

struct Violation {
    int t;
    std::string constraint;  // "P1a", "P1b", ...
    int entity_a;
    int entity_b;
    double value;
};

struct EpisodeSummary {
    int steps_to_all_arrived = -1;  // subslots until every UAV is within d_max; -1 if never
    bool horizon_exhausted = false;
    double mean_switches = 0.0;       // target switches per UAV
    double mean_interference = 0.0;   // time mean of per-subslot mean (I_U + I_J) [W]
    double mean_sinr = 0.0;           // time mean of per-subslot mean SINR (linear)
    double sinr_ok_fraction = 0.0;    // subslots with mean SINR >= gamma_th, final slot excluded
    int reassociations = 0;
    int replans = 0;
    std::size_t violations = 0;
};

struct EpisodeLog {
    std::vector<UavRecord> uav_records;
    std::vector<SubslotRecord> subslots;
    std::vector<TriggerEvent> triggers;
    std::vector<SlotRecord> slots;
    std::vector<Violation> violations;
    std::vector<int> switch_counts;
    EpisodeSummary summary;
    std::uint64_t seed = 0;
    std::uint64_t config_hash = 0;
};

namespace detail {

inline int nearest_uav(const std::vector<Vec3>& pos, int i) {
    double best = std::numeric_limits<double>::infinity();
    int r = -1;
    for (int j = 0; j < static_cast<int>(pos.size()); ++j) {
        if (j == i) continue;
        const double d = (pos[static_cast<std::size_t>(j)] - pos[static_cast<std::size_t>(i)])
                             .squared_norm();
        if (d < best) {
            best = d;
            r = j;
        }
    }
    return r;
}

struct PerUavEstimates {
    std::vector<double> i_bar_u;  // per-UAV interference mean field [W]
    std::vector<double> i_bar_j;
    double pop_g_bar_u = 0.0;     // population-mean average gains
    double pop_g_bar_j = 0.0;
    double pop_i_bar_u = 0.0;
    double pop_i_bar_j = 0.0;
    double median_g_direct = 0.0;
};

}  // namespace detail

// The dynamic collaboration loop: per-subslot association checks and stepping,
// per-slot probing, power solves, interference averaging and gain adaptation,
// with a full constraint audit each subslot.
class EpisodeDriver {
public:
    EpisodeDriver(const Scenario& scenario, const SimOptions& opt)
        : scn_(scenario),
          opt_(opt),
          fading_rng_(scenario.seed, Stream::Fading),
          wiener_rng_(scenario.seed, Stream::Wiener),
          rrt_rng_(scenario.seed, Stream::Rrt) {}

    EpisodeLog run() {
        const int n = scn_.n_uavs;
        const int m = scn_.n_targets();
        const int y = scn_.subslots_per_slot;
        const double e0 = opt_.grid.e0;
        const CollabConfig& cc = opt_.collab;

        EpisodeLog log;
        log.seed = scn_.seed;
        log.config_hash = opt_.config_hash;
        log.switch_counts.assign(static_cast<std::size_t>(n), 0);

        SwarmState st = SwarmState::initial(scn_, e0, opt_.channel.p_max_uav / 2.0);
        k_rep_ = opt_.apf.k_rep;
        k_jam_ = opt_.apf.k_jam;

        associate(st, 0.0);
        for (int i = 0; i < n; ++i)
            st.assigned_target[static_cast<std::size_t>(i)] = partition_.assigned_target_of_uav(i);

        // slot-start solve covers the first slot (probe with initial geometry)
        double p_u_ref = opt_.channel.p_max_uav / 2.0;
        slot_solve(st, 0, p_u_ref, log);

        std::vector<double> slot_iu, slot_ij;   // per-subslot mean fields within the slot
        std::vector<double> slot_powers_sum;    // for next slot's p_u_ref
        std::vector<Vec3> targets_now(static_cast<std::size_t>(m));
        std::vector<Vec3> jammers_now(static_cast<std::size_t>(m));

        const int total = scn_.total_subslots();
        for (int t = 0; t < total; ++t) {
            const double time = t * scn_.dt;
            for (int k = 0; k < m; ++k) {
                targets_now[static_cast<std::size_t>(k)] = target_position(scn_, k, time);
                jammers_now[static_cast<std::size_t>(k)] = jammer_position(scn_, k, time);
            }

            // reassociation check (every subslot, skips t=0 which just associated)
            if (t > 0) {
                const auto cents = assoc::centroids(st.positions, partition_.labels, m);
                if (assoc::reassociation_needed(partition_, cents, targets_now)) {
                    associate(st, time);
                    log.triggers.push_back({t, "reassociation", 0.0});
                    ++log.summary.reassociations;
                }
            }
            for (int i = 0; i < n; ++i) {
                const int tgt = partition_.assigned_target_of_uav(i);
                if (tgt != st.assigned_target[static_cast<std::size_t>(i)]) {
                    st.assigned_target[static_cast<std::size_t>(i)] = tgt;
                    ++log.switch_counts[static_cast<std::size_t>(i)];
                }
            }

            // channel realization and per-UAV receivers for this subslot
            const auto cr = channel::realize_channel(st.positions, jammers_now, opt_.channel,
                                                     fading_rng_);
            std::vector<int> receiver(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i)
                receiver[static_cast<std::size_t>(i)] = detail::nearest_uav(st.positions, i);

            // transmit powers for this subslot
            const int t_in_slot = t % y;
            for (int i = 0; i < n; ++i)
                st.powers[static_cast<std::size_t>(i)] =
                    transmit_power(i, t_in_slot, st, receiver[static_cast<std::size_t>(i)], cr);

            // actual interference / SINR records
            const std::vector<double> jam_powers(static_cast<std::size_t>(m),
                                                 opt_.channel.p_max_jam);
            double sum_int = 0.0, sum_sinr = 0.0, sum_power = 0.0;
            int arrived_count = 0;
            std::vector<UavRecord> recs(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) {
                const int r = receiver[static_cast<std::size_t>(i)];
                const auto [iu, ij] =
                    channel::aggregate_interference(r, i, st.powers, jam_powers, cr);
                const double s = channel::sinr(i, r, st.powers, jam_powers, cr, opt_.channel);
                auto& rec = recs[static_cast<std::size_t>(i)];
                rec = UavRecord{t,
                                i,
                                st.positions[static_cast<std::size_t>(i)],
                                st.powers[static_cast<std::size_t>(i)],
                                st.energies[static_cast<std::size_t>(i)],
                                iu,
                                ij,
                                s,
                                st.labels[static_cast<std::size_t>(i)],
                                st.assigned_target[static_cast<std::size_t>(i)],
                                0.0,
                                0.0,
                                false,
                                false,
                                false};
                sum_int += iu + ij;
                sum_sinr += s;
                sum_power += st.powers[static_cast<std::size_t>(i)];
            }

            // per-subslot mean fields from the latest probe and current mean power
            const double mean_power = sum_power / n;
            const double iu_field = n > 2 ? (n - 2) * mean_power * est_.pop_g_bar_u : 0.0;
            const double ij_field = m * opt_.channel.p_max_jam * est_.pop_g_bar_j;
            slot_iu.push_back(iu_field);
            slot_ij.push_back(ij_field);

            // energy SDE with the applied powers
            for (int i = 0; i < n; ++i)
                st.energies[static_cast<std::size_t>(i)] = mfg::energy_sde_step(
                    st.energies[static_cast<std::size_t>(i)], st.powers[static_cast<std::size_t>(i)],
                    scn_.dt, opt_.grid.nu, e0, wiener_rng_);

            // synchronous trajectory step against the subslot-start snapshot
            const std::vector<Vec3> snapshot = st.positions;
            std::vector<Vec3> others(snapshot.size() - 1);
            apf::ApfGains gains = opt_.apf;
            gains.k_rep = k_rep_;
            gains.k_jam = k_jam_;
            for (int i = 0; i < n; ++i) {
                auto& rec = recs[static_cast<std::size_t>(i)];
                std::size_t w = 0;
                for (int j = 0; j < n; ++j)
                    if (j != i) others[w++] = snapshot[static_cast<std::size_t>(j)];
                const Vec3 target =
                    targets_now[static_cast<std::size_t>(st.assigned_target[static_cast<std::size_t>(i)])];
                apf::WorldSnapshot world{others, scn_.obstacles,
                                         cc.jam_aware() ? std::span<const Vec3>(jammers_now)
                                                        : std::span<const Vec3>(),
                                         target, scn_.d_max};
                step_uav(i, world, gains, st, rec);
                if (rec.arrived) ++arrived_count;
            }
            st.t = t + 1;

            audit(t, st, snapshot, jammers_now, log);
            log.subslots.push_back(
                {t, sum_int / n, sum_sinr / n, iu_field, ij_field, arrived_count});
            for (auto& rec : recs) log.uav_records.push_back(rec);

            if (arrived_count == n && log.summary.steps_to_all_arrived < 0)
                log.summary.steps_to_all_arrived = t + 1;

            // slot boundary: probe, power solve for the next slot, averages, adaptation
            if ((t + 1) % y == 0) {
                const int slot = t / y;
                const auto [avg_iu, avg_ij] = slot_average_interference(slot_iu, slot_ij, y);
                const auto ad =
                    adapt_gains(k_rep_, k_jam_, avg_iu, cc.jam_aware() ? avg_ij : 0.0, cc.i_th_u,
                                cc.i_th_j);
                if (ad.k_rep != k_rep_) {
                    log.triggers.push_back({t, "replan-k_rep", ad.k_rep});
                    ++log.summary.replans;
                }
                if (ad.k_jam != k_jam_) {
                    log.triggers.push_back({t, "replan-k_jam", ad.k_jam});
                    ++log.summary.replans;
                }
                k_rep_ = ad.k_rep;
                k_jam_ = ad.k_jam;
                log.slots.push_back({slot, avg_iu, avg_ij, k_rep_, k_jam_, last_mfg_iterations_,
                                     last_mfg_converged_});
                slot_iu.clear();
                slot_ij.clear();
                if (t + 1 < total) {
                    p_u_ref = mean_power;
                    slot_solve(st, t + 1, p_u_ref, log);
                }
            }

            if (log.summary.steps_to_all_arrived > 0) break;
        }

        finalize_summary(log);
        return log;
    }

private:
    void associate(SwarmState& st, double time) {
        const int m = scn_.n_targets();
        switch (opt_.collab.association) {
            case Association::Ceta: {
                const double dc = assoc::cutoff_distance(st.positions);
                partition_ = assoc::ceta_partition(st.positions, m, dc);
                break;
            }
            case Association::Kmeans:
                partition_ = assoc::kmeans_partition(st.positions, m, scn_.seed).first;
                break;
            case Association::Fcm:
                partition_ = assoc::fcm_partition(st.positions, m, 2.0, 1e-5, 100, scn_.seed).first;
                break;
        }
        std::vector<Vec3> targets(static_cast<std::size_t>(m));
        for (int k = 0; k < m; ++k)
            targets[static_cast<std::size_t>(k)] = target_position(scn_, k, time);
        partition_.target_of = assoc::match_targets(partition_.centroids, targets);
        st.labels = partition_.labels;
        rrt_paths_.assign(st.positions.size(), {});
        rrt_cursor_.assign(st.positions.size(), 0);
        rrt_goal_.assign(st.positions.size(), Vec3{});
    }

    // Per-slot probe (noiseless, fading of the slot-start subslot) and MFG solve.
    void slot_solve(const SwarmState& st, int t, double p_u_ref, EpisodeLog& log) {
        const int n = scn_.n_uavs;
        const int m = scn_.n_targets();
        const double time = t * scn_.dt;
        std::vector<Vec3> jammers(static_cast<std::size_t>(m));
        for (int k = 0; k < m; ++k)
            jammers[static_cast<std::size_t>(k)] = jammer_position(scn_, k, time);
        RngStream probe_rng(scn_.seed ^ 0x9e37u, 100 + static_cast<std::uint64_t>(t));
        const auto cr = channel::realize_channel(st.positions, jammers, opt_.channel, probe_rng);

        est_.i_bar_u.assign(static_cast<std::size_t>(n), 0.0);
        est_.i_bar_j.assign(static_cast<std::size_t>(n), 0.0);
        std::vector<double> g_direct(static_cast<std::size_t>(n));
        double sum_gu = 0.0, sum_gj = 0.0;
        for (int i = 0; i < n; ++i) {
            const int r = detail::nearest_uav(st.positions, i);
            const double g = cr.g_uav(static_cast<std::size_t>(i), static_cast<std::size_t>(r));
            g_direct[static_cast<std::size_t>(i)] = g;
            const double p1r =
                channel::probe_received_power(r, i, opt_.probes.p1_u, opt_.probes.p1_j, cr);
            const double p2r =
                channel::probe_received_power(r, i, opt_.probes.p2_u, opt_.probes.p2_j, cr);
            const auto gains = channel::estimate_mean_gains(
                opt_.probes.p1_u, opt_.probes.p1_j, opt_.probes.p2_u, opt_.probes.p2_j, p1r, p2r,
                g, n, m);
            const auto [iu, ij] = channel::mean_fields(gains.g_bar_uav, gains.g_bar_jam, p_u_ref,
                                                       opt_.channel.p_max_jam, n, m);
            est_.i_bar_u[static_cast<std::size_t>(i)] = iu;
            est_.i_bar_j[static_cast<std::size_t>(i)] = ij;
            sum_gu += gains.g_bar_uav;
            sum_gj += gains.g_bar_jam;
        }
        est_.pop_g_bar_u = sum_gu / n;
        est_.pop_g_bar_j = sum_gj / n;
        est_.pop_i_bar_u = 0.0;
        est_.pop_i_bar_j = 0.0;
        for (int i = 0; i < n; ++i) {
            est_.pop_i_bar_u += est_.i_bar_u[static_cast<std::size_t>(i)] / n;
            est_.pop_i_bar_j += est_.i_bar_j[static_cast<std::size_t>(i)] / n;
        }
        std::vector<double> gsort = g_direct;
        std::nth_element(gsort.begin(), gsort.begin() + n / 2, gsort.end());
        est_.median_g_direct = gsort[static_cast<std::size_t>(n) / 2];

        const Policy pol = opt_.collab.policy;
        if (pol == Policy::DynamicCollaboration || pol == Policy::NoJammerCooperative) {
            mfg::CostParams cp = cost_params(est_.median_g_direct, est_.pop_i_bar_u,
                                             est_.pop_i_bar_j);
            std::vector<double> m0(static_cast<std::size_t>(opt_.grid.n_energy));
            if (slot_m_.empty()) {
                // first slot: uniform density over energy
                std::fill(m0.begin(), m0.end(), 1.0 / opt_.grid.e0);
            } else {
                m0 = slot_m_;
            }
            mfg_ = mfg::solve_mfg(m0, opt_.grid, cp, opt_.mfg_max_iter, opt_.mfg_tol);
            slot_m_.assign(mfg_.m.row(static_cast<std::size_t>(opt_.grid.n_time)),
                           mfg_.m.row(static_cast<std::size_t>(opt_.grid.n_time)) +
                               opt_.grid.n_energy);
            last_mfg_iterations_ = mfg_.iterations;
            last_mfg_converged_ = mfg_.converged;
        }
        (void)log;
    }

    mfg::CostParams cost_params(double g, double iu, double ij) const {
        mfg::CostParams cp;
        cp.omega1 = opt_.omega1;
        cp.omega2 = opt_.omega2;
        cp.gamma_th = opt_.channel.gamma_th;
        cp.sigma2 = opt_.channel.noise_power;
        cp.g_direct = g;
        cp.i_bar_u = iu;
        cp.i_bar_j = opt_.collab.jam_aware() ? ij : 0.0;
        cp.p_max = opt_.channel.p_max_uav;
        return cp;
    }

    double transmit_power(int i, int t_in_slot, const SwarmState& st, int receiver,
                          const channel::ChannelRealization& cr) {
        const double e = st.energies[static_cast<std::size_t>(i)];
        if (e <= 0.0) return 0.0;  // drained UAVs stay silent
        const double g = cr.g_uav(static_cast<std::size_t>(i), static_cast<std::size_t>(receiver));
        switch (opt_.collab.policy) {
            case Policy::DynamicCollaboration:
            case Policy::NoJammerCooperative: {
                const int z = opt_.grid.level_of(e);
                double du = 0.0;
                if (z > 0) {
                    du = (mfg_.u(static_cast<std::size_t>(t_in_slot), static_cast<std::size_t>(z)) -
                          mfg_.u(static_cast<std::size_t>(t_in_slot),
                                 static_cast<std::size_t>(z - 1))) /
                         opt_.grid.de();
                } else {
                    return 0.0;
                }
                mfg::CostParams cp =
                    cost_params(g, est_.i_bar_u[static_cast<std::size_t>(i)],
                                est_.i_bar_j[static_cast<std::size_t>(i)]);
                return mfg::optimal_power(du, cp);
            }
            case Policy::SctApfFractional:
                return mfg::fractional_power(g, opt_.collab.fractional_tau,
                                             opt_.collab.fractional_p0, opt_.channel.p_max_uav);
            default: {
                const double slot_duration = scn_.subslots_per_slot * scn_.dt;
                return mfg::uniform_power(opt_.grid.e0, slot_duration, opt_.channel.p_max_uav);
            }
        }
    }

    void step_uav(int i, const apf::WorldSnapshot& world, const apf::ApfGains& gains,
                  SwarmState& st, UavRecord& rec) {
        const std::size_t ii = static_cast<std::size_t>(i);
        if (opt_.collab.planner == Planner::Rrt) {
            step_uav_rrt(i, world, st, rec);
            return;
        }
        apf::StepResult res;
        try {
            res = opt_.collab.planner == Planner::Jssct
                      ? apf::jssct_step(st.positions[ii], st.prev_forces[ii], world, gains)
                      : apf::traditional_apf_step(st.positions[ii], st.prev_forces[ii], world,
                                                  gains);
        } catch (const StuckAtBalance&) {
            rec.arrived = false;  // holds position this subslot
            return;
        }
        st.positions[ii] = res.position;
        st.prev_forces[ii] = res.flown;
        rec.f_tot_norm = res.forces.f_tot.norm();
        rec.turning_angle = res.forces.turning_angle;
        rec.used_external = res.forces.used_external;
        rec.used_jitter_fix = res.forces.used_jitter_fix;
        rec.arrived = res.arrived || distance(res.position, world.target) <= world.d_max;
    }

    void step_uav_rrt(int i, const apf::WorldSnapshot& world, SwarmState& st, UavRecord& rec) {
        const std::size_t ii = static_cast<std::size_t>(i);
        if (distance(st.positions[ii], world.target) <= world.d_max) {
            rec.arrived = true;
            return;
        }
        auto& path = rrt_paths_[ii];
        auto& cur = rrt_cursor_[ii];
        const bool goal_stale = path.empty() || distance(rrt_goal_[ii], world.target) > world.d_max ||
                                cur + 1 >= path.size();
        if (goal_stale) {
            apf::RrtParams prm;
            prm.step = opt_.apf.step_len;
            prm.goal_radius = world.d_max;
            try {
                path = apf::rrt_plan(st.positions[ii], world.target, world.obstacles,
                                     world.jammers, prm, rrt_rng_);
            } catch (const NoPathFound&) {
                return;  // hold and retry next subslot
            }
            cur = 0;
            rrt_goal_[ii] = world.target;
        }
        if (cur + 1 < path.size()) {
            ++cur;
            st.positions[ii] = path[cur];
        }
        rec.arrived = distance(st.positions[ii], world.target) <= world.d_max;
    }

    void audit(int t, const SwarmState& st, const std::vector<Vec3>& prev_positions,
               const std::vector<Vec3>& jammers, EpisodeLog& log) {
        const int n = scn_.n_uavs;
        int label_sum = 0;
        std::vector<int> sizes(static_cast<std::size_t>(scn_.n_targets()), 0);
        for (int l : st.labels) ++sizes[static_cast<std::size_t>(l)];
        for (int c : sizes) label_sum += c;
        if (label_sum != n) log.violations.push_back({t, "P1a", -1, -1, double(label_sum)});

        for (int i = 0; i < n; ++i) {
            const std::size_t ii = static_cast<std::size_t>(i);
            for (int j = i + 1; j < n; ++j) {
                const double d = distance(st.positions[ii], st.positions[static_cast<std::size_t>(j)]);
                if (d <= kCollisionMargin) log.violations.push_back({t, "P1b", i, j, d});
            }
            for (int k = 0; k < scn_.n_obstacles(); ++k) {
                const double sd =
                    surface_distance(st.positions[ii], scn_.obstacles[static_cast<std::size_t>(k)]);
                if (sd <= 0.0) log.violations.push_back({t, "P1c", i, k, sd});
            }
            for (int k = 0; k < static_cast<int>(jammers.size()); ++k) {
                const double d = distance(st.positions[ii], jammers[static_cast<std::size_t>(k)]);
                if (d <= kCollisionMargin) log.violations.push_back({t, "P1d", i, k, d});
            }
            const double disp = distance(st.positions[ii], prev_positions[ii]);
            if (disp > scn_.v_max * scn_.dt + 1e-9)
                log.violations.push_back({t, "P1g", i, -1, disp});
            const double e = st.energies[ii];
            if (e < 0.0 || e > opt_.grid.e0 + 1e-12)
                log.violations.push_back({t, "P1h", i, -1, e});
            const double p = st.powers[ii];
            if (p < 0.0 || p > opt_.channel.p_max_uav + 1e-12)
                log.violations.push_back({t, "P1i", i, -1, p});
        }
    }

    void finalize_summary(EpisodeLog& log) {
        auto& s = log.summary;
        s.horizon_exhausted = s.steps_to_all_arrived < 0;
        double sw = 0.0;
        for (int c : log.switch_counts) sw += c;
        s.mean_switches = log.switch_counts.empty() ? 0.0 : sw / log.switch_counts.size();
        if (!log.subslots.empty()) {
            double si = 0.0, ss = 0.0;
            for (const auto& r : log.subslots) {
                si += r.mean_interference;
                ss += r.mean_sinr;
            }
            s.mean_interference = si / log.subslots.size();
            s.mean_sinr = ss / log.subslots.size();
            // SINR criterion excludes the final approach slot
            const int y = scn_.subslots_per_slot;
            const int last_t = log.subslots.back().t;
            const int final_slot = last_t / y;
            int ok = 0, considered = 0;
            for (const auto& r : log.subslots) {
                if (r.t / y == final_slot) continue;
                ++considered;
                if (r.mean_sinr >= opt_.channel.gamma_th) ++ok;
            }
            s.sinr_ok_fraction = considered > 0 ? double(ok) / considered : 1.0;
        }
        s.violations = log.violations.size();
    }

    static constexpr double kCollisionMargin = 0.1;  // eps_coll [m]

    const Scenario& scn_;
    const SimOptions& opt_;
    RngStream fading_rng_;
    RngStream wiener_rng_;
    RngStream rrt_rng_;
    assoc::Partition partition_;
    detail::PerUavEstimates est_;
    mfg::MfgSolution mfg_;
    std::vector<double> slot_m_;  // terminal density of the previous slot
    double k_rep_ = 10.0;
    double k_jam_ = 10.0;
    int last_mfg_iterations_ = 0;
    bool last_mfg_converged_ = false;
    std::vector<std::vector<Vec3>> rrt_paths_;
    std::vector<std::size_t> rrt_cursor_;
    std::vector<Vec3> rrt_goal_;
};

inline EpisodeLog run_episode(const Scenario& scenario, const SimOptions& opt) {
    EpisodeDriver d(scenario, opt);
    return d.run();
}

}  // namespace mtt::sim
