#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mtt/core/errors.hpp"
#include "mtt/core/rng.hpp"
#include "mtt/core/vec3.hpp"

namespace mtt {

struct Obstacle {
    Vec3 center;
    double radius = 1.0;  // sphere model
};

// Signed clearance to the obstacle surface; negative means the point is inside.
inline double surface_distance(const Vec3& p, const Obstacle& o) {
    return distance(p, o.center) - o.radius;
}

struct TargetTrack {
    Vec3 start;
    Vec3 direction;  // unit
    double speed = 0.0;  // m/s
};

struct ScenarioConfig {
    int n_uavs = 0;                      // N
    std::vector<TargetTrack> targets;    // M tracks
    std::vector<Obstacle> obstacles;     // K
    Vec3 start_box_min;                  // UAV spawn region
    Vec3 start_box_max;
    Vec3 jammer_offset;                  // fixed displacement jammer <- target
    int n_slots = 1;                     // Lambda
    int subslots_per_slot = 1;           // Y
    double dt = 0.1;                     // subslot interval [s]
    double d_max = 1.0;                  // arrival radius [m]
    double v_max = 20.0;                 // max UAV speed [m/s]
    std::uint64_t seed = 0;
};

struct Scenario {
    int n_uavs = 0;
    std::vector<TargetTrack> targets;
    std::vector<Obstacle> obstacles;
    std::vector<Vec3> uav_start;
    Vec3 jammer_offset;
    int n_slots = 1;
    int subslots_per_slot = 1;
    double dt = 0.1;
    double d_max = 1.0;
    double v_max = 20.0;
    std::uint64_t seed = 0;

    int n_targets() const { return static_cast<int>(targets.size()); }
    int n_obstacles() const { return static_cast<int>(obstacles.size()); }
    double horizon() const { return n_slots * subslots_per_slot * dt; }
    int total_subslots() const { return n_slots * subslots_per_slot; }
};

// Validates invariants and resolves random UAV starts from the seed.
// Invariant violations are rejected, never silently repaired.
inline Scenario build_scenario(const ScenarioConfig& cfg) {
    if (cfg.n_uavs < 2) throw InvalidConfig("n_uavs: need N >= 2");
    const int m = static_cast<int>(cfg.targets.size());
    if (m < 1) throw InvalidConfig("targets: need M >= 1");
    if (m > cfg.n_uavs) throw InvalidConfig("targets: need M <= N");
    if (cfg.n_slots < 1) throw InvalidConfig("n_slots: need >= 1");
    if (cfg.subslots_per_slot < 1) throw InvalidConfig("subslots_per_slot: need >= 1");
    if (!(cfg.dt > 0.0)) throw InvalidConfig("dt: need > 0");
    if (!(cfg.d_max > 0.0)) throw InvalidConfig("d_max: need > 0");
    if (!(cfg.v_max > 0.0)) throw InvalidConfig("v_max: need > 0");
    if (cfg.jammer_offset.norm() == 0.0) throw InvalidConfig("jammer_offset: must be nonzero");
    for (std::size_t k = 0; k < cfg.obstacles.size(); ++k) {
        if (!(cfg.obstacles[k].radius > 0.0))
            throw InvalidConfig("obstacle " + std::to_string(k) + ": radius must be > 0");
    }
    for (std::size_t i = 0; i < cfg.targets.size(); ++i) {
        if (cfg.targets[i].direction.norm() == 0.0)
            throw InvalidConfig("target " + std::to_string(i) + ": direction must be nonzero");
        if (cfg.targets[i].speed < 0.0)
            throw InvalidConfig("target " + std::to_string(i) + ": speed must be >= 0");
    }
    for (int a = 0; a < 3; ++a) {
        const double lo = (&cfg.start_box_min.x)[a];
        const double hi = (&cfg.start_box_max.x)[a];
        if (!(lo <= hi)) throw InvalidConfig("start_box: min must be <= max per axis");
    }

    Scenario s;
    s.n_uavs = cfg.n_uavs;
    s.targets = cfg.targets;
    for (auto& t : s.targets) t.direction = t.direction.normalized();
    s.obstacles = cfg.obstacles;
    s.jammer_offset = cfg.jammer_offset;
    s.n_slots = cfg.n_slots;
    s.subslots_per_slot = cfg.subslots_per_slot;
    s.dt = cfg.dt;
    s.d_max = cfg.d_max;
    s.v_max = cfg.v_max;
    s.seed = cfg.seed;

    RngStream rng(cfg.seed, Stream::Starts);
    s.uav_start.reserve(cfg.n_uavs);
    for (int i = 0; i < cfg.n_uavs; ++i) {
        s.uav_start.push_back({rng.uniform(cfg.start_box_min.x, cfg.start_box_max.x),
                               rng.uniform(cfg.start_box_min.y, cfg.start_box_max.y),
                               rng.uniform(cfg.start_box_min.z, cfg.start_box_max.z)});
    }
    return s;
}

// Uniform straight-line motion of target m at time t [s].
inline Vec3 target_position(const Scenario& s, int m, double t) {
    if (m < 0 || m >= s.n_targets()) throw IndexError("target index out of range");
    const TargetTrack& tr = s.targets[static_cast<std::size_t>(m)];
    return tr.start + tr.direction * (tr.speed * t);
}

// Jammer shadows its target at a fixed offset.
inline Vec3 jammer_position(const Scenario& s, int m, double t) {
    return target_position(s, m, t) + s.jammer_offset;
}

}  // namespace mtt
