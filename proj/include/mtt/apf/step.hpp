#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "mtt/apf/forces.hpp"
#include "mtt/core/errors.hpp"
#include "mtt/core/scenario.hpp"
#include "mtt/core/vec3.hpp"

namespace mtt::apf {

// Immutable view of everything one UAV sees while stepping. All UAVs within a
// subslot step against the same snapshot and commit synchronously.
struct WorldSnapshot {
    std::span<const Vec3> others;        // positions of the other UAVs
    std::span<const Obstacle> obstacles;
    std::span<const Vec3> jammers;       // empty when the planner is jamming-blind
    Vec3 target;
    double d_max = 1.0;
};

struct StepResult {
    Vec3 position;
    ForceBreakdown forces;
    Vec3 flown;  // direction actually flown (next step's turning-angle memory)
    bool arrived = false;
};

namespace detail {

// Rotate unit vector u by ang_deg toward v within their common plane. For the
// antiparallel case the plane is undefined; a deterministic perpendicular is used.
inline Vec3 rotate_toward(const Vec3& u, const Vec3& v, double ang_deg) {
    Vec3 w = v - u * v.dot(u);
    if (w.norm() < 1e-12) {
        w = u.cross(Vec3{1.0, 0.0, 0.0});
        if (w.norm() < 1e-12) w = u.cross(Vec3{0.0, 1.0, 0.0});
    }
    const double a = ang_deg * M_PI / 180.0;
    return u * std::cos(a) + w.normalized() * std::sin(a);
}

inline ForceBreakdown compute_forces(const Vec3& pos, const WorldSnapshot& w, const ApfGains& g) {
    ForceBreakdown fb;
    fb.f_att = attractive_force(pos, w.target, g.k_att);
    fb.f_rep = repulsive_force_uav(pos, w.others, w.target, g);
    fb.f_obs = repulsive_force_obstacles(pos, w.obstacles, w.target, g);
    fb.f_jam = repulsive_force_jammers(pos, w.jammers, w.target, g);
    fb.f_tot = fb.f_att + fb.f_rep + fb.f_obs + fb.f_jam;
    return fb;
}

}  // namespace detail

// One JSSCT-APF subslot step: resultant force, external-force substitution at
// balance points, and half-angle jitter correction. prev_force is the force the
// UAV actually flew along last subslot (zero on the first step).
inline StepResult jssct_step(const Vec3& pos, const Vec3& prev_force, const WorldSnapshot& w,
                             const ApfGains& g) {
    StepResult r;
    r.position = pos;
    if (distance(pos, w.target) <= w.d_max) {
        r.arrived = true;
        return r;
    }
    r.forces = detail::compute_forces(pos, w, g);
    if (r.forces.f_tot.norm() < g.eps_balance) {
        r.forces.f_tot = external_force(pos, w.others, w.obstacles, w.jammers, w.target, g);
        r.forces.used_external = true;
        if (r.forces.f_tot.norm() < g.eps_balance)
            throw StuckAtBalance("jssct_step: external force is also balanced");
    }
    Vec3 dir = r.forces.f_tot.normalized();
    if (prev_force.norm() > 0.0) {
        r.forces.turning_angle = turning_angle(prev_force, r.forces.f_tot);
        if (r.forces.turning_angle >= 90.0) {
            dir = detail::rotate_toward(prev_force.normalized(), r.forces.f_tot,
                                        0.5 * r.forces.turning_angle);
            r.forces.used_jitter_fix = true;
        }
    }
    r.position = pos + dir * g.step_len;
    r.flown = dir * r.forces.f_tot.norm();
    return r;
}

// Plain APF baseline: no external force, no jitter correction. Holds position
// at balance points (the stall the JSSCT variant is built to escape).
inline StepResult traditional_apf_step(const Vec3& pos, const Vec3& prev_force,
                                       const WorldSnapshot& w, const ApfGains& g) {
    StepResult r;
    r.position = pos;
    if (distance(pos, w.target) <= w.d_max) {
        r.arrived = true;
        return r;
    }
    r.forces = detail::compute_forces(pos, w, g);
    if (prev_force.norm() > 0.0 && r.forces.f_tot.norm() > 0.0)
        r.forces.turning_angle = turning_angle(prev_force, r.forces.f_tot);
    if (r.forces.f_tot.norm() < g.eps_balance) return r;  // stalls
    r.position = pos + r.forces.f_tot.normalized() * g.step_len;
    r.flown = r.forces.f_tot;
    return r;
}

}  // namespace mtt::apf
