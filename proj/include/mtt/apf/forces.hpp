#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "mtt/core/errors.hpp"
#include "mtt/core/scenario.hpp"
#include "mtt/core/vec3.hpp"

namespace mtt::apf {

struct ApfGains {
    double k_att = 5.0;
    double k_rep = 10.0;
    double k_obs = 10.0;
    double k_jam = 10.0;
    double k_ext = 5.0;
    double d0 = 5.0;         // influence distance [m]
    double q = 1.0;          // repulsion exponent constant
    double step_len = 0.5;   // L~ [m]
    double eps_balance = 1e-6;

    void validate(double v_max, double dt) const {
        if (!(k_att > 0 && k_rep > 0 && k_obs > 0 && k_jam > 0 && k_ext > 0))
            throw InvalidConfig("apf gains must be > 0");
        if (!(d0 > 0)) throw InvalidConfig("apf d0: need > 0");
        if (!(q > 0)) throw InvalidConfig("apf q: need > 0");
        if (!(step_len > 0) || step_len > v_max * dt + 1e-12)
            throw InvalidConfig("apf step_len: need 0 < step_len <= v_max*dt");
    }
};

struct ForceBreakdown {
    Vec3 f_att, f_rep, f_obs, f_jam, f_tot;
    double turning_angle = 0.0;  // raw delta-beta [deg]
    bool used_external = false;
    bool used_jitter_fix = false;
};

namespace detail {

inline double b_factor(double d, double d0) {
    const double v = 1.0 / d - 1.0 / d0;
    return v * v;
}

// Negative gradient of 0.5*k*B(d)*A^{q/2} for one repelling entity, where d is
// the clearance to the entity and A = d(pos,target)^2. away_dir points from the
// entity to the UAV. Zero beyond d0.
inline Vec3 pair_repulsion(double d, const Vec3& away_dir, const Vec3& pos, const Vec3& target,
                           double k, double d0, double q) {
    if (d > d0) return {};
    if (d <= 0.0) throw CoincidentPositions("repulsive force: nonpositive clearance");
    const double dt_ = distance(pos, target);
    const double b = b_factor(d, d0);
    const Vec3 to_target = (target - pos).normalized();
    const Vec3 f1 = away_dir * (k * std::sqrt(b) * std::pow(dt_, q) / (d * d));
    const Vec3 f2 = to_target * (0.5 * q * k * b * std::pow(dt_, q - 1.0));
    return f1 + f2;
}

}  // namespace detail

// k_att * d * n_im : pulls straight toward the target, zero at the target.
inline Vec3 attractive_force(const Vec3& pos, const Vec3& target, double k_att) {
    const Vec3 diff = target - pos;
    const double d = diff.norm();
    if (d == 0.0) return {};
    return diff * (k_att);
}

inline Vec3 repulsive_force_uav(const Vec3& pos, std::span<const Vec3> others, const Vec3& target,
                                const ApfGains& g) {
    Vec3 f{};
    for (const Vec3& o : others) {
        const double d = distance(pos, o);
        if (d == 0.0) throw CoincidentPositions("repulsive_force_uav: coincident UAVs");
        if (d > g.d0) continue;
        f += detail::pair_repulsion(d, (pos - o).normalized(), pos, target, g.k_rep, g.d0, g.q);
    }
    return f;
}

inline Vec3 repulsive_force_obstacles(const Vec3& pos, std::span<const Obstacle> obstacles,
                                      const Vec3& target, const ApfGains& g) {
    Vec3 f{};
    for (const Obstacle& o : obstacles) {
        const double sd = surface_distance(pos, o);
        if (sd > g.d0) continue;
        f += detail::pair_repulsion(sd, (pos - o.center).normalized(), pos, target, g.k_obs, g.d0,
                                    g.q);
    }
    return f;
}

inline Vec3 repulsive_force_jammers(const Vec3& pos, std::span<const Vec3> jammers,
                                    const Vec3& target, const ApfGains& g) {
    Vec3 f{};
    for (const Vec3& j : jammers) {
        const double d = distance(pos, j);
        if (d == 0.0) throw CoincidentPositions("repulsive_force_jammers: on top of jammer");
        if (d > g.d0) continue;
        f += detail::pair_repulsion(d, (pos - j).normalized(), pos, target, g.k_jam, g.d0, g.q);
    }
    return f;
}

// 0.5*k_ext*F1*F2*F3*n_im; each factor sums B over its entity class, entities
// beyond d0 contribute 0, so an absent class annihilates the product.
inline Vec3 external_force(const Vec3& pos, std::span<const Vec3> others,
                           std::span<const Obstacle> obstacles, std::span<const Vec3> jammers,
                           const Vec3& target, const ApfGains& g) {
    double s1 = 0.0, s2 = 0.0, s3 = 0.0;
    for (const Vec3& o : others) {
        const double d = distance(pos, o);
        if (d > 0.0 && d <= g.d0) s1 += detail::b_factor(d, g.d0);
    }
    for (const Obstacle& o : obstacles) {
        const double sd = surface_distance(pos, o);
        if (sd > 0.0 && sd <= g.d0) s2 += detail::b_factor(sd, g.d0);
    }
    for (const Vec3& j : jammers) {
        const double d = distance(pos, j);
        if (d > 0.0 && d <= g.d0) s3 += detail::b_factor(d, g.d0);
    }
    return (target - pos).normalized() * (0.5 * g.k_ext * s1 * s2 * s3);
}

// arccos of the normalized dot product, in degrees within [0, 180].
inline double turning_angle(const Vec3& f_prev, const Vec3& f_curr) {
    const double np = f_prev.norm(), nc = f_curr.norm();
    if (np == 0.0 || nc == 0.0) throw ZeroVector("turning_angle: zero force vector");
    double c = f_prev.dot(f_curr) / (np * nc);
    c = std::clamp(c, -1.0, 1.0);
    return std::acos(c) * 180.0 / M_PI;
}

}  // namespace mtt::apf
