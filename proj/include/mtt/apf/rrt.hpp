#pragma once

#include <algorithm>
#include <limits>
#include <span>
#include <vector>

#include "mtt/core/errors.hpp"
#include "mtt/core/rng.hpp"
#include "mtt/core/scenario.hpp"
#include "mtt/core/vec3.hpp"

namespace mtt::apf {

struct RrtParams {
    double step = 0.5;
    double goal_bias = 0.1;
    int max_nodes = 20000;
    double goal_radius = 1.0;     // arrival radius
    double clearance = 0.1;       // margin kept from obstacle surfaces and jammers
    double sample_margin = 5.0;   // sampling box inflation around start/target
};

namespace detail {

inline bool segment_hits_sphere(const Vec3& a, const Vec3& b, const Vec3& c, double r) {
    const Vec3 ab = b - a;
    const double len2 = ab.squared_norm();
    double t = len2 > 0.0 ? (c - a).dot(ab) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return distance(a + ab * t, c) <= r;
}

inline bool edge_free(const Vec3& a, const Vec3& b, std::span<const Obstacle> obstacles,
                      std::span<const Vec3> jammers, double clearance) {
    for (const Obstacle& o : obstacles)
        if (segment_hits_sphere(a, b, o.center, o.radius + clearance)) return false;
    for (const Vec3& j : jammers)
        if (segment_hits_sphere(a, b, j, clearance)) return false;
    return true;
}

}  // namespace detail

// Goal-biased RRT. Returns a collision-free polyline from start to within
// goal_radius of target, or throws NoPathFound after max_nodes expansions.
inline std::vector<Vec3> rrt_plan(const Vec3& start, const Vec3& target,
                                  std::span<const Obstacle> obstacles,
                                  std::span<const Vec3> jammers, const RrtParams& prm,
                                  RngStream& rng) {
    for (const Obstacle& o : obstacles) {
        if (surface_distance(start, o) <= prm.clearance)
            throw NoPathFound("rrt_plan: start is in collision");
        if (surface_distance(target, o) <= prm.clearance)
            throw NoPathFound("rrt_plan: target is in collision");
    }

    Vec3 lo{std::min(start.x, target.x), std::min(start.y, target.y), std::min(start.z, target.z)};
    Vec3 hi{std::max(start.x, target.x), std::max(start.y, target.y), std::max(start.z, target.z)};
    lo -= Vec3{prm.sample_margin, prm.sample_margin, prm.sample_margin};
    hi += Vec3{prm.sample_margin, prm.sample_margin, prm.sample_margin};

    std::vector<Vec3> nodes{start};
    std::vector<int> parent{-1};
    nodes.reserve(static_cast<std::size_t>(prm.max_nodes));

    while (static_cast<int>(nodes.size()) < prm.max_nodes) {
        const bool to_goal = rng.uniform(0.0, 1.0) < prm.goal_bias;
        const Vec3 sample = to_goal ? target
                                    : Vec3{rng.uniform(lo.x, hi.x), rng.uniform(lo.y, hi.y),
                                           rng.uniform(lo.z, hi.z)};
        // nearest node
        int best = 0;
        double bd = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < nodes.size(); ++k) {
            const double d = (nodes[k] - sample).squared_norm();
            if (d < bd) {
                bd = d;
                best = static_cast<int>(k);
            }
        }
        const Vec3& from = nodes[static_cast<std::size_t>(best)];
        const Vec3 diff = sample - from;
        if (diff.norm() < 1e-12) continue;
        const Vec3 nxt = from + diff.normalized() * std::min(prm.step, diff.norm());
        if (!detail::edge_free(from, nxt, obstacles, jammers, prm.clearance)) continue;
        nodes.push_back(nxt);
        parent.push_back(best);
        if (distance(nxt, target) <= prm.goal_radius) {
            std::vector<Vec3> path;
            for (int k = static_cast<int>(nodes.size()) - 1; k >= 0;
                 k = parent[static_cast<std::size_t>(k)])
                path.push_back(nodes[static_cast<std::size_t>(k)]);
            std::reverse(path.begin(), path.end());
            return path;
        }
    }
    throw NoPathFound("rrt_plan: node budget exhausted");
}

inline double path_length(std::span<const Vec3> path) {
    double len = 0.0;
    for (std::size_t i = 1; i < path.size(); ++i) len += distance(path[i - 1], path[i]);
    return len;
}

}  // namespace mtt::apf
