#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "mtt/core/errors.hpp"
#include "mtt/core/vec3.hpp"

namespace mtt::assoc {

struct DensityStats {
    std::vector<int> rho;       // local densities
    std::vector<double> delta;  // distance to nearest denser UAV
    std::vector<double> eta;    // rho * delta
    double d_c = 0.0;           // cutoff distance
};

// Cutoff distance: the value at the first 2% of all pairwise distances, ascending.
inline double cutoff_distance(const std::vector<Vec3>& positions) {
    const std::size_t n = positions.size();
    if (n < 2) throw TooFewUavs("cutoff_distance: need at least 2 UAVs");
    std::vector<double> d;
    d.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) d.push_back(distance(positions[i], positions[j]));
    std::sort(d.begin(), d.end());
    const std::size_t idx =
        static_cast<std::size_t>(std::ceil(0.02 * static_cast<double>(d.size())));
    return d[idx == 0 ? 0 : idx - 1];
}

// rho_i = #{ j != i : d(i,j) < d_c }, strict inequality.
inline std::vector<int> local_densities(const std::vector<Vec3>& positions, double d_c) {
    const std::size_t n = positions.size();
    std::vector<int> rho(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (distance(positions[i], positions[j]) < d_c) {
                ++rho[i];
                ++rho[j];
            }
    return rho;
}

// delta_i = min distance to a UAV earlier in the (rho desc, index asc) order;
// the first in that order takes its max distance to all others.
inline std::vector<double> higher_density_distances(const std::vector<Vec3>& positions,
                                                    const std::vector<int>& rho) {
    const std::size_t n = positions.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (rho[a] != rho[b]) return rho[a] > rho[b];
        return a < b;
    });
    std::vector<double> delta(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t i = order[k];
        if (k == 0) {
            double mx = 0.0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) mx = std::max(mx, distance(positions[i], positions[j]));
            delta[i] = mx;
        } else {
            double mn = std::numeric_limits<double>::infinity();
            for (std::size_t p = 0; p < k; ++p)
                mn = std::min(mn, distance(positions[i], positions[order[p]]));
            delta[i] = mn;
        }
    }
    return delta;
}

inline DensityStats density_stats(const std::vector<Vec3>& positions) {
    DensityStats s;
    s.d_c = cutoff_distance(positions);
    s.rho = local_densities(positions, s.d_c);
    s.delta = higher_density_distances(positions, s.rho);
    s.eta.resize(positions.size());
    for (std::size_t i = 0; i < positions.size(); ++i) s.eta[i] = s.rho[i] * s.delta[i];
    return s;
}

}  // namespace mtt::assoc
