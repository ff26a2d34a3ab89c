#pragma once

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "mtt/assoc/density.hpp"
#include "mtt/core/errors.hpp"
#include "mtt/core/vec3.hpp"

namespace mtt::assoc {

struct Partition {
    std::vector<int> labels;      // N sub-swarm indices in [0, M)
    std::vector<int> centers;     // M UAV indices (density-peak centers; -1 for baselines)
    std::vector<Vec3> centroids;  // M centroids r_m
    std::vector<int> sizes;       // M member counts Phi_m
    std::vector<int> target_of;   // sub-swarm -> target (permutation of [0, M))

    int n_clusters() const { return static_cast<int>(sizes.size()); }
    int assigned_target_of_uav(int i) const {
        return target_of[static_cast<std::size_t>(labels[static_cast<std::size_t>(i)])];
    }
};

inline std::vector<Vec3> centroids(const std::vector<Vec3>& positions,
                                   const std::vector<int>& labels, int m) {
    std::vector<Vec3> c(static_cast<std::size_t>(m));
    std::vector<int> cnt(static_cast<std::size_t>(m), 0);
    for (std::size_t i = 0; i < positions.size(); ++i) {
        c[static_cast<std::size_t>(labels[i])] += positions[i];
        ++cnt[static_cast<std::size_t>(labels[i])];
    }
    for (int k = 0; k < m; ++k) {
        if (cnt[static_cast<std::size_t>(k)] == 0)
            throw EmptySubSwarm("centroids: empty sub-swarm " + std::to_string(k));
        c[static_cast<std::size_t>(k)] =
            c[static_cast<std::size_t>(k)] / cnt[static_cast<std::size_t>(k)];
    }
    return c;
}

// One-pass CETA sub-swarm division: the M largest-eta UAVs are centers (ties by
// index), every other UAV joins its nearest center. assignment_passes is always 1.
inline Partition ceta_partition(const std::vector<Vec3>& positions, int m_clusters, double d_c,
                                int* assignment_passes = nullptr) {
    const int n = static_cast<int>(positions.size());
    if (n < 2 || m_clusters > n) throw TooFewUavs("ceta_partition: need M <= N and N >= 2");
    std::vector<int> rho = local_densities(positions, d_c);
    std::vector<double> delta = higher_density_distances(positions, rho);
    std::vector<double> eta(positions.size());
    for (std::size_t i = 0; i < positions.size(); ++i) eta[i] = rho[i] * delta[i];

    std::vector<int> order(positions.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (eta[static_cast<std::size_t>(a)] != eta[static_cast<std::size_t>(b)])
            return eta[static_cast<std::size_t>(a)] > eta[static_cast<std::size_t>(b)];
        return a < b;
    });

    Partition p;
    p.centers.assign(order.begin(), order.begin() + m_clusters);
    p.labels.assign(positions.size(), -1);
    for (int k = 0; k < m_clusters; ++k)
        p.labels[static_cast<std::size_t>(p.centers[static_cast<std::size_t>(k)])] = k;

    // exactly one assignment pass
    for (int i = 0; i < n; ++i) {
        if (p.labels[static_cast<std::size_t>(i)] >= 0) continue;
        double best = std::numeric_limits<double>::infinity();
        int bk = 0;
        for (int k = 0; k < m_clusters; ++k) {
            const double d = distance(positions[static_cast<std::size_t>(i)],
                                      positions[static_cast<std::size_t>(
                                          p.centers[static_cast<std::size_t>(k)])]);
            if (d < best) {
                best = d;
                bk = k;
            }
        }
        p.labels[static_cast<std::size_t>(i)] = bk;
    }
    if (assignment_passes) *assignment_passes = 1;

    p.sizes.assign(static_cast<std::size_t>(m_clusters), 0);
    for (int l : p.labels) ++p.sizes[static_cast<std::size_t>(l)];
    p.centroids = centroids(positions, p.labels, m_clusters);
    p.target_of.clear();
    return p;
}

// Greedy globally-closest-pair matching of sub-swarm centroids to targets.
// Ties break by (sub-swarm index, target index).
inline std::vector<int> match_targets(const std::vector<Vec3>& cents,
                                      const std::vector<Vec3>& target_positions) {
    const int m = static_cast<int>(cents.size());
    std::vector<int> target_of(static_cast<std::size_t>(m), -1);
    std::vector<bool> sub_done(static_cast<std::size_t>(m), false);
    std::vector<bool> tgt_done(static_cast<std::size_t>(m), false);
    for (int round = 0; round < m; ++round) {
        double best = std::numeric_limits<double>::infinity();
        int bs = -1, bt = -1;
        for (int s = 0; s < m; ++s) {
            if (sub_done[static_cast<std::size_t>(s)]) continue;
            for (int t = 0; t < m; ++t) {
                if (tgt_done[static_cast<std::size_t>(t)]) continue;
                const double d = distance(cents[static_cast<std::size_t>(s)],
                                          target_positions[static_cast<std::size_t>(t)]);
                if (d < best) {
                    best = d;
                    bs = s;
                    bt = t;
                }
            }
        }
        target_of[static_cast<std::size_t>(bs)] = bt;
        sub_done[static_cast<std::size_t>(bs)] = true;
        tgt_done[static_cast<std::size_t>(bt)] = true;
    }
    return target_of;
}

// True iff some sub-swarm's matched target is no longer its nearest target.
inline bool reassociation_needed(const Partition& p, const std::vector<Vec3>& cents,
                                 const std::vector<Vec3>& target_positions) {
    const int m = static_cast<int>(cents.size());
    if (m <= 1) return false;
    for (int b = 0; b < m; ++b) {
        const double matched = distance(
            cents[static_cast<std::size_t>(b)],
            target_positions[static_cast<std::size_t>(p.target_of[static_cast<std::size_t>(b)])]);
        for (int a = 0; a < m; ++a) {
            if (distance(cents[static_cast<std::size_t>(b)],
                         target_positions[static_cast<std::size_t>(a)]) < matched)
                return true;
        }
    }
    return false;
}

// One line per UAV: uav_id,label,assigned_target
inline std::string partition_to_csv(const Partition& p) {
    std::ostringstream os;
    os << "uav_id,label,assigned_target\n";
    for (std::size_t i = 0; i < p.labels.size(); ++i) {
        const int lbl = p.labels[i];
        const int tgt = p.target_of.empty() ? -1 : p.target_of[static_cast<std::size_t>(lbl)];
        os << i << "," << lbl << "," << tgt << "\n";
    }
    return os.str();
}

}  // namespace mtt::assoc
