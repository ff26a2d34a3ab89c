#pragma once

#include <algorithm>
#include <limits>
#include <vector>

#include "mtt/assoc/partition.hpp"
#include "mtt/core/errors.hpp"
#include "mtt/core/vec3.hpp"

namespace mtt::assoc {

// Sum of squared member-to-centroid distances.
inline double sse(const std::vector<Vec3>& positions, const Partition& p) {
    double s = 0.0;
    for (std::size_t i = 0; i < positions.size(); ++i)
        s += (positions[i] - p.centroids[static_cast<std::size_t>(p.labels[i])]).squared_norm();
    return s;
}

// Mean silhouette coefficient over all UAVs; singletons score 0.
inline double silhouette(const std::vector<Vec3>& positions, const Partition& p) {
    const int m = p.n_clusters();
    if (m < 2) throw SingleCluster("silhouette: need at least 2 sub-swarms");
    const std::size_t n = positions.size();
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const int mi = p.labels[i];
        if (p.sizes[static_cast<std::size_t>(mi)] < 2) continue;  // SC(i) = 0
        double a = 0.0;
        std::vector<double> sum(static_cast<std::size_t>(m), 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            sum[static_cast<std::size_t>(p.labels[j])] += distance(positions[i], positions[j]);
        }
        a = sum[static_cast<std::size_t>(mi)] / (p.sizes[static_cast<std::size_t>(mi)] - 1);
        double b = std::numeric_limits<double>::infinity();
        for (int k = 0; k < m; ++k) {
            if (k == mi || p.sizes[static_cast<std::size_t>(k)] == 0) continue;
            b = std::min(b, sum[static_cast<std::size_t>(k)] / p.sizes[static_cast<std::size_t>(k)]);
        }
        total += (b - a) / std::max(a, b);
    }
    return total / static_cast<double>(n);
}

}  // namespace mtt::assoc
