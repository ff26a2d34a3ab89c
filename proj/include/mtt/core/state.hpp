#pragma once

#include <vector>

#include "mtt/core/scenario.hpp"
#include "mtt/core/vec3.hpp"

namespace mtt {

// Mutable per-subslot swarm state. Exactly one episode driver mutates it at a time.
struct SwarmState {
    int t = 0;                         // subslot index
    std::vector<Vec3> positions;       // X_i(t)
    std::vector<Vec3> prev_forces;     // turning-angle memory (direction actually flown)
    std::vector<double> energies;      // e_i(t) [J]
    std::vector<double> powers;        // p_i^U(t) [W]
    std::vector<int> labels;           // sub-swarm index in [0, M)
    std::vector<int> assigned_target;  // target index in [0, M)

    static SwarmState initial(const Scenario& s, double e0, double p0) {
        SwarmState st;
        st.t = 0;
        st.positions = s.uav_start;
        st.prev_forces.assign(s.uav_start.size(), Vec3{});
        st.energies.assign(s.uav_start.size(), e0);
        st.powers.assign(s.uav_start.size(), p0);
        st.labels.assign(s.uav_start.size(), 0);
        st.assigned_target.assign(s.uav_start.size(), 0);
        return st;
    }

    int n() const { return static_cast<int>(positions.size()); }
};

}  // namespace mtt
