#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>

#include "mtt/core/errors.hpp"

namespace mtt::sim {

enum class Policy { DynamicCollaboration, NoJammerCooperative, SctApfFractional, SctApfUniform };
enum class Association { Ceta, Kmeans, Fcm };
enum class Planner { Jssct, TraditionalApf, Rrt };

inline Policy policy_from_string(const std::string& s) {
    if (s == "dynamic-collaboration") return Policy::DynamicCollaboration;
    if (s == "no-jammer-cooperative") return Policy::NoJammerCooperative;
    if (s == "sct-apf+fractional") return Policy::SctApfFractional;
    if (s == "sct-apf+uniform") return Policy::SctApfUniform;
    throw InvalidConfig("collab.policy: unknown policy '" + s + "'");
}
inline std::string to_string(Policy p) {
    switch (p) {
        case Policy::DynamicCollaboration: return "dynamic-collaboration";
        case Policy::NoJammerCooperative: return "no-jammer-cooperative";
        case Policy::SctApfFractional: return "sct-apf+fractional";
        default: return "sct-apf+uniform";
    }
}
inline Association association_from_string(const std::string& s) {
    if (s == "ceta") return Association::Ceta;
    if (s == "kmeans") return Association::Kmeans;
    if (s == "fcm") return Association::Fcm;
    throw InvalidConfig("collab.association: unknown association '" + s + "'");
}
inline Planner planner_from_string(const std::string& s) {
    if (s == "jssct") return Planner::Jssct;
    if (s == "traditional-apf") return Planner::TraditionalApf;
    if (s == "rrt") return Planner::Rrt;
    throw InvalidConfig("collab.planner: unknown planner '" + s + "'");
}

struct CollabConfig {
    double i_th_u = 1e-3;  // interference threshold [W]
    double i_th_j = 1e-3;  // jamming threshold [W]
    Policy policy = Policy::DynamicCollaboration;
    Association association = Association::Ceta;
    Planner planner = Planner::Jssct;
    double fractional_tau = 1.0;
    double fractional_p0 = 1e-5;

    bool jam_aware() const { return policy == Policy::DynamicCollaboration; }

    void validate() const {
        if (!(i_th_u > 0.0) || !(i_th_j > 0.0))
            throw InvalidConfig("collab thresholds must be > 0");
    }
};

// Arithmetic mean of the per-subslot mean fields over one slot.
inline std::pair<double, double> slot_average_interference(std::span<const double> i_u,
                                                           std::span<const double> i_j,
                                                           int subslots_per_slot) {
    if (static_cast<int>(i_u.size()) != subslots_per_slot ||
        static_cast<int>(i_j.size()) != subslots_per_slot)
        throw InvalidConfig("slot_average_interference: expected exactly Y records");
    double su = 0.0, sj = 0.0;
    for (double v : i_u) su += v;
    for (double v : i_j) sj += v;
    return {su / subslots_per_slot, sj / subslots_per_slot};
}

struct GainAdaptation {
    double k_rep;
    double k_jam;
    bool replan;
};

// Each gain grows by its relative threshold excess; untouched otherwise.
inline GainAdaptation adapt_gains(double k_rep, double k_jam, double i_bar_u, double i_bar_j,
                                  double i_th_u, double i_th_j) {
    if (!(i_th_u > 0.0) || !(i_th_j > 0.0))
        throw InvalidConfig("adapt_gains: thresholds must be > 0");
    GainAdaptation out{k_rep, k_jam, false};
    if (i_bar_u > i_th_u) {
        out.k_rep += (i_bar_u - i_th_u) / i_th_u;
        out.replan = true;
    }
    if (i_bar_j > i_th_j) {
        out.k_jam += (i_bar_j - i_th_j) / i_th_j;
        out.replan = true;
    }
    return out;
}

}  // namespace mtt::sim
