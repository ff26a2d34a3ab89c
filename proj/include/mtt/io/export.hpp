#pragma once

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>

#include "mtt/core/matrix.hpp"
#include "mtt/mfg/mfg.hpp"
#include "mtt/sim/compare.hpp"
#include "mtt/sim/episode.hpp"

namespace mtt::io {

inline void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path.string());
    f << content;
}

inline std::string hash_hex(std::uint64_t h) {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

inline std::string matrix_csv(const Matrix& m, std::uint64_t config_hash,
                              const std::string& what) {
    std::ostringstream os;
    os << "# " << what << ", config_hash=" << hash_hex(config_hash) << "\n";
    os << std::setprecision(17);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) os << ",";
            os << m(r, c);
        }
        os << "\n";
    }
    return os.str();
}

// One file each for m, u, p; filenames carry the slot index and config hash.
inline void export_mfg_solution(const mfg::MfgSolution& sol, const std::filesystem::path& outdir,
                                int slot, std::uint64_t config_hash) {
    const std::string tag = "slot" + std::to_string(slot) + "_" + hash_hex(config_hash);
    write_file(outdir / ("mfg_m_" + tag + ".csv"), matrix_csv(sol.m, config_hash, "mean field m(t,e)"));
    write_file(outdir / ("mfg_u_" + tag + ".csv"), matrix_csv(sol.u, config_hash, "value u(t,e)"));
    write_file(outdir / ("mfg_p_" + tag + ".csv"), matrix_csv(sol.p, config_hash, "policy p(t,e) [W]"));
}

inline std::string trajectory_csv(const sim::EpisodeLog& log) {
    std::ostringstream os;
    os << "# config_hash=" << hash_hex(log.config_hash) << ", seed=" << log.seed << "\n";
    os << "t,uav_id,x,y,z,f_tot,turning_angle,used_external,used_jitter_fix\n";
    os << std::setprecision(17);
    for (const auto& r : log.uav_records)
        os << r.t << "," << r.uav << "," << r.pos.x << "," << r.pos.y << "," << r.pos.z << ","
           << r.f_tot_norm << "," << r.turning_angle << "," << int(r.used_external) << ","
           << int(r.used_jitter_fix) << "\n";
    return os.str();
}

inline std::string radio_csv(const sim::EpisodeLog& log) {
    std::ostringstream os;
    os << "# config_hash=" << hash_hex(log.config_hash) << ", seed=" << log.seed << "\n";
    os << "t,uav_id,power,energy,i_u,i_j,sinr,label,assigned_target,arrived\n";
    os << std::setprecision(17);
    for (const auto& r : log.uav_records)
        os << r.t << "," << r.uav << "," << r.power << "," << r.energy << "," << r.i_u << ","
           << r.i_j << "," << r.sinr << "," << r.label << "," << r.assigned_target << ","
           << int(r.arrived) << "\n";
    return os.str();
}

inline std::string subslot_csv(const sim::EpisodeLog& log) {
    std::ostringstream os;
    os << "# config_hash=" << hash_hex(log.config_hash) << ", seed=" << log.seed << "\n";
    os << "t,mean_interference,mean_sinr,i_bar_u,i_bar_j,n_arrived\n";
    os << std::setprecision(17);
    for (const auto& r : log.subslots)
        os << r.t << "," << r.mean_interference << "," << r.mean_sinr << "," << r.i_bar_u << ","
           << r.i_bar_j << "," << r.n_arrived << "\n";
    return os.str();
}

inline std::string triggers_csv(const sim::EpisodeLog& log) {
    std::ostringstream os;
    os << "# config_hash=" << hash_hex(log.config_hash) << ", seed=" << log.seed << "\n";
    os << "t,kind,value\n";
    for (const auto& tr : log.triggers) os << tr.t << "," << tr.kind << "," << tr.value << "\n";
    return os.str();
}

inline std::string slots_csv(const sim::EpisodeLog& log) {
    std::ostringstream os;
    os << "# config_hash=" << hash_hex(log.config_hash) << ", seed=" << log.seed << "\n";
    os << "slot,i_bar_u,i_bar_j,k_rep,k_jam,mfg_iterations,mfg_converged\n";
    os << std::setprecision(17);
    for (const auto& r : log.slots)
        os << r.slot << "," << r.i_bar_u << "," << r.i_bar_j << "," << r.k_rep << "," << r.k_jam
           << "," << r.mfg_iterations << "," << int(r.mfg_converged) << "\n";
    return os.str();
}

inline std::string violations_csv(const sim::EpisodeLog& log) {
    std::ostringstream os;
    os << "# config_hash=" << hash_hex(log.config_hash) << ", seed=" << log.seed << "\n";
    os << "t,constraint,entity_a,entity_b,value\n";
    for (const auto& v : log.violations)
        os << v.t << "," << v.constraint << "," << v.entity_a << "," << v.entity_b << ","
           << v.value << "\n";
    return os.str();
}

inline std::string summary_json(const sim::EpisodeLog& log) {
    const auto& s = log.summary;
    std::ostringstream os;
    os << std::setprecision(17);
    os << "{\n"
       << "  \"config_hash\": \"" << hash_hex(log.config_hash) << "\",\n"
       << "  \"seed\": " << log.seed << ",\n"
       << "  \"steps_to_all_arrived\": " << s.steps_to_all_arrived << ",\n"
       << "  \"horizon_exhausted\": " << (s.horizon_exhausted ? "true" : "false") << ",\n"
       << "  \"mean_switches\": " << s.mean_switches << ",\n"
       << "  \"mean_interference_w\": " << s.mean_interference << ",\n"
       << "  \"mean_sinr\": " << s.mean_sinr << ",\n"
       << "  \"sinr_ok_fraction\": " << s.sinr_ok_fraction << ",\n"
       << "  \"reassociations\": " << s.reassociations << ",\n"
       << "  \"replans\": " << s.replans << ",\n"
       << "  \"violations\": " << s.violations << "\n"
       << "}\n";
    return os.str();
}

inline void export_episode(const sim::EpisodeLog& log, const std::filesystem::path& outdir) {
    std::filesystem::create_directories(outdir);
    write_file(outdir / "trajectory.csv", trajectory_csv(log));
    write_file(outdir / "radio.csv", radio_csv(log));
    write_file(outdir / "subslots.csv", subslot_csv(log));
    write_file(outdir / "triggers.csv", triggers_csv(log));
    write_file(outdir / "slots.csv", slots_csv(log));
    write_file(outdir / "violations.csv", violations_csv(log));
    write_file(outdir / "summary.json", summary_json(log));
}

inline std::string comparison_csv(const sim::ComparisonReport& r) {
    std::ostringstream os;
    os << "# config_hash=" << hash_hex(r.config_hash) << "\n";
    os << "policy,n_seeds,steps_mean,steps_std,switches_mean,switches_std,"
          "interference_mean_w,interference_std_w,sinr_mean,sinr_std,sinr_ok_mean,"
          "arrived_all,violations\n";
    os << std::setprecision(17);
    for (const auto& row : r.rows)
        os << row.name << "," << row.n_seeds << "," << row.steps.mean << "," << row.steps.stdev
           << "," << row.switches.mean << "," << row.switches.stdev << ","
           << row.interference.mean << "," << row.interference.stdev << "," << row.sinr.mean
           << "," << row.sinr.stdev << "," << row.sinr_ok.mean << "," << row.arrived_all << ","
           << row.violations << "\n";
    return os.str();
}

inline std::string comparison_table(const sim::ComparisonReport& r) {
    std::ostringstream os;
    os << "policy                         steps          switches      interference [W]   "
          "sinr_ok\n";
    for (const auto& row : r.rows) {
        os << std::left << std::setw(30) << row.name << std::right;
        std::ostringstream a, b, c;
        a << std::fixed << std::setprecision(1) << row.steps.mean << " +- " << row.steps.stdev;
        b << std::fixed << std::setprecision(2) << row.switches.mean << " +- "
          << row.switches.stdev;
        c << std::scientific << std::setprecision(3) << row.interference.mean;
        os << std::setw(15) << a.str() << std::setw(14) << b.str() << std::setw(19) << c.str()
           << std::setw(10) << std::fixed << std::setprecision(3) << row.sinr_ok.mean << "\n";
    }
    return os.str();
}

}  // namespace mtt::io
