#include "lrpulse/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "lrpulse/errors.hpp"
#include "lrpulse/units.hpp"

namespace lrpulse {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error("cannot open " + path.string() + " for writing");
    }
    out << content;
    if (!out) {
        throw Error("failed writing " + path.string());
    }
}

std::string pulses_csv(const PulseSchedule& pulses, int n_samples) {
    if (n_samples < 2) {
        throw ValidationError("pulse export needs at least 2 samples");
    }
    std::string csv = "t_us,omega_p_rad_per_us,omega_s_rad_per_us\n";
    for (int i = 0; i < n_samples; ++i) {
        const double t = pulses.t_f() * static_cast<double>(i) / (n_samples - 1);
        csv += format_double(t);
        csv += ',';
        csv += format_double(pulses.omega_p(t));
        csv += ',';
        csv += format_double(pulses.omega_s(t));
        csv += '\n';
    }
    return csv;
}

std::string trajectory_csv(const Trajectory& trajectory) {
    std::string csv = "t_us,re_c1,im_c1,re_c2,im_c2,re_c3,im_c3,p1,p2,p3\n";
    for (std::size_t i = 0; i < trajectory.times.size(); ++i) {
        const auto& s = trajectory.states[i];
        const auto& p = trajectory.populations[i];
        csv += format_double(trajectory.times[i]);
        for (int k = 0; k < 3; ++k) {
            csv += ',';
            csv += format_double(s(k).real());
            csv += ',';
            csv += format_double(s(k).imag());
        }
        for (int k = 0; k < 3; ++k) {
            csv += ',';
            csv += format_double(p[k]);
        }
        csv += '\n';
    }
    return csv;
}

namespace {

std::string sanitize_csv_field(std::string text) {
    for (char& c : text) {
        if (c == ',' || c == '"' || c == '\n') c = ' ';
    }
    return text;
}

} // namespace

std::string sweep_csv(const SweepTable& table) {
    std::string csv = table.axis +
                      ",fidelity_re,fidelity_im,fidelity_mag"
                      ",avg_rabi_rad_per_us,avg_rabi_2pi_mhz"
                      ",energy_cost_rad_per_us,energy_cost_2pi_mhz"
                      ",peak_p2,peak_rabi_rad_per_us,norm_drift,error\n";
    for (const auto& row : table.rows) {
        csv += format_double(row.value);
        if (row.metrics) {
            const RunMetrics& m = *row.metrics;
            const double cols[] = {m.fidelity.real(),
                                   m.fidelity.imag(),
                                   m.fidelity_mag,
                                   m.avg_rabi,
                                   to_two_pi_mhz(m.avg_rabi),
                                   m.energy_cost,
                                   to_two_pi_mhz(m.energy_cost),
                                   m.peak_p2,
                                   m.peak_rabi,
                                   m.norm_drift};
            for (const double c : cols) {
                csv += ',';
                csv += format_double(c);
            }
            csv += ",\n";
        } else {
            csv += ",,,,,,,,,,," + sanitize_csv_field(row.error) + "\n";
        }
    }
    return csv;
}

nlohmann::json metrics_json(const RunMetrics& m) {
    return nlohmann::json{
        {"fidelity_re", m.fidelity.real()},
        {"fidelity_im", m.fidelity.imag()},
        {"fidelity_mag", m.fidelity_mag},
        {"fidelity_phase_rad", std::arg(m.fidelity)},
        {"avg_rabi_rad_per_us", m.avg_rabi},
        {"avg_rabi_2pi_mhz", to_two_pi_mhz(m.avg_rabi)},
        {"energy_cost_rad_per_us", m.energy_cost},
        {"energy_cost_2pi_mhz", to_two_pi_mhz(m.energy_cost)},
        {"peak_p2", m.peak_p2},
        {"peak_rabi_rad_per_us", m.peak_rabi},
        {"peak_rabi_2pi_mhz", to_two_pi_mhz(m.peak_rabi)},
        {"norm_drift", m.norm_drift},
    };
}

nlohmann::json sweep_json(const SweepTable& table) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : table.rows) {
        nlohmann::json j{{table.axis, row.value}};
        if (row.metrics) {
            j["metrics"] = metrics_json(*row.metrics);
        } else {
            j["error"] = row.error;
        }
        rows.push_back(std::move(j));
    }
    return nlohmann::json{{"axis", table.axis}, {"rows", std::move(rows)}};
}

nlohmann::json boundary_report_json(const BoundaryReport& report) {
    nlohmann::json conditions = nlohmann::json::array();
    for (const auto& c : report.conditions) {
        conditions.push_back(nlohmann::json{{"name", c.name},
                                            {"expected", c.expected},
                                            {"actual", c.actual},
                                            {"residual", c.residual},
                                            {"pass", c.pass}});
    }
    return nlohmann::json{{"tolerance", report.tolerance},
                          {"all_pass", report.all_pass()},
                          {"conditions", std::move(conditions)}};
}

} // namespace lrpulse
