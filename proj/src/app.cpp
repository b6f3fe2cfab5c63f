#include "lrpulse/app.hpp"

#include <fstream>
#include <iostream>
#include <set>

#include "lrpulse/errors.hpp"
#include "lrpulse/invariant.hpp"
#include "lrpulse/io.hpp"
#include "lrpulse/units.hpp"

namespace lrpulse {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const std::set<std::string>& known_keys() {
    static const std::set<std::string> keys = {
        "protocol",     "epsilon",    "delta",          "tf_us",
        "steps",        "sample_stride", "pulse_samples", "initial",
        "detuning_p",   "detuning_3", "step_tolerance", "out",
        "format",
    };
    return keys;
}

double get_number(const json& j, const std::string& key) {
    if (!j.at(key).is_number()) {
        throw ConfigError("config key '" + key + "' must be a number");
    }
    return j.at(key).get<double>();
}

int get_integer(const json& j, const std::string& key) {
    if (!j.at(key).is_number_integer()) {
        throw ConfigError("config key '" + key + "' must be an integer");
    }
    return j.at(key).get<int>();
}

std::string get_string(const json& j, const std::string& key) {
    if (!j.at(key).is_string()) {
        throw ConfigError("config key '" + key + "' must be a string");
    }
    return j.at(key).get<std::string>();
}

} // namespace

RunConfig RunConfig::from_json(const json& j) {
    if (!j.is_object()) {
        throw ConfigError("config must be a flat JSON object");
    }
    for (const auto& item : j.items()) {
        if (known_keys().count(item.key()) == 0) {
            throw ConfigError("unknown config key '" + item.key() + "'");
        }
    }

    RunConfig c;
    if (j.contains("protocol")) c.protocol = get_integer(j, "protocol");
    if (j.contains("epsilon")) c.epsilon = get_number(j, "epsilon");
    if (j.contains("delta")) c.delta = get_number(j, "delta");
    if (j.contains("tf_us")) c.tf_us = get_number(j, "tf_us");
    if (j.contains("steps")) c.steps = get_integer(j, "steps");
    if (j.contains("sample_stride")) c.sample_stride = get_integer(j, "sample_stride");
    if (j.contains("pulse_samples")) c.pulse_samples = get_integer(j, "pulse_samples");
    if (j.contains("initial")) c.initial = get_string(j, "initial");
    if (j.contains("detuning_p")) c.detuning_p = get_number(j, "detuning_p");
    if (j.contains("detuning_3")) c.detuning_3 = get_number(j, "detuning_3");
    if (j.contains("step_tolerance")) c.step_tolerance = get_number(j, "step_tolerance");
    if (j.contains("out")) c.out = get_string(j, "out");
    if (j.contains("format")) c.format = get_string(j, "format");
    return c;
}

RunConfig RunConfig::from_file(const fs::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file " + path.string());
    }
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ConfigError("config parse error in " + path.string() + ": " + e.what());
    }
    return from_json(j);
}

json RunConfig::to_json() const {
    json j{
        {"protocol", protocol},
        {"epsilon", epsilon},
        {"tf_us", tf_us},
        {"steps", steps},
        {"sample_stride", sample_stride},
        {"pulse_samples", pulse_samples},
        {"detuning_p", detuning_p},
        {"detuning_3", detuning_3},
        {"step_tolerance", step_tolerance},
        {"out", out},
        {"format", format},
    };
    if (delta) j["delta"] = *delta;
    // Echo the resolved initial-state choice, never the empty default.
    const bool bare1 = initial.empty() ? protocol == 3 : initial == "bare1";
    j["initial"] = bare1 ? "bare1" : "mode0";
    return j;
}

ProtocolSpec RunConfig::protocol_spec() const {
    ProtocolSpec spec;
    switch (protocol) {
        case 1: spec.kind = ProtocolKind::Protocol1; break;
        case 2: spec.kind = ProtocolKind::Protocol2; break;
        case 3: spec.kind = ProtocolKind::Protocol3; break;
        default:
            throw ConfigError("protocol must be 1, 2, or 3");
    }
    spec.epsilon = epsilon;
    spec.t_f = tf_us;
    spec.delta = delta;

    if (initial.empty()) {
        spec.initial_state = spec.kind == ProtocolKind::Protocol3
                                 ? InitialState::Bare1
                                 : InitialState::InvariantMode0;
    } else if (initial == "mode0") {
        spec.initial_state = InitialState::InvariantMode0;
    } else if (initial == "bare1") {
        spec.initial_state = InitialState::Bare1;
    } else {
        throw ConfigError("initial must be 'mode0' or 'bare1'");
    }
    spec.validate();
    return spec;
}

RunSetup RunConfig::run_setup() const {
    RunSetup setup;
    setup.protocol = protocol_spec();
    setup.delta_p = detuning_p;
    setup.delta_3 = detuning_3;
    setup.n_steps = steps;
    setup.sample_stride = sample_stride;
    return setup;
}

namespace {

void check_format(const RunConfig& config) {
    if (config.format != "csv" && config.format != "json" && config.format != "both") {
        throw ConfigError("format must be 'csv', 'json', or 'both'");
    }
}

fs::path prepare_out_dir(const RunConfig& config) {
    fs::path dir(config.out);
    fs::create_directories(dir);
    return dir;
}

} // namespace

int cmd_design(const RunConfig& config) {
    check_format(config);
    const ProtocolSpec spec = config.protocol_spec();
    const fs::path dir = prepare_out_dir(config);

    const DesignResult d = design(spec);
    const BoundaryReport report = validate_boundary_conditions(d.angles, spec);

    write_text_file(dir / "pulses.csv", pulses_csv(d.pulses, config.pulse_samples));

    json report_json = boundary_report_json(report);
    report_json["config"] = config.to_json();
    write_text_file(dir / "boundary_report.json", report_json.dump(2) + "\n");

    if (!report.all_pass()) {
        std::cerr << "boundary conditions failed: " << report.failures() << "\n";
        return 1;
    }
    return 0;
}

int cmd_simulate(const RunConfig& config) {
    check_format(config);
    const RunSetup setup = config.run_setup();
    const fs::path dir = prepare_out_dir(config);

    const DesignResult d = design(setup.protocol);
    const PulseSchedule pulses = (setup.delta_p != 0.0 || setup.delta_3 != 0.0)
                                     ? d.pulses.with_detunings(setup.delta_p, setup.delta_3)
                                     : d.pulses;
    const TimeGrid grid(setup.n_steps, setup.protocol.t_f, setup.sample_stride);

    const double deviation = convergence_check(pulses, d.initial_state, grid);
    if (deviation > config.step_tolerance) {
        throw StepSizeError("step-halving deviation " + std::to_string(deviation) +
                            " exceeds step_tolerance; increase steps");
    }
    const Trajectory traj = propagate(pulses, d.initial_state, grid);
    const RunMetrics metrics = compute_metrics(pulses, traj);

    if (config.wants_csv()) {
        write_text_file(dir / "trajectory.csv", trajectory_csv(traj));
    }
    json out{{"config", config.to_json()},
             {"metrics", metrics_json(metrics)},
             {"convergence_estimate", deviation}};
    write_text_file(dir / "metrics.json", out.dump(2) + "\n");
    return 0;
}

int cmd_sweep(const RunConfig& config, const SweepRequest& request) {
    check_format(config);
    const auto axis = sweep_axis_from_string(request.axis);
    if (!axis) {
        throw ConfigError("unknown sweep axis '" + request.axis + "'");
    }
    if (request.points < 2) {
        throw ConfigError("sweep needs at least 2 points");
    }
    // The base protocol parameters are validated per-row: the axis value
    // replaces one of them, so the template itself may be incomplete
    // only in the swept field.
    RunSetup base;
    base.delta_p = config.detuning_p;
    base.delta_3 = config.detuning_3;
    base.n_steps = config.steps;
    base.sample_stride = config.sample_stride;
    {
        RunConfig tmpl = config;
        if (*axis == SweepAxis::Delta && !tmpl.delta) {
            tmpl.delta = request.min; // placeholder, replaced per row
        }
        base.protocol = tmpl.protocol_spec();
    }

    const std::vector<double> values = linspace(request.min, request.max, request.points);
    const SweepTable table = sweep(base, *axis, values);

    const fs::path dir = prepare_out_dir(config);
    if (config.wants_csv()) {
        write_text_file(dir / "sweep.csv", sweep_csv(table));
    }
    if (config.wants_json()) {
        json out{{"config", config.to_json()},
                 {"axis", request.axis},
                 {"min", request.min},
                 {"max", request.max},
                 {"points", request.points},
                 {"table", sweep_json(table)}};
        write_text_file(dir / "sweep.json", out.dump(2) + "\n");
    }
    if (table.any_failed()) {
        std::cerr << "sweep finished with failed rows\n";
        return 2;
    }
    return 0;
}

namespace {

RunConfig figure_config(const RunConfig& base, int protocol, double epsilon,
                        std::optional<double> delta, const std::string& initial) {
    RunConfig c = base;
    c.protocol = protocol;
    c.epsilon = epsilon;
    c.delta = delta;
    c.tf_us = 4.0;
    c.initial = initial;
    c.detuning_p = 0.0;
    c.detuning_3 = 0.0;
    return c;
}

void write_figure_trajectory(const fs::path& dir, const std::string& stem,
                             const RunConfig& config) {
    const RunResult result = run(config.run_setup());
    write_text_file(dir / (stem + "_populations.csv"), trajectory_csv(result.trajectory));
    json meta{{"config", config.to_json()}, {"metrics", metrics_json(result.metrics)}};
    write_text_file(dir / (stem + "_metrics.json"), meta.dump(2) + "\n");
}

void write_figure_pulses(const fs::path& dir, const std::string& stem,
                         const RunConfig& config) {
    const DesignResult d = design(config.protocol_spec());
    write_text_file(dir / (stem + "_pulses.csv"), pulses_csv(d.pulses, config.pulse_samples));
}

} // namespace

int cmd_reproduce_figure(int figure, const RunConfig& base) {
    check_format(base);
    const fs::path dir = prepare_out_dir(base);

    switch (figure) {
        case 2: {
            // Protocol 1 at epsilon = 0.2, t_f = 4 us: pulse envelopes and
            // the populations along the invariant mode.
            const RunConfig c = figure_config(base, 1, 0.2, std::nullopt, "mode0");
            write_figure_pulses(dir, "fig2", c);
            write_figure_trajectory(dir, "fig2", c);
            return 0;
        }
        case 3: {
            // Protocol 2 at epsilon = 0.2, delta = pi/4.
            const RunConfig c = figure_config(base, 2, 0.2, 0.25 * kPi, "mode0");
            write_figure_pulses(dir, "fig3", c);
            write_figure_trajectory(dir, "fig3", c);
            return 0;
        }
        case 4: {
            // Averaged Rabi frequency and energy cost vs delta for three
            // endpoint angles.
            bool failed = false;
            for (const double eps : {0.2, 0.02, 0.002}) {
                RunConfig c = figure_config(base, 2, eps, 0.25 * kPi, "mode0");
                RunSetup setup = c.run_setup();
                const SweepTable table =
                    sweep(setup, SweepAxis::Delta, linspace(0.05, 0.5 * kPi, 30));
                const std::string stem = "fig4_eps" + format_double(eps);
                if (c.wants_csv()) {
                    write_text_file(dir / (stem + ".csv"), sweep_csv(table));
                }
                if (c.wants_json()) {
                    json out{{"config", c.to_json()}, {"table", sweep_json(table)}};
                    write_text_file(dir / (stem + ".json"), out.dump(2) + "\n");
                }
                failed = failed || table.any_failed();
            }
            return failed ? 2 : 0;
        }
        case 5: {
            // Transfer fidelity from the bare state |1> vs epsilon for the
            // Protocol-1 and Protocol-2 pulses, with cos(epsilon) shown for
            // the invariant-mode start.
            const std::vector<double> eps_grid = linspace(0.05, 0.4, 50);
            std::string csv =
                "epsilon,f_protocol1_bare1,f_protocol2_bare1,f_mode0_cos_eps,"
                "f_protocol1_closed\n";
            json rows = json::array();
            for (const double eps : eps_grid) {
                RunConfig c1 = figure_config(base, 1, eps, std::nullopt, "bare1");
                RunConfig c2 = figure_config(base, 2, eps, 0.25 * kPi, "bare1");
                const double f1 = run(c1.run_setup()).metrics.fidelity_mag;
                const double f2 = run(c2.run_setup()).metrics.fidelity_mag;
                const double f_mode0 = std::cos(eps);
                const double f_closed = protocol3_fidelity_closed(eps);
                csv += format_double(eps) + ',' + format_double(f1) + ',' +
                       format_double(f2) + ',' + format_double(f_mode0) + ',' +
                       format_double(f_closed) + '\n';
                rows.push_back(json{{"epsilon", eps},
                                    {"f_protocol1_bare1", f1},
                                    {"f_protocol2_bare1", f2},
                                    {"f_mode0_cos_eps", f_mode0},
                                    {"f_protocol1_closed", f_closed}});
            }
            if (base.wants_csv()) {
                write_text_file(dir / "fig5_fidelity.csv", csv);
            }
            if (base.wants_json()) {
                write_text_file(dir / "fig5_fidelity.json",
                                json{{"rows", rows}}.dump(2) + "\n");
            }
            return 0;
        }
        case 6: {
            // Perfect multi-mode transfer from |1> at epsilon = arcsin(1/4).
            const RunConfig c =
                figure_config(base, 3, perfect_epsilon(1), std::nullopt, "bare1");
            write_figure_trajectory(dir, "fig6", c);
            return 0;
        }
        default:
            throw ConfigError("figure must be one of 2, 3, 4, 5, 6");
    }
}

int dispatch(const std::function<int()>& command) {
    try {
        return command();
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace lrpulse
