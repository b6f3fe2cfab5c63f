// Command-line front end: design pulses, simulate transfers, run
// parameter sweeps, and regenerate the reference figure data.

#include <CLI11.hpp>

#include <string>

#include "lrpulse/app.hpp"

namespace {

struct CommonOptions {
    std::string config_path;
    int protocol = 1;
    double epsilon = 0.2;
    double delta = 0.0;
    double tf_us = 4.0;
    int steps = lrpulse::kDefaultSteps;
    int sample_stride = lrpulse::kDefaultStride;
    int pulse_samples = 401;
    std::string initial;
    double detuning_p = 0.0;
    double detuning_3 = 0.0;
    double step_tolerance = 1e-6;
    std::string out = ".";
    std::string format = "both";

    CLI::Option* o_protocol = nullptr;
    CLI::Option* o_epsilon = nullptr;
    CLI::Option* o_delta = nullptr;
    CLI::Option* o_tf = nullptr;
    CLI::Option* o_steps = nullptr;
    CLI::Option* o_stride = nullptr;
    CLI::Option* o_pulse_samples = nullptr;
    CLI::Option* o_initial = nullptr;
    CLI::Option* o_detuning_p = nullptr;
    CLI::Option* o_detuning_3 = nullptr;
    CLI::Option* o_step_tolerance = nullptr;
    CLI::Option* o_out = nullptr;
    CLI::Option* o_format = nullptr;

    void attach(CLI::App* cmd) {
        cmd->add_option("--config", config_path,
                        "flat JSON config file; flags override its keys");
        o_protocol = cmd->add_option("--protocol", protocol, "protocol: 1, 2, or 3");
        o_epsilon = cmd->add_option("--epsilon", epsilon, "endpoint angle epsilon (rad)");
        o_delta = cmd->add_option("--delta", delta, "protocol-2 midpoint angle (rad)");
        o_tf = cmd->add_option("--tf-us", tf_us, "pulse duration (us)");
        o_steps = cmd->add_option("--steps", steps, "propagation steps");
        o_stride = cmd->add_option("--stride", sample_stride, "trajectory sample stride");
        o_pulse_samples =
            cmd->add_option("--pulse-samples", pulse_samples, "rows in pulse CSV");
        o_initial = cmd->add_option("--initial", initial, "initial state: mode0 | bare1");
        o_detuning_p = cmd->add_option("--detuning-p", detuning_p,
                                       "pump detuning (rad/us), propagation only");
        o_detuning_3 = cmd->add_option("--detuning-3", detuning_3,
                                       "two-photon detuning (rad/us), propagation only");
        o_step_tolerance = cmd->add_option("--step-tolerance", step_tolerance,
                                           "step-halving tolerance for simulate");
        o_out = cmd->add_option("--out", out, "output directory");
        o_format = cmd->add_option("--format", format, "csv | json | both");
    }

    lrpulse::RunConfig resolve() const {
        lrpulse::RunConfig c;
        if (!config_path.empty()) {
            c = lrpulse::RunConfig::from_file(config_path);
        }
        if (o_protocol->count()) c.protocol = protocol;
        if (o_epsilon->count()) c.epsilon = epsilon;
        if (o_delta->count()) c.delta = delta;
        if (o_tf->count()) c.tf_us = tf_us;
        if (o_steps->count()) c.steps = steps;
        if (o_stride->count()) c.sample_stride = sample_stride;
        if (o_pulse_samples->count()) c.pulse_samples = pulse_samples;
        if (o_initial->count()) c.initial = initial;
        if (o_detuning_p->count()) c.detuning_p = detuning_p;
        if (o_detuning_3->count()) c.detuning_3 = detuning_3;
        if (o_step_tolerance->count()) c.step_tolerance = step_tolerance;
        if (o_out->count()) c.out = out;
        if (o_format->count()) c.format = format;
        return c;
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Invariant-based pulse engineering for three-level Lambda systems"};
    app.require_subcommand(1);

    CommonOptions design_opts, simulate_opts, sweep_opts, figure_opts;

    CLI::App* design_cmd =
        app.add_subcommand("design", "synthesize pulses and check boundary conditions");
    design_opts.attach(design_cmd);

    CLI::App* simulate_cmd =
        app.add_subcommand("simulate", "propagate the state and report metrics");
    simulate_opts.attach(simulate_cmd);

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "scan one parameter axis");
    sweep_opts.attach(sweep_cmd);
    lrpulse::SweepRequest request;
    sweep_cmd->add_option("--axis", request.axis,
                          "epsilon | delta | tf_us | delta_p | delta_3")
        ->required();
    sweep_cmd->add_option("--min", request.min, "first axis value")->required();
    sweep_cmd->add_option("--max", request.max, "last axis value")->required();
    sweep_cmd->add_option("--points", request.points, "number of axis values")->required();

    CLI::App* figure_cmd =
        app.add_subcommand("reproduce-figure", "emit the reference figure data sets");
    int figure = 0;
    figure_cmd->add_option("figure", figure, "figure number: 2, 3, 4, 5, or 6")->required();
    figure_opts.attach(figure_cmd);

    CLI11_PARSE(app, argc, argv);

    return lrpulse::dispatch([&]() -> int {
        if (design_cmd->parsed()) return lrpulse::cmd_design(design_opts.resolve());
        if (simulate_cmd->parsed()) return lrpulse::cmd_simulate(simulate_opts.resolve());
        if (sweep_cmd->parsed()) return lrpulse::cmd_sweep(sweep_opts.resolve(), request);
        if (figure_cmd->parsed())
            return lrpulse::cmd_reproduce_figure(figure, figure_opts.resolve());
        return 1;
    });
}
