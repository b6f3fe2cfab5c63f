#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>

#include <json.hpp>

#include "lrpulse/metrics.hpp"

namespace lrpulse {

// Resolved run configuration shared by all subcommands. Flat JSON
// key-value files feed it; command-line flags override file keys; the
// fully resolved object is echoed into every output for reproducibility.
struct RunConfig {
    int protocol = 1;
    double epsilon = 0.2;
    std::optional<double> delta;
    double tf_us = 4.0;
    int steps = kDefaultSteps;
    int sample_stride = kDefaultStride;
    int pulse_samples = 401;
    std::string initial;  // mode0 | bare1; empty = protocol default
    double detuning_p = 0.0;
    double detuning_3 = 0.0;
    double step_tolerance = 1e-6;
    std::string out = ".";
    std::string format = "both";  // csv | json | both

    // Unknown keys and type mismatches are rejected.
    static RunConfig from_json(const nlohmann::json& j);
    static RunConfig from_file(const std::filesystem::path& path);

    nlohmann::json to_json() const;

    ProtocolSpec protocol_spec() const;
    RunSetup run_setup() const;

    bool wants_csv() const { return format == "csv" || format == "both"; }
    bool wants_json() const { return format == "json" || format == "both"; }
};

struct SweepRequest {
    std::string axis;
    double min = 0.0;
    double max = 0.0;
    int points = 0;
};

// Subcommand bodies. They throw ValidationError / NumericalError on bad
// input or failed numerics and return the process exit code otherwise.
int cmd_design(const RunConfig& config);
int cmd_simulate(const RunConfig& config);
int cmd_sweep(const RunConfig& config, const SweepRequest& request);
int cmd_reproduce_figure(int figure, const RunConfig& config);

// Maps exceptions to exit codes: validation 1, numerical/other 2.
int dispatch(const std::function<int()>& command);

} // namespace lrpulse
