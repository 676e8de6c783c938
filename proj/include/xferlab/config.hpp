#pragma once
// JSON run configuration: one flat object covering the model/data cell, the
// training arm, and sweep layout. Parsing is strict: unknown keys and wrong
// types are errors that name the key, and every omitted field falls back to
// the package defaults, so an empty object is the reference configuration.

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "xferlab/experiments.hpp"

namespace xferlab::config {

// Raised for anything wrong with a config: unreadable file, malformed JSON,
// unknown key, wrong type, or a failed validation rule. The CLI maps this to
// its configuration exit code.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct Config {
    exp::CellParams cell;

    // single-run arm (train command)
    bool transfer = true;
    double alpha = 0.5;

    // sweep layout; `setting` selects a packaged sweep ("setting1".."setting4")
    // and is mutually exclusive with a custom axis
    uint64_t master_seed = 1;
    int seeds = 5;
    std::string setting;
    std::string axis;
    std::vector<double> values;
    std::string axis2;
    std::vector<double> values2;
    std::vector<exp::Arm> arms; // empty: transfer at alpha plus standard baseline

    std::vector<double> thresholds{0.65, 0.70}; // heatmap truncation levels
    int cadence = 10;                           // decomposition checkpoint stride

    void validate() const;
    bool operator==(const Config&) const = default;
};

// Strict parse; text must be a JSON object. Defaults fill omitted keys.
Config parse_config(const std::string& text);
Config parse_config_file(const std::filesystem::path& file);

// Full snapshot of every field, 2-space indented, trailing newline. Feeding
// the output back through parse_config reproduces the config exactly.
std::string emit_config(const Config& c);

// Sweep described by the config: the packaged setting when `setting` is set,
// otherwise a "custom" spec from the cell and axis fields. Arms default to
// {transfer at alpha, standard}.
exp::SweepSpec sweep_from_config(const Config& c);

} // namespace xferlab::config
