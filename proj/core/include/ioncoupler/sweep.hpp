#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ioncoupler/config.hpp"

namespace ioncoupler {

// Config fields that make sense to vary one at a time. frequency_hz drives
// both traps together; the rest map straight onto coupling_geometry.
enum class sweep_parameter {
    r1_m,
    r2_m,
    d_eq1_m,
    d_eq2_m,
    wire_length_m,
    frequency_hz,
};

sweep_parameter sweep_parameter_from_name(std::string_view name);
std::string_view sweep_parameter_name(sweep_parameter parameter);

// Comma-separated list of accepted names, for error messages and --help.
std::string sweepable_names();

enum class grid_scale { linear, log };

grid_scale grid_scale_from_name(std::string_view name);

// steps >= 2 points from `from` to `to` inclusive. Log spacing needs a
// strictly positive range.
std::vector<double> make_grid(double from, double to, int steps, grid_scale scale);

// Copy of `config` with one field replaced.
system_config apply_sweep_value(const system_config& config, sweep_parameter parameter,
                                double value);

// One CSV row per grid point: the swept value followed by every linear and
// lumped output. Rows are ordered by grid index.
std::string run_sweep(const system_config& config, sweep_parameter parameter, double from,
                      double to, int steps, grid_scale scale);

} // namespace ioncoupler
