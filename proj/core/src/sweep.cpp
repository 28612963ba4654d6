#include "ioncoupler/sweep.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "ioncoupler/errors.hpp"
#include "ioncoupler/report.hpp"

namespace ioncoupler {

namespace {

constexpr std::array<std::string_view, 6> names = {
    "r1_m", "r2_m", "d_eq1_m", "d_eq2_m", "wire_length_m", "frequency_hz",
};

// Report keys reproduced per row. gamma_reverse is looked up with a fallback
// because symmetric reports collapse it into gamma.
constexpr std::array<std::string_view, 25> row_keys = {
    "linear.a12_c_per_m",
    "linear.zeta",
    "linear.a34_n_per_c",
    "linear.gamma_n_per_m",
    "linear.gamma_reverse_n_per_m",
    "linear.g_rad_per_s",
    "linear.t_swap_s",
    "lumped.ion1.oscillation_energy_j",
    "lumped.ion1.plate_separation_m",
    "lumped.ion1.energy_capacitance_f",
    "lumped.ion1.energy_inductance_h",
    "lumped.ion1.motional_capacitance_f",
    "lumped.ion1.motional_inductance_h",
    "lumped.ion1.corrected_motional_capacitance_f",
    "lumped.ion2.oscillation_energy_j",
    "lumped.ion2.plate_separation_m",
    "lumped.ion2.energy_capacitance_f",
    "lumped.ion2.energy_inductance_h",
    "lumped.ion2.motional_capacitance_f",
    "lumped.ion2.motional_inductance_h",
    "lumped.ion2.corrected_motional_capacitance_f",
    "lumped.eta",
    "lumped.plate_coupling_exact_n_per_m",
    "lumped.plate_coupling_large_c_n_per_m",
    "lumped.plate_coupling_charge_form_n_per_m",
};

} // namespace

sweep_parameter sweep_parameter_from_name(std::string_view name) {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name)
            return static_cast<sweep_parameter>(i);
    throw validation_error("unknown sweep parameter '" + std::string(name) +
                           "'; sweepable fields: " + sweepable_names());
}

std::string_view sweep_parameter_name(sweep_parameter parameter) {
    return names[static_cast<std::size_t>(parameter)];
}

std::string sweepable_names() {
    std::string joined;
    for (const auto name : names) {
        if (!joined.empty())
            joined += ", ";
        joined += name;
    }
    return joined;
}

grid_scale grid_scale_from_name(std::string_view name) {
    if (name == "linear") return grid_scale::linear;
    if (name == "log") return grid_scale::log;
    throw validation_error("unknown scale '" + std::string(name) + "'; expected linear or log");
}

std::vector<double> make_grid(double from, double to, int steps, grid_scale scale) {
    if (steps < 2)
        throw validation_error("sweep needs steps >= 2");
    if (!(from < to))
        throw validation_error("sweep range needs from < to");
    if (scale == grid_scale::log && from <= 0.0)
        throw validation_error("log-scale sweep needs from > 0");

    std::vector<double> grid(static_cast<std::size_t>(steps));
    const double lo = scale == grid_scale::log ? std::log(from) : from;
    const double hi = scale == grid_scale::log ? std::log(to) : to;
    for (int i = 0; i < steps; ++i) {
        const double t = static_cast<double>(i) / (steps - 1);
        const double v = lo + (hi - lo) * t;
        grid[static_cast<std::size_t>(i)] = scale == grid_scale::log ? std::exp(v) : v;
    }
    // Pin the endpoints so they survive the round trip through log space.
    grid.front() = from;
    grid.back() = to;
    return grid;
}

system_config apply_sweep_value(const system_config& config, sweep_parameter parameter,
                                double value) {
    system_config out = config;
    switch (parameter) {
    case sweep_parameter::r1_m: out.geometry.r1_m = value; break;
    case sweep_parameter::r2_m: out.geometry.r2_m = value; break;
    case sweep_parameter::d_eq1_m: out.geometry.d_eq1_m = value; break;
    case sweep_parameter::d_eq2_m: out.geometry.d_eq2_m = value; break;
    case sweep_parameter::wire_length_m: out.geometry.wire_length_m = value; break;
    case sweep_parameter::frequency_hz:
        out.trap1.frequency_hz = value;
        out.trap2.frequency_hz = value;
        break;
    }
    return out;
}

std::string run_sweep(const system_config& config, sweep_parameter parameter, double from,
                      double to, int steps, grid_scale scale) {
    const auto grid = make_grid(from, to, steps, scale);

    report_options options;
    options.model = compute_model::both;
    options.include_timestamp = false;

    std::ostringstream out;
    out << sweep_parameter_name(parameter);
    for (const auto key : row_keys)
        out << ',' << key;
    out << '\n';

    for (const double value : grid) {
        const auto point = apply_sweep_value(config, parameter, value);
        const auto report = build_report(point, options);
        out << format_number(value);
        for (const auto key : row_keys) {
            double v;
            if (key == "linear.gamma_reverse_n_per_m") {
                try {
                    v = report.number(key);
                } catch (const validation_error&) {
                    v = report.number("linear.gamma_n_per_m");
                }
            } else {
                v = report.number(key);
            }
            out << ',' << format_number(v);
        }
        out << '\n';
    }
    return out.str();
}

} // namespace ioncoupler
