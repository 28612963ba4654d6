#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ioncoupler/constants.hpp"

namespace ioncoupler {

struct ion_species {
    double mass_kg = 0.0;    // [kg]
    int charge_multiple = 1; // n, charge in units of e (n >= 1)

    double charge_c() const { return charge_multiple * constants::elementary_charge; }
};

struct harmonic_trap {
    double frequency_hz = 0.0; // secular frequency f [Hz]

    // omega = 2 pi f
    double omega() const { return 2.0 * constants::pi * frequency_hz; }
};

/// k = m omega^2 [N/m]
double spring_constant(const ion_species& ion, const harmonic_trap& trap);

/// Floating conductor geometry: a pickup disk near each ion joined by a wire.
struct coupling_geometry {
    double r1_m = 0.0;          // pickup disk radius, ion-1 side [m]
    double r2_m = 0.0;          // pickup disk radius, ion-2 side [m]
    double d_eq1_m = 0.0;       // ion 1 equilibrium height above disk 1 [m]
    double d_eq2_m = 0.0;       // ion 2 equilibrium height above disk 2 [m]
    double wire_length_m = 0.0; // [m]
    double wire_radius_m = 0.0; // [m]
};

/// Isolated-disk estimate C = 8 eps0 r.
double disk_self_capacitance(double radius_m);

/// Isolated thin-wire estimate C = 2 pi eps0 L / ln(L/a).
double wire_self_capacitance(double length_m, double radius_m);

/// Self-capacitance estimators are pluggable so refined formulas can be
/// swapped in without touching call sites.
struct self_capacitance_model {
    std::function<double(double radius_m)> disk = disk_self_capacitance;
    std::function<double(double length_m, double radius_m)> wire = wire_self_capacitance;
};

struct self_capacitances {
    double disk1_f = 0.0; // [F]
    double wire_f = 0.0;  // [F]
    double disk2_f = 0.0; // [F]
    double total_f = 0.0; // disk1 + wire + disk2 [F]
};

self_capacitances compute_self_capacitances(const coupling_geometry& geometry,
                                            const self_capacitance_model& model = {});

/// Optional knobs for the lumped-element circuit picture.
struct lumped_options {
    double eta = 1.0;                  // induced-charge participation factor, 0 < eta <= 1
    bool eta_from_zeta = false;        // use the computed charge-transfer fraction as eta
    double geometry_factor = 1.0;      // dimensionless Gamma in the charge-form coupling
    std::optional<double> oscillation_energy1_j; // default: hbar*omega/2 for ion 1
    std::optional<double> oscillation_energy2_j; // default: hbar*omega/2 for ion 2
    bool eta_was_specified = false;    // set by the loader; drives unused-field warnings
};

struct system_config {
    ion_species ion1;
    ion_species ion2;
    harmonic_trap trap1;
    harmonic_trap trap2;
    coupling_geometry geometry;
    lumped_options lumped;
};

/// One validation failure, e.g. {"geometry.r1_m", "must be > 0 (got -1)"}.
struct config_violation {
    std::string field;
    std::string message;
};

/// Checks every field and returns the complete list of violations (empty when
/// the config is usable). Does not throw.
std::vector<config_violation> validate_config(const system_config& config);

/// Throws validation_error listing all violations; no-op on a valid config.
void require_valid(const system_config& config);

/// Parse a JSON config document (schema in docs/config_schema.md).
/// Unknown keys are collected into `warnings` rather than rejected.
system_config load_config(std::istream& in, std::vector<std::string>* warnings = nullptr);
system_config load_config_file(const std::string& path, std::vector<std::string>* warnings = nullptr);

} // namespace ioncoupler
