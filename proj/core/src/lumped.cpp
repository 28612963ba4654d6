#include "ioncoupler/lumped.hpp"

#include <cmath>

#include "ioncoupler/constants.hpp"
#include "ioncoupler/errors.hpp"

namespace ioncoupler {

double energy_equivalent_capacitance(double oscillation_energy_j, int charge_multiple) {
    if (!(oscillation_energy_j > 0.0))
        throw validation_error("energy_equivalent_capacitance: energy must be > 0");
    if (charge_multiple < 1)
        throw validation_error("energy_equivalent_capacitance: charge multiple must be >= 1");
    const double q = charge_multiple * constants::elementary_charge;
    return q * q / (2.0 * oscillation_energy_j);
}

double resonant_inductance(double omega, double capacitance_f) {
    if (!(omega > 0.0) || !(capacitance_f > 0.0))
        throw validation_error("resonant_inductance: omega and capacitance must be > 0");
    return 1.0 / (omega * omega * capacitance_f);
}

double shockley_ramo_current(double charge_c, double velocity_mps, double gap_m) {
    if (!(gap_m > 0.0))
        throw validation_error("shockley_ramo_current: gap must be > 0");
    return charge_c * velocity_mps / gap_m;
}

motional_elements motional_circuit_elements(double charge_c, double mass_kg, double omega,
                                            double gap_m) {
    if (!(charge_c != 0.0) || !(mass_kg > 0.0) || !(omega > 0.0) || !(gap_m > 0.0))
        throw validation_error("motional_circuit_elements: need q != 0, m > 0, omega > 0, d > 0");
    const double q2 = charge_c * charge_c;
    const double d2 = gap_m * gap_m;
    motional_elements out;
    out.capacitance_f = q2 / (mass_kg * omega * omega * d2);
    out.inductance_h = mass_kg * d2 / q2;
    return out;
}

double corrected_capacitance(double eta, double capacitance_f) {
    if (!(eta > 0.0) || eta > 1.0)
        throw validation_error("corrected_capacitance: eta must be in (0, 1]");
    if (!(capacitance_f > 0.0))
        throw validation_error("corrected_capacitance: capacitance must be > 0");
    return eta * capacitance_f;
}

plate_coupling plate_coupling_strength(const plate_coupling_inputs& in) {
    if (!(in.mass_kg > 0.0) || !(in.omega > 0.0))
        throw validation_error("plate_coupling_strength: mass and omega must be > 0");
    if (!(in.c1_f > 0.0) || !(in.c2_f > 0.0) || !(in.c_total_f > 0.0))
        throw validation_error("plate_coupling_strength: capacitances must be > 0");
    if (!(in.gap1_m > 0.0) || !(in.gap2_m > 0.0))
        throw validation_error("plate_coupling_strength: gaps must be > 0");
    const double k = in.mass_kg * in.omega * in.omega;
    plate_coupling out;
    out.exact_n_per_m =
        k * std::sqrt(in.c1_f * in.c2_f / ((in.c1_f + in.c_total_f) * (in.c2_f + in.c_total_f)));
    out.large_c_n_per_m = k * std::sqrt(in.c1_f * in.c2_f) / in.c_total_f;
    out.charge_form_n_per_m = in.geometry_factor * in.geometry_factor * in.charge1_c * in.charge2_c
                              / (in.gap1_m * in.gap2_m * in.c_total_f);
    return out;
}

charge_consistency current_equivalence_check(double mass_kg, double omega,
                                             double plate_area_m2, double gap_m) {
    if (!(mass_kg > 0.0) || !(omega > 0.0) || !(plate_area_m2 > 0.0) || !(gap_m > 0.0))
        throw validation_error("current_equivalence_check: all inputs must be > 0");
    charge_consistency out;
    out.implied_e2_c2 =
        2.0 * constants::vacuum_permittivity * plate_area_m2 * mass_kg * omega * omega * gap_m;
    out.actual_e2_c2 = constants::elementary_charge * constants::elementary_charge;
    out.consistent =
        std::abs(out.implied_e2_c2 - out.actual_e2_c2) <= 1e-6 * out.actual_e2_c2;
    return out;
}

lumped_elements build_lumped_elements(const system_config& config, int ion_index, double eta) {
    if (ion_index != 1 && ion_index != 2)
        throw validation_error("build_lumped_elements: ion index must be 1 or 2");
    const ion_species& ion = ion_index == 1 ? config.ion1 : config.ion2;
    const harmonic_trap& trap = ion_index == 1 ? config.trap1 : config.trap2;
    const double gap = ion_index == 1 ? config.geometry.d_eq1_m : config.geometry.d_eq2_m;
    const auto& energy_override = ion_index == 1 ? config.lumped.oscillation_energy1_j
                                                 : config.lumped.oscillation_energy2_j;

    lumped_elements out;
    out.plate_separation_m = gap;
    out.oscillation_energy_j =
        energy_override.value_or(0.5 * constants::hbar * trap.omega()); // zero-point default
    out.energy_capacitance_f =
        energy_equivalent_capacitance(out.oscillation_energy_j, ion.charge_multiple);
    out.energy_inductance_h = resonant_inductance(trap.omega(), out.energy_capacitance_f);
    const auto motional =
        motional_circuit_elements(ion.charge_c(), ion.mass_kg, trap.omega(), gap);
    out.motional_capacitance_f = motional.capacitance_f;
    out.motional_inductance_h = motional.inductance_h;
    out.corrected_motional_capacitance_f = corrected_capacitance(eta, motional.capacitance_f);
    return out;
}

} // namespace ioncoupler
