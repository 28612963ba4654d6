#include "ioncoupler/linear.hpp"

#include <cmath>
#include <sstream>

#include "ioncoupler/errors.hpp"
#include "ioncoupler/log.hpp"

namespace ioncoupler {

namespace {

void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        std::ostringstream msg;
        msg << what << " must be > 0 (got " << v << ")";
        throw validation_error(msg.str());
    }
}

} // namespace

double charge_response(double charge_c, double disk_radius_m, double height_m) {
    require_positive(disk_radius_m, "charge_response: disk radius");
    require_positive(height_m, "charge_response: height");
    const double r2 = disk_radius_m * disk_radius_m;
    const double s = r2 + height_m * height_m;
    return charge_c * r2 / (s * std::sqrt(s));
}

double far_disk_transfer_fraction(const self_capacitances& caps) {
    if (!(caps.total_f > 0.0) || caps.disk2_f < 0.0)
        throw validation_error("far_disk_transfer_fraction: capacitances must be positive");
    return caps.disk2_f / caps.total_f;
}

double ring_field(double ring_charge_c, double ring_radius_m, double height_m) {
    require_positive(ring_radius_m, "ring_field: ring radius");
    // h = 0 is fine: the on-axis field vanishes in the ring plane by symmetry
    if (!(height_m >= 0.0))
        throw validation_error("ring_field: height must be >= 0 (got " +
                               std::to_string(height_m) + ")");
    const double s = height_m * height_m + ring_radius_m * ring_radius_m;
    return constants::coulomb * ring_charge_c * height_m / (s * std::sqrt(s));
}

double force_response(double charge_c, double disk_radius_m, double height_m) {
    // force on the ion per unit charge sitting at the far disk = q * E_ring(1 C)
    return charge_c * ring_field(1.0, disk_radius_m, height_m);
}

double coupling_strength(double charge_response_c_per_m, double transfer_fraction,
                         double force_response_n_per_c) {
    return charge_response_c_per_m * transfer_fraction * force_response_n_per_c;
}

double rabi_rate(double coupling_n_per_m, double mass_kg, double omega) {
    require_positive(mass_kg, "rabi_rate: mass");
    require_positive(omega, "rabi_rate: angular frequency");
    return coupling_n_per_m / (2.0 * mass_kg * omega);
}

double swap_time(double rabi_rate_rad_per_s) {
    require_positive(rabi_rate_rad_per_s, "swap_time: rate");
    return constants::pi / (2.0 * rabi_rate_rad_per_s);
}

induced_charges induced_charge_response(double charge_response_c_per_m,
                                        double transfer_fraction,
                                        double displacement_m, double height_m) {
    require_positive(height_m, "induced_charge_response: height");
    induced_charges out;
    out.near_disk_c = charge_response_c_per_m * displacement_m;
    out.far_disk_c = transfer_fraction * out.near_disk_c;
    if (std::abs(displacement_m) > 0.1 * height_m) {
        out.within_linear_regime = false;
        std::ostringstream msg;
        msg << "displacement " << displacement_m << " m exceeds 10% of the equilibrium height "
            << height_m << " m; linear response is unreliable";
        log::warn(msg.str());
    }
    return out;
}

linear_elements build_linear_elements(const system_config& config,
                                      const self_capacitances& caps,
                                      const transfer_strategy& transfer) {
    linear_elements e;
    e.charge_response_c_per_m =
        charge_response(config.ion1.charge_c(), config.geometry.r1_m, config.geometry.d_eq1_m);
    e.transfer_fraction = transfer(caps);
    e.force_response_n_per_c =
        force_response(config.ion2.charge_c(), config.geometry.r2_m, config.geometry.d_eq2_m);
    e.coupling_n_per_m =
        coupling_strength(e.charge_response_c_per_m, e.transfer_fraction, e.force_response_n_per_c);

    // Reverse direction: ion2 displaces, disk1 collects its share, ion1 feels
    // the force. The redistribution fraction mirrors to disk1 / total.
    self_capacitances mirrored = caps;
    std::swap(mirrored.disk1_f, mirrored.disk2_f);
    e.coupling_reverse_n_per_m = coupling_strength(
        charge_response(config.ion2.charge_c(), config.geometry.r2_m, config.geometry.d_eq2_m),
        transfer(mirrored),
        force_response(config.ion1.charge_c(), config.geometry.r1_m, config.geometry.d_eq1_m));

    if (config.ion1.mass_kg != config.ion2.mass_kg)
        throw unsupported_configuration(
            "exchange rate is defined for identical ions; ion1.mass_kg != ion2.mass_kg");
    if (config.trap1.frequency_hz != config.trap2.frequency_hz)
        throw unsupported_configuration(
            "exchange rate is defined for equal traps; trap1.frequency_hz != trap2.frequency_hz");
    e.rabi_rate_rad_per_s =
        rabi_rate(e.coupling_n_per_m, config.ion1.mass_kg, config.trap1.omega());
    e.swap_time_s = swap_time(e.rabi_rate_rad_per_s);
    return e;
}

} // namespace ioncoupler
