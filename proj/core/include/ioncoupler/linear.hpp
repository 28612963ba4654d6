#pragma once

#include <functional>

#include "ioncoupler/config.hpp"

namespace ioncoupler {

/// Linear transfer chain ion1 -> near disk -> wire -> far disk -> ion2.
/// Each stage is a linear response coefficient; their product is the spring
/// coupling between the two ions.

/// Charge induced on the near pickup disk per unit ion displacement [C/m]:
///   q r^2 / (r^2 + d^2)^(3/2)
/// which is d/dh of the grounded-plane window charge -q(1 - h/sqrt(h^2+r^2))
/// at h = d. Positive z (toward the disk) draws a charge imbalance of sign
/// opposite to the ion's; the coefficient is reported with the sign of q.
double charge_response(double charge_c, double disk_radius_m, double height_m);

/// Fraction of the induced charge that reaches the far disk once the floating
/// conductor re-equilibrates: far-disk capacitance over total.
double far_disk_transfer_fraction(const self_capacitances& caps);

/// Replaceable redistribution rule; default is far_disk_transfer_fraction.
using transfer_strategy = std::function<double(const self_capacitances&)>;

/// On-axis field of a ring of charge at the disk rim radius, per unit charge,
/// times the ion charge: force on ion2 per coulomb on the far disk [N/C]:
///   q2 d / (4 pi eps0 (d^2 + r^2)^(3/2))
double force_response(double charge_c, double disk_radius_m, double height_m);

/// On-axis electric field of a charged ring [N/C = V/m].
double ring_field(double ring_charge_c, double ring_radius_m, double height_m);

/// Spring coupling between the ions [N/m]: product of the three stages.
double coupling_strength(double charge_response_c_per_m, double transfer_fraction,
                         double force_response_n_per_c);

/// Quantum exchange rate g = gamma / (2 m omega) [rad/s]; valid for identical
/// ions in identical traps (the caller enforces that).
double rabi_rate(double coupling_n_per_m, double mass_kg, double omega);

/// Half oscillation of the exchange: t = pi / (2 g) [s].
double swap_time(double rabi_rate_rad_per_s);

/// Induced charges for a concrete ion displacement z.
struct induced_charges {
    double near_disk_c = 0.0;       // charge imbalance on the near disk [C]
    double far_disk_c = 0.0;        // portion arriving at the far disk [C]
    bool within_linear_regime = true; // |z| <= 0.1 * d_eq
};

/// near = response * z, far = fraction * near. Logs a warning (and clears the
/// flag) when |z| exceeds 10% of the equilibrium height, where the linear
/// expansion degrades.
induced_charges induced_charge_response(double charge_response_c_per_m,
                                        double transfer_fraction,
                                        double displacement_m, double height_m);

struct linear_elements {
    double charge_response_c_per_m = 0.0; // near-disk stage
    double transfer_fraction = 0.0;       // conductor stage (dimensionless)
    double force_response_n_per_c = 0.0;  // far-disk stage
    double coupling_n_per_m = 0.0;        // ion1 -> ion2
    double coupling_reverse_n_per_m = 0.0; // ion2 -> ion1; equal when symmetric
    double rabi_rate_rad_per_s = 0.0;
    double swap_time_s = 0.0;
};

/// Assemble the full chain from a validated config. Throws
/// unsupported_configuration when the exchange-rate stage is requested for
/// unequal masses or trap frequencies (those formulas assume identical ions).
linear_elements build_linear_elements(const system_config& config,
                                      const self_capacitances& caps,
                                      const transfer_strategy& transfer = far_disk_transfer_fraction);

} // namespace ioncoupler
