#pragma once

#include <string>
#include <vector>

namespace ioncoupler {

/// First-principles electrostatics used to cross-check the closed-form linear
/// couplings. Everything here treats the conductor as a grounded ideal plane
/// or disk; nothing in this header depends on the model being checked.

/// Induced charge collected on a circular window of radius `window_radius_m`
/// of an infinite grounded plane, for a point charge q at height d.
/// Image-charge surface density integrated over the window:
///   Q(d, r) = -q (1 - d / sqrt(d^2 + r^2))
/// Q -> -q as r -> infinity (the whole plane collects the full image charge).
double induced_charge_plane_window(double charge_c, double height_m, double window_radius_m);

/// Central finite difference of induced_charge_plane_window with respect to
/// the ion height: an independent numeric estimate of the charge induced per
/// unit ion displacement [C/m]. `delta_m` must satisfy 0 < delta <= 1e-3 * height.
/// Truncation error is O(delta^2).
double charge_response_numeric(double charge_c, double height_m, double window_radius_m,
                               double delta_m);

/// One (height, induced charge) sample of an induced-charge curve.
struct induced_charge_sample {
    double height_m = 0.0;
    double charge_c = 0.0;
};

/// Induced-charge-vs-height curve tagged with the method that produced it.
struct induced_charge_curve {
    std::string method; // "analytic-plane" or "bem-disk"
    std::vector<induced_charge_sample> samples;
};

} // namespace ioncoupler
