#include "ioncoupler/image_charge.hpp"

#include <cmath>

#include "ioncoupler/errors.hpp"

namespace ioncoupler {

double induced_charge_plane_window(double charge_c, double height_m, double window_radius_m) {
    if (!(height_m > 0.0) || !std::isfinite(height_m))
        throw validation_error("induced_charge_plane_window: height must be > 0");
    if (!(window_radius_m > 0.0) || !std::isfinite(window_radius_m))
        throw validation_error("induced_charge_plane_window: window radius must be > 0");
    const double hypot = std::sqrt(height_m * height_m + window_radius_m * window_radius_m);
    return -charge_c * (1.0 - height_m / hypot);
}

double charge_response_numeric(double charge_c, double height_m, double window_radius_m,
                               double delta_m) {
    if (!(delta_m > 0.0) || delta_m > 1e-3 * height_m)
        throw validation_error("charge_response_numeric: need 0 < delta <= 1e-3 * height");
    const double lo = induced_charge_plane_window(charge_c, height_m - delta_m, window_radius_m);
    const double hi = induced_charge_plane_window(charge_c, height_m + delta_m, window_radius_m);
    return std::abs(lo - hi) / (2.0 * delta_m);
}

} // namespace ioncoupler
