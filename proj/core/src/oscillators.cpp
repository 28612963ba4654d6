#include "ioncoupler/oscillators.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include "ioncoupler/constants.hpp"
#include "ioncoupler/errors.hpp"
#include "ioncoupler/log.hpp"

namespace ioncoupler {

void validate(const oscillator_pair& sys) {
    if (!(sys.mass1_kg > 0.0) || !(sys.mass2_kg > 0.0))
        throw validation_error("oscillator_pair: masses must be > 0");
    if (!(sys.k1_n_per_m > 0.0) || !(sys.k2_n_per_m > 0.0))
        throw validation_error("oscillator_pair: spring constants must be > 0");
    const double k_min = std::min(sys.k1_n_per_m, sys.k2_n_per_m);
    if (!(std::abs(sys.coupling_n_per_m) < k_min))
        throw validation_error("oscillator_pair: |coupling| must stay below min(k1, k2)");
    if (std::abs(sys.coupling_n_per_m) > 0.1 * k_min)
        log::warn("oscillator_pair: |coupling| above 10% of the weaker spring; "
                  "weak-coupling results are approximate");
}

mode_frequencies normal_modes(const oscillator_pair& sys) {
    validate(sys);
    if (sys.mass1_kg != sys.mass2_kg || sys.k1_n_per_m != sys.k2_n_per_m)
        throw unsupported_configuration(
            "normal_modes: defined for identical oscillators (m1 == m2, k1 == k2)");
    mode_frequencies out;
    out.omega_plus = std::sqrt((sys.k1_n_per_m + sys.coupling_n_per_m) / sys.mass1_kg);
    out.omega_minus = std::sqrt((sys.k1_n_per_m - sys.coupling_n_per_m) / sys.mass1_kg);
    out.splitting = out.omega_plus - out.omega_minus;
    return out;
}

double fast_period(const oscillator_pair& sys) {
    // Conservative bound: stiffen each spring by |gamma|.
    const double g = std::abs(sys.coupling_n_per_m);
    const double w2 = std::max((sys.k1_n_per_m + g) / sys.mass1_kg,
                               (sys.k2_n_per_m + g) / sys.mass2_kg);
    return 2.0 * constants::pi / std::sqrt(w2);
}

double energy_ion1(const oscillator_pair& sys, const phase_state& s) {
    return 0.5 * sys.mass1_kg * s.v1_mps * s.v1_mps + 0.5 * sys.k1_n_per_m * s.x1_m * s.x1_m;
}

double energy_ion2(const oscillator_pair& sys, const phase_state& s) {
    return 0.5 * sys.mass2_kg * s.v2_mps * s.v2_mps + 0.5 * sys.k2_n_per_m * s.x2_m * s.x2_m;
}

double energy_total(const oscillator_pair& sys, const phase_state& s) {
    return energy_ion1(sys, s) + energy_ion2(sys, s) + sys.coupling_n_per_m * s.x1_m * s.x2_m;
}

namespace {

inline void accel(const oscillator_pair& sys, const phase_state& s, double& a1, double& a2) {
    a1 = -(sys.k1_n_per_m * s.x1_m + sys.coupling_n_per_m * s.x2_m) / sys.mass1_kg;
    a2 = -(sys.k2_n_per_m * s.x2_m + sys.coupling_n_per_m * s.x1_m) / sys.mass2_kg;
}

// kick-drift-kick velocity Verlet; symplectic and time-reversible
inline void verlet_step(const oscillator_pair& sys, phase_state& s, double dt) {
    double a1, a2;
    accel(sys, s, a1, a2);
    s.v1_mps += 0.5 * dt * a1;
    s.v2_mps += 0.5 * dt * a2;
    s.x1_m += dt * s.v1_mps;
    s.x2_m += dt * s.v2_mps;
    accel(sys, s, a1, a2);
    s.v1_mps += 0.5 * dt * a1;
    s.v2_mps += 0.5 * dt * a2;
}

// Suzuki-Yoshida triple-jump coefficients: fourth order from three
// velocity-Verlet stages, w1 + w0 + w1 = 1.
constexpr double w1 = 1.3512071919596578; // 1 / (2 - 2^(1/3))
constexpr double w0 = 1.0 - 2.0 * w1;     // negative middle stage

inline void composed_step(const oscillator_pair& sys, phase_state& s, double dt) {
    verlet_step(sys, s, w1 * dt);
    verlet_step(sys, s, w0 * dt);
    verlet_step(sys, s, w1 * dt);
}

} // namespace

void advance(const oscillator_pair& sys, phase_state& s, double dt_s, std::size_t n_steps,
             integrator_scheme scheme) {
    if (scheme == integrator_scheme::velocity_verlet) {
        for (std::size_t i = 0; i < n_steps; ++i)
            verlet_step(sys, s, dt_s);
    } else {
        for (std::size_t i = 0; i < n_steps; ++i)
            composed_step(sys, s, dt_s);
    }
}

trajectory simulate(const oscillator_pair& sys, const phase_state& initial, double duration_s,
                    double dt_s, std::size_t sample_stride, integrator_scheme scheme) {
    validate(sys);
    if (!(duration_s > 0.0))
        throw validation_error("simulate: duration must be > 0");
    const double t_fast = fast_period(sys);
    // The cap is a resolution requirement, not a sharp threshold: a dt equal
    // to a cap the caller computed at slightly different rounding should pass.
    const double dt_cap = (t_fast / 100.0) * (1.0 + 4.0 * std::numeric_limits<double>::epsilon());
    if (!(dt_s > 0.0) || dt_s > dt_cap) {
        std::ostringstream msg;
        // Full precision: the fast *mode* period is a touch shorter than the
        // bare trap period, and a six-digit cap can look equal to the dt it
        // just rejected.
        msg << "simulate: dt must satisfy 0 < dt <= fast_period/100 = "
            << std::setprecision(17) << t_fast / 100.0 << " s";
        throw validation_error(msg.str());
    }
    if (sample_stride == 0)
        throw validation_error("simulate: sample stride must be >= 1");

    const auto n_steps = static_cast<std::size_t>(std::ceil(duration_s / dt_s));
    trajectory traj;
    traj.dt_s = dt_s * static_cast<double>(sample_stride);
    traj.samples.reserve(n_steps / sample_stride + 2);

    phase_state s = initial;
    auto record = [&](std::size_t step) {
        trajectory_sample sample;
        sample.t_s = static_cast<double>(step) * dt_s;
        sample.x1_m = s.x1_m;
        sample.v1_mps = s.v1_mps;
        sample.x2_m = s.x2_m;
        sample.v2_mps = s.v2_mps;
        sample.e1_j = energy_ion1(sys, s);
        sample.e2_j = energy_ion2(sys, s);
        sample.e_total_j = energy_total(sys, s);
        if (!std::isfinite(sample.e_total_j))
            throw numerical_error("simulate: state became non-finite");
        traj.samples.push_back(sample);
    };

    record(0);
    for (std::size_t step = 1; step <= n_steps; ++step) {
        advance(sys, s, dt_s, 1, scheme);
        if (step % sample_stride == 0)
            record(step);
    }
    return traj;
}

double exchange_time(const trajectory& traj, double fast_period_s) {
    if (!(fast_period_s > 0.0))
        throw validation_error("exchange_time: fast period must be > 0");
    if (traj.samples.size() < 8 || !(traj.dt_s > 0.0))
        throw validation_error("exchange_time: trajectory too short");

    // Envelope = per-fast-period maximum of E1.
    const auto window =
        std::max<std::size_t>(1, static_cast<std::size_t>(std::round(fast_period_s / traj.dt_s)));
    std::vector<double> env_t;
    std::vector<double> env_e;
    for (std::size_t begin = 0; begin + window <= traj.samples.size(); begin += window) {
        double peak = traj.samples[begin].e1_j;
        for (std::size_t i = begin + 1; i < begin + window; ++i)
            peak = std::max(peak, traj.samples[i].e1_j);
        env_t.push_back(traj.samples[begin + window / 2].t_s);
        env_e.push_back(peak);
    }
    if (env_e.size() < 3)
        throw validation_error("exchange_time: trajectory shorter than three envelope windows");

    const double env_max = *std::max_element(env_e.begin(), env_e.end());
    // A genuine exchange dips well below the peak; ripple on a flat envelope
    // (gamma = 0) must not count as a minimum.
    const double depth_threshold = 0.25 * env_max;
    for (std::size_t i = 1; i + 1 < env_e.size(); ++i) {
        if (env_e[i] <= env_e[i - 1] && env_e[i] <= env_e[i + 1] && env_e[i] < depth_threshold) {
            const double denom = env_e[i - 1] - 2.0 * env_e[i] + env_e[i + 1];
            if (denom <= 0.0)
                return env_t[i];
            const double spacing = 0.5 * (env_t[i + 1] - env_t[i - 1]);
            double offset = 0.5 * (env_e[i - 1] - env_e[i + 1]) / denom;
            offset = std::clamp(offset, -1.0, 1.0);
            return env_t[i] + offset * spacing;
        }
    }
    throw numerical_error("exchange_time: no energy-exchange minimum found; "
                          "simulate longer than one exchange period or check that the "
                          "coupling is nonzero");
}

} // namespace ioncoupler
