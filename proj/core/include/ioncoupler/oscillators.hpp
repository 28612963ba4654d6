#pragma once

#include <cstddef>
#include <vector>

namespace ioncoupler {

/// Two harmonic oscillators with a bilinear spring coupling:
///   H = p1^2/2m1 + p2^2/2m2 + k1 x1^2/2 + k2 x2^2/2 + gamma x1 x2

struct oscillator_pair {
    double mass1_kg = 0.0;
    double mass2_kg = 0.0;
    double k1_n_per_m = 0.0;
    double k2_n_per_m = 0.0;
    double coupling_n_per_m = 0.0; // gamma; |gamma| < min(k1, k2) for stability
};

struct phase_state {
    double x1_m = 0.0;
    double v1_mps = 0.0;
    double x2_m = 0.0;
    double v2_mps = 0.0;
};

/// Throws validation_error when masses or springs are non-positive or
/// |gamma| >= min(k1, k2) (an unstable pair); logs a warning above
/// 0.1 * min(k1, k2) where the weak-coupling picture degrades.
void validate(const oscillator_pair& system);

struct mode_frequencies {
    double omega_plus = 0.0;  // sqrt((k + gamma)/m) [rad/s]
    double omega_minus = 0.0; // sqrt((k - gamma)/m) [rad/s]
    double splitting = 0.0;   // omega_plus - omega_minus; ~ gamma/(m omega) for gamma << k
};

/// Normal modes of the symmetric pair; requires m1 == m2 and k1 == k2.
mode_frequencies normal_modes(const oscillator_pair& system);

/// Shortest oscillation period 2 pi / omega_max, used to bound step sizes.
double fast_period(const oscillator_pair& system);

double energy_ion1(const oscillator_pair& system, const phase_state& s); // [J]
double energy_ion2(const oscillator_pair& system, const phase_state& s); // [J]
double energy_total(const oscillator_pair& system, const phase_state& s); // includes gamma x1 x2

enum class integrator_scheme {
    velocity_verlet, // 2nd order; energy error amplitude (omega dt)^2 / 4
    composed_4th,    // three velocity-Verlet stages (Suzuki-Yoshida); default
};

/// Advance the state by n_steps of size dt. Negative dt integrates backward
/// (both schemes are time-reversible).
void advance(const oscillator_pair& system, phase_state& state, double dt_s,
             std::size_t n_steps, integrator_scheme scheme = integrator_scheme::composed_4th);

struct trajectory_sample {
    double t_s = 0.0;
    double x1_m = 0.0;
    double v1_mps = 0.0;
    double x2_m = 0.0;
    double v2_mps = 0.0;
    double e1_j = 0.0;
    double e2_j = 0.0;
    double e_total_j = 0.0;
};

struct trajectory {
    double dt_s = 0.0; // sample spacing (integration dt times the stride)
    std::vector<trajectory_sample> samples;
};

/// Integrate for `duration_s` recording every `sample_stride`-th step.
/// Requires 0 < dt <= fast_period/100; throws numerical_error if the state
/// leaves the representable range.
trajectory simulate(const oscillator_pair& system, const phase_state& initial,
                    double duration_s, double dt_s, std::size_t sample_stride = 1,
                    integrator_scheme scheme = integrator_scheme::composed_4th);

/// Time of the first minimum of the ion-1 energy envelope: the envelope is
/// the per-fast-period maximum of E1, and the minimum is refined by quadratic
/// interpolation through the three bracketing envelope points. For a weakly
/// coupled symmetric pair started in ion 1 this equals pi / splitting.
/// Throws numerical_error when no exchange minimum is found (e.g. gamma = 0
/// or the trajectory is too short).
double exchange_time(const trajectory& traj, double fast_period_s);

} // namespace ioncoupler
