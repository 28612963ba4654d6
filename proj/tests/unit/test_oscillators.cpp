#include <cmath>

#include "doctest.h"
#include "ioncoupler/constants.hpp"
#include "ioncoupler/errors.hpp"
#include "ioncoupler/oscillators.hpp"

using namespace ioncoupler;

namespace {

// Two identical ions in 1 MHz traps, coupling strength as a fraction of k.
oscillator_pair test_pair(double coupling_fraction) {
    const double m = 6.64e-26;
    const double omega = 2.0 * constants::pi * 1.0e6;
    const double k = m * omega * omega;
    return {m, m, k, k, coupling_fraction * k};
}

} // namespace

TEST_CASE("pair validation rejects unstable and unphysical systems") {
    CHECK_NOTHROW(validate(test_pair(0.01)));
    CHECK_THROWS_AS(validate(test_pair(1.0)), validation_error);
    CHECK_THROWS_AS(validate(test_pair(-1.5)), validation_error);
    auto bad = test_pair(0.01);
    bad.mass2_kg = 0.0;
    CHECK_THROWS_AS(validate(bad), validation_error);
    bad = test_pair(0.01);
    bad.k1_n_per_m = -1e-12;
    CHECK_THROWS_AS(validate(bad), validation_error);
}

TEST_CASE("normal modes of the symmetric pair") {
    const auto sys = test_pair(0.01);
    const auto modes = normal_modes(sys);
    CHECK(modes.omega_plus ==
          doctest::Approx(std::sqrt((sys.k1_n_per_m + sys.coupling_n_per_m) / sys.mass1_kg))
              .epsilon(1e-15));
    CHECK(modes.omega_minus ==
          doctest::Approx(std::sqrt((sys.k1_n_per_m - sys.coupling_n_per_m) / sys.mass1_kg))
              .epsilon(1e-15));
    CHECK(modes.splitting == doctest::Approx(modes.omega_plus - modes.omega_minus));
    // weak coupling: splitting ~ gamma / (m omega)
    const double omega0 = std::sqrt(sys.k1_n_per_m / sys.mass1_kg);
    CHECK(modes.splitting ==
          doctest::Approx(sys.coupling_n_per_m / (sys.mass1_kg * omega0)).epsilon(1e-4));

    auto lopsided = sys;
    lopsided.k2_n_per_m *= 2.0;
    CHECK_THROWS_AS(normal_modes(lopsided), unsupported_configuration);
}

TEST_CASE("energy bookkeeping splits the total without losing the cross term") {
    const auto sys = test_pair(0.05);
    const phase_state s{1e-9, 2e-3, -3e-9, 1e-4};
    const double cross = sys.coupling_n_per_m * s.x1_m * s.x2_m;
    CHECK(energy_total(sys, s) ==
          doctest::Approx(energy_ion1(sys, s) + energy_ion2(sys, s) + cross).epsilon(1e-14));
}

TEST_CASE("energy stays put over many periods") {
    const auto sys = test_pair(0.01);
    const double T = fast_period(sys);
    const double dt = T / 1000.0;
    const phase_state initial{1e-9, 0.0, 0.0, 0.0};

    for (const auto scheme : {integrator_scheme::velocity_verlet, integrator_scheme::composed_4th}) {
        const auto traj = simulate(sys, initial, 5.0 * T, dt, 1, scheme);
        const double e0 = traj.samples.front().e_total_j;
        double worst = 0.0;
        for (const auto& s : traj.samples)
            worst = std::max(worst, std::abs(s.e_total_j - e0) / e0);
        if (scheme == integrator_scheme::velocity_verlet) {
            // bounded oscillation with amplitude (omega dt)^2 / 4
            CHECK(worst < 1.2e-5);
            CHECK(worst > 1e-7);
        } else {
            CHECK(worst < 1e-9);
        }
    }
}

TEST_CASE("integration runs backward to the starting point") {
    const auto sys = test_pair(0.01);
    const double dt = fast_period(sys) / 300.0;
    for (const auto scheme : {integrator_scheme::velocity_verlet, integrator_scheme::composed_4th}) {
        phase_state s{1e-9, 0.0, -2e-10, 1e-4};
        advance(sys, s, dt, 5000, scheme);
        advance(sys, s, -dt, 5000, scheme);
        CHECK(std::abs(s.x1_m - 1e-9) / 1e-9 < 1e-9);
        CHECK(std::abs(s.x2_m + 2e-10) / 1e-9 < 1e-9);
        CHECK(std::abs(s.v1_mps) / (1e-9 * 6.3e6) < 1e-9);
    }
}

TEST_CASE("trajectory sampling respects the stride") {
    const auto sys = test_pair(0.01);
    const double dt = fast_period(sys) / 200.0;
    const auto traj = simulate(sys, {1e-9, 0, 0, 0}, 400.0 * dt, dt, 10);
    CHECK(traj.dt_s == doctest::Approx(10.0 * dt).epsilon(1e-15));
    REQUIRE(traj.samples.size() == 41); // step 0 plus every 10th of 400
    CHECK(traj.samples[0].t_s == 0.0);
    CHECK(traj.samples[1].t_s == doctest::Approx(10.0 * dt).epsilon(1e-12));
}

TEST_CASE("simulate guards its step size and stride") {
    const auto sys = test_pair(0.01);
    const double T = fast_period(sys);
    CHECK_THROWS_AS(simulate(sys, {1e-9, 0, 0, 0}, T, 0.0, 1), validation_error);
    CHECK_THROWS_AS(simulate(sys, {1e-9, 0, 0, 0}, T, T / 10.0, 1), validation_error);
    CHECK_THROWS_AS(simulate(sys, {1e-9, 0, 0, 0}, T, T / 1000.0, 0), validation_error);
    CHECK_THROWS_AS(simulate(sys, {1e-9, 0, 0, 0}, 0.0, T / 1000.0, 1), validation_error);
}

TEST_CASE("a blown-up state is reported as a numerical failure") {
    const auto sys = test_pair(0.01);
    const double dt = fast_period(sys) / 1000.0;
    CHECK_THROWS_AS(simulate(sys, {1e308, 0, 0, 0}, 100.0 * dt, dt, 1), numerical_error);
}

TEST_CASE("the energy returns to ion 1 after a full exchange beat") {
    const auto sys = test_pair(0.01);
    const auto modes = normal_modes(sys);
    const double t_exchange = constants::pi / modes.splitting;
    const double dt = fast_period(sys) / 200.0;

    const auto traj = simulate(sys, {1e-9, 0, 0, 0}, 1.3 * t_exchange, dt, 1);
    const double measured = exchange_time(traj, fast_period(sys));
    CHECK(std::abs(measured - t_exchange) / t_exchange < 0.01);
}

TEST_CASE("exchange detection refuses degenerate inputs") {
    const auto sys = test_pair(0.01);
    const double dt = fast_period(sys) / 200.0;

    // too short to build an envelope
    const auto stub = simulate(sys, {1e-9, 0, 0, 0}, 2.0 * fast_period(sys), dt, 1);
    CHECK_THROWS_AS(exchange_time(stub, fast_period(sys)), validation_error);

    // no coupling: the energy never leaves ion 1
    auto uncoupled = sys;
    uncoupled.coupling_n_per_m = 0.0;
    const auto flat = simulate(uncoupled, {1e-9, 0, 0, 0}, 40.0 * fast_period(sys), dt, 1);
    CHECK_THROWS_AS(exchange_time(flat, fast_period(uncoupled)), numerical_error);
}
