#include <cmath>

#include "doctest.h"
#include "ioncoupler/bem.hpp"
#include "ioncoupler/constants.hpp"
#include "ioncoupler/errors.hpp"
#include "ioncoupler/image_charge.hpp"
#include "ioncoupler/quadrature.hpp"

using namespace ioncoupler;

namespace {
constexpr double q_e = constants::elementary_charge;

// Closed-form induced charge for a point charge at height d on the axis of a
// grounded zero-thickness disk of radius R. Independent of the solver under
// test; used as the external yardstick.
double disk_charge_exact(double q, double d, double R) {
    return -q * (1.0 - (2.0 / constants::pi) * std::atan(d / R));
}
} // namespace

TEST_CASE("elliptic integral against frozen references") {
    CHECK(elliptic_k_complement(1.0) == doctest::Approx(1.5707963267948966).epsilon(1e-15));
    CHECK(elliptic_k_complement(0.5) == doctest::Approx(2.1565156474996432).epsilon(1e-14));
    // log divergence: K ~ ln(4/kc) for small kc
    CHECK(elliptic_k_complement(1e-8) == doctest::Approx(19.806975105072256).epsilon(1e-13));
    CHECK(std::isfinite(elliptic_k_complement(0.0)));
    CHECK_THROWS_AS(elliptic_k_complement(-0.1), validation_error);
    CHECK_THROWS_AS(elliptic_k_complement(1.1), validation_error);
}

TEST_CASE("adaptive quadrature handles smooth and log-singular integrands") {
    const double smooth = integrate_adaptive([](double x) { return std::sin(x); }, 0.0,
                                             constants::pi, 1e-13);
    CHECK(smooth == doctest::Approx(2.0).epsilon(1e-12));
    // integral of ln(1/x) on (0, 1] is exactly 1
    const double singular =
        integrate_adaptive([](double x) { return -std::log(x); }, 0.0, 1.0, 1e-12);
    CHECK(singular == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(integrate_adaptive([](double) { return 1.0; }, 1.0, 1.0) == 0.0);
}

TEST_CASE("ring mesh edges are strictly increasing and span the disk") {
    const double R = 2.5e-4;
    const auto mesh = make_ring_mesh(R, 64);
    REQUIRE(mesh.size() == 64);
    REQUIRE(mesh.edges.size() == 65);
    CHECK(mesh.edges.front() == 0.0);
    CHECK(mesh.edges.back() == R);
    for (std::size_t i = 0; i < 64; ++i) {
        CHECK(mesh.edges[i] < mesh.edges[i + 1]);
        CHECK(mesh.collocation_radii[i] > mesh.edges[i]);
        CHECK(mesh.collocation_radii[i] < mesh.edges[i + 1]);
    }
    // widths shrink toward the rim by the grading ratio
    const double w0 = mesh.edges[1] - mesh.edges[0];
    const double w1 = mesh.edges[2] - mesh.edges[1];
    CHECK(w1 == doctest::Approx(w0 / 1.15).epsilon(1e-12));

    double area = 0.0;
    for (std::size_t j = 0; j < mesh.size(); ++j)
        area += mesh.ring_area(j);
    CHECK(area == doctest::Approx(constants::pi * R * R).epsilon(1e-12));
}

TEST_CASE("deep meshes stay representable thanks to the width floor") {
    const auto mesh = make_ring_mesh(1e-3, 4096);
    for (std::size_t i = 0; i < mesh.size(); ++i)
        CHECK(mesh.edges[i + 1] - mesh.edges[i] > 0.0);
}

TEST_CASE("annulus potential coefficient is additive and has the far-field limit") {
    const double direct = annulus_potential_coefficient(1.0, 1.3, 0.7);
    const double split = annulus_potential_coefficient(1.0, 1.15, 0.7) +
                         annulus_potential_coefficient(1.15, 1.3, 0.7);
    CHECK(direct == doctest::Approx(split).epsilon(1e-10));

    // far away the annulus looks like a point: I -> area / rho
    const double rho = 1000.0;
    const double far = annulus_potential_coefficient(1.0, 1.1, rho);
    const double area = constants::pi * (1.1 * 1.1 - 1.0);
    CHECK(far == doctest::Approx(area / rho).epsilon(1e-3));

    // the in-band singularity is integrable
    CHECK(std::isfinite(annulus_potential_coefficient(1.0, 1.3, 1.1)));
    CHECK_THROWS_AS(annulus_potential_coefficient(1.3, 1.0, 0.5), validation_error);
}

TEST_CASE("disk solve reproduces the closed-form induced charge at R = d") {
    const double d = 1e-4, R = 1e-4;
    const auto sol = solve_grounded_disk(q_e, d, R, 128);
    // exact value is -q/2 at this aspect ratio
    CHECK(sol.induced_charge_c ==
          doctest::Approx(disk_charge_exact(q_e, d, R)).epsilon(1e-4));
    CHECK(sol.residual < 1e-10);
    CHECK(sol.rcond > 1e-12);
    for (const double sigma : sol.density_c_per_m2)
        CHECK(sigma < 0.0); // induced density is everywhere opposite to q
}

TEST_CASE("finite disk collects more charge than the plane window") {
    // The grounded plane's in-window density underestimates the finite disk,
    // which also collects the density that a plane would spread beyond the rim.
    const double d = 1e-4;
    for (const double ratio : {1.0, 2.0, 5.0}) {
        const double R = ratio * d;
        const auto sol = solve_grounded_disk(q_e, d, R, 128);
        const double window = induced_charge_plane_window(q_e, d, R);
        CHECK(std::abs(sol.induced_charge_c) > std::abs(window));
        // and never more than the full image charge
        CHECK(std::abs(sol.induced_charge_c) < q_e);
    }
}

TEST_CASE("disk solve input contract") {
    CHECK_THROWS_AS(solve_grounded_disk(q_e, 1e-4, 1e-4, 8), validation_error);
    CHECK_THROWS_AS(solve_grounded_disk(q_e, 1e-4, 1e-4, 8192), validation_error);
    CHECK_THROWS_AS(solve_grounded_disk(q_e, 0.0, 1e-4, 64), validation_error);
    CHECK_THROWS_AS(solve_grounded_disk(q_e, 1e-4, -1e-4, 64), validation_error);
}
