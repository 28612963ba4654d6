#include "ioncoupler/bem.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Dense>

#include "ioncoupler/constants.hpp"
#include "ioncoupler/errors.hpp"
#include "ioncoupler/quadrature.hpp"

namespace ioncoupler {

double elliptic_k_complement(double kc) {
    if (!(kc >= 0.0) || kc > 1.0)
        throw validation_error("elliptic_k_complement: need 0 <= kc <= 1");
    // kc = 0 is the k = 1 pole; clamp so quadrature nodes that round onto the
    // singular radius contribute a large finite value instead of inf.
    kc = std::max(kc, 1e-300);
    double a = 1.0;
    double b = kc;
    // Quadratic convergence reaches the rounding floor in < 15 iterations;
    // the gap can then stall at ~1 ulp, so the exit test must not demand
    // sub-ulp agreement and the count is capped as a backstop.
    for (int i = 0; i < 64 && a - b > 4.0 * std::numeric_limits<double>::epsilon() * a; ++i) {
        const double mean = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = mean;
    }
    return constants::pi / (a + b);
}

double ring_mesh::ring_area(std::size_t j) const {
    const double a = edges[j];
    const double b = edges[j + 1];
    return constants::pi * (b - a) * (b + a);
}

ring_mesh make_ring_mesh(double disk_radius_m, std::size_t n_rings,
                         double grading_ratio, double width_floor_rel) {
    if (!(disk_radius_m > 0.0))
        throw validation_error("make_ring_mesh: disk radius must be > 0");
    if (!(grading_ratio >= 1.0))
        throw validation_error("make_ring_mesh: grading ratio must be >= 1");

    std::vector<double> width(n_rings);
    double w = 1.0;
    double sum = 0.0;
    for (std::size_t i = 0; i < n_rings; ++i) {
        width[i] = w;
        sum += w;
        w /= grading_ratio;
    }
    const double floor = width_floor_rel * sum; // relative to pre-normalized span
    sum = 0.0;
    for (auto& wi : width)
        sum += (wi = std::max(wi, floor));
    const double scale = disk_radius_m / sum;

    ring_mesh mesh;
    mesh.edges.resize(n_rings + 1);
    mesh.collocation_radii.resize(n_rings);
    mesh.edges[0] = 0.0;
    for (std::size_t i = 0; i < n_rings; ++i)
        mesh.edges[i + 1] = mesh.edges[i] + width[i] * scale;
    mesh.edges[n_rings] = disk_radius_m;
    for (std::size_t i = 0; i < n_rings; ++i) {
        const double a = mesh.edges[i];
        const double b = mesh.edges[i + 1];
        // area centroid (2/3)(b^3 - a^3)/(b^2 - a^2), written cancellation-free
        mesh.collocation_radii[i] = (2.0 / 3.0) * (a * a + a * b + b * b) / (a + b);
    }
    return mesh;
}

double annulus_potential_coefficient(double inner_m, double outer_m, double radius_m,
                                     double quadrature_rel_tol) {
    if (!(outer_m > inner_m) || inner_m < 0.0)
        throw validation_error("annulus_potential_coefficient: need 0 <= inner < outer");
    if (!(radius_m > 0.0))
        throw validation_error("annulus_potential_coefficient: radius must be > 0");
    const double rho = radius_m;
    auto kernel = [rho](double rp) {
        const double kc = std::abs(rp - rho) / (rp + rho);
        return 4.0 * rp * elliptic_k_complement(kc) / (rho + rp);
    };
    // Split at the log singularity when the field radius lies inside the band.
    if (inner_m < rho && rho < outer_m)
        return integrate_adaptive(kernel, inner_m, rho, quadrature_rel_tol)
             + integrate_adaptive(kernel, rho, outer_m, quadrature_rel_tol);
    return integrate_adaptive(kernel, inner_m, outer_m, quadrature_rel_tol);
}

bem_solution solve_grounded_disk(double charge_c, double height_m, double disk_radius_m,
                                 std::size_t n_rings) {
    if (n_rings < 16 || n_rings > 4096)
        throw validation_error("solve_grounded_disk: n_rings must be in [16, 4096]");
    if (!(height_m > 0.0) || !(disk_radius_m > 0.0))
        throw validation_error("solve_grounded_disk: height and disk radius must be > 0");

    bem_solution sol;
    sol.mesh = make_ring_mesh(disk_radius_m, n_rings);
    const auto n = static_cast<Eigen::Index>(n_rings);

    // Collocation system P sigma = rhs: total potential vanishes on the disk.
    // The common 1/(4 pi eps0) prefactor is dropped from both sides.
    Eigen::MatrixXd P(n, n);
    Eigen::VectorXd rhs(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double rc = sol.mesh.collocation_radii[static_cast<std::size_t>(i)];
        for (Eigen::Index j = 0; j < n; ++j)
            P(i, j) = annulus_potential_coefficient(sol.mesh.edges[static_cast<std::size_t>(j)],
                                                    sol.mesh.edges[static_cast<std::size_t>(j) + 1],
                                                    rc);
        rhs(i) = -charge_c / std::sqrt(rc * rc + height_m * height_m);
    }

    Eigen::PartialPivLU<Eigen::MatrixXd> lu(P);
    sol.rcond = lu.rcond();
    if (!(sol.rcond > 1e-12)) {
        std::ostringstream msg;
        msg << "solve_grounded_disk: collocation system ill-conditioned (rcond = "
            << sol.rcond << ")";
        throw numerical_error(msg.str());
    }
    const Eigen::VectorXd sigma = lu.solve(rhs);

    const double rhs_scale = rhs.cwiseAbs().maxCoeff();
    sol.residual = (P * sigma - rhs).cwiseAbs().maxCoeff()
                   / (rhs_scale > 0.0 ? rhs_scale : 1.0);

    sol.density_c_per_m2.resize(n_rings);
    double total = 0.0;
    for (std::size_t j = 0; j < n_rings; ++j) {
        sol.density_c_per_m2[j] = sigma(static_cast<Eigen::Index>(j));
        total += sol.density_c_per_m2[j] * sol.mesh.ring_area(j);
    }
    sol.induced_charge_c = total;
    if (!std::isfinite(sol.induced_charge_c))
        throw numerical_error("solve_grounded_disk: non-finite induced charge");
    return sol;
}

} // namespace ioncoupler
