#pragma once

#include <cstddef>
#include <vector>

namespace ioncoupler {

/// Complete elliptic integral of the first kind K(k), parameterized by the
/// COMPLEMENTARY modulus kc = sqrt(1 - k^2), computed with the
/// arithmetic-geometric mean: K = pi / (2 agm(1, kc)). Taking kc directly
/// avoids the catastrophic cancellation in 1 - k^2 near the kernel
/// singularity. Diverges like ln(4/kc) as kc -> 0.
double elliptic_k_complement(double kc);

/// Annular-ring discretization of a disk, graded geometrically toward the rim.
struct ring_mesh {
    std::vector<double> edges;             // n+1 radii [m], edges[0] = 0
    std::vector<double> collocation_radii; // n area-centroid radii [m]

    std::size_t size() const { return collocation_radii.size(); }
    double ring_area(std::size_t j) const; // [m^2]
};

/// Build a mesh whose ring widths shrink geometrically toward the rim.
/// Widths are floored at width_floor_rel * radius (then renormalized) so deep
/// meshes stay representable in double precision.
ring_mesh make_ring_mesh(double disk_radius_m, std::size_t n_rings,
                         double grading_ratio = 1.15, double width_floor_rel = 1e-9);

/// In-plane potential coefficient of a uniform annulus [a, b]:
///   I(rho) = integral_a^b  4 rho' K(kc(rho', rho)) / (rho + rho') drho'
/// with kc = |rho' - rho| / (rho' + rho). The physical potential is
/// sigma * I / (4 pi eps0); the prefactor cancels against the point-charge
/// term in the collocation system, so it is omitted here.
double annulus_potential_coefficient(double inner_m, double outer_m, double radius_m,
                                     double quadrature_rel_tol = 1e-12);

struct bem_solution {
    double induced_charge_c = 0.0;     // total charge on the disk [C]
    std::vector<double> density_c_per_m2; // per-ring surface density [C/m^2]
    ring_mesh mesh;
    double residual = 0.0; // max |P sigma - rhs| / max |rhs|
    double rcond = 0.0;    // reciprocal condition estimate of the system
};

/// Boundary-element solution for a point charge `charge_c` at height
/// `height_m` on the axis of a grounded zero-thickness disk of radius
/// `disk_radius_m`. Piecewise-constant density per ring, collocation at ring
/// area centroids, dense LU solve.
///
/// Throws numerical_error when the collocation system is ill-conditioned.
/// Requires 16 <= n_rings <= 4096.
bem_solution solve_grounded_disk(double charge_c, double height_m, double disk_radius_m,
                                 std::size_t n_rings);

} // namespace ioncoupler
