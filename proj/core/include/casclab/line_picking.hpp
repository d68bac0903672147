#pragma once

#include <cstddef>

namespace casclab {

/// Density of the distance between two independent uniform points in the
/// unit square (square line-picking), supported on [0, sqrt(2)].
double line_picking_pdf(double t);

/// Laplace transform G(s) = E[exp(-s D)] of the line-picking density,
/// via adaptive quadrature split at the density's kink t = 1.
/// Absolute tolerance 1e-9. Strictly decreasing in s; G(0) = 1.
double laplace_g(double s);

/// Waxman attachment probability q = z / ((n-1) G(s)) for a target mean
/// degree. Throws InfeasibleError when the target needs q > 1, naming the
/// maximum achievable mean degree.
double waxman_q(std::size_t n, double target_z, double s);

} // namespace casclab
