#include "casclab/line_picking.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "casclab/errors.hpp"

namespace casclab {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

// Adaptive Simpson with running absolute-error budget.
template <typename F>
double simpson_step(const F& f, double a, double fa, double b, double fb, double m, double fm,
                    double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double h = b - a;
    const double left = h / 12.0 * (fa + 4.0 * flm + fm);
    const double right = h / 12.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return simpson_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           simpson_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

template <typename F>
double adaptive_simpson(const F& f, double a, double b, double tol) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fb = f(b), fm = f(m);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_step(f, a, fa, b, fb, m, fm, whole, tol, 48);
}

} // namespace

double line_picking_pdf(double t) {
    if (t < 0.0 || t > kSqrt2 + 1e-15)
        throw ValidationError("line-picking density argument outside [0, sqrt(2)]");
    t = std::min(t, kSqrt2);
    if (t <= 1.0) return 2.0 * t * (t * t - 4.0 * t + std::numbers::pi);
    const double r = std::sqrt(t * t - 1.0);
    return 2.0 * t * (4.0 * r - (t * t + 2.0 - std::numbers::pi) - 4.0 * std::atan(r));
}

double laplace_g(double s) {
    if (s < 0.0) throw ValidationError("decay parameter s must be >= 0");
    const auto integrand = [s](double t) { return line_picking_pdf(t) * std::exp(-s * t); };
    return adaptive_simpson(integrand, 0.0, 1.0, 0.5e-9) +
           adaptive_simpson(integrand, 1.0, kSqrt2, 0.5e-9);
}

double waxman_q(std::size_t n, double target_z, double s) {
    if (n < 2) throw ValidationError("Waxman calibration needs n >= 2");
    if (target_z <= 0.0) throw ValidationError("target mean degree must be positive");
    const double g = laplace_g(s);
    const double q = target_z / (static_cast<double>(n - 1) * g);
    if (q > 1.0) {
        const double z_max = static_cast<double>(n - 1) * g;
        throw InfeasibleError("target mean degree " + std::to_string(target_z) +
                              " infeasible for n=" + std::to_string(n) + ", s=" +
                              std::to_string(s) + " (needs q=" + std::to_string(q) +
                              " > 1; maximum achievable z is " + std::to_string(z_max) + ")");
    }
    return q;
}

} // namespace casclab
