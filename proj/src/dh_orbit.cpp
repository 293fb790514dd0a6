#include "qgt/dh_orbit.hpp"

#include <cmath>
#include <stdexcept>

namespace qgt::dh {

DHValue dh_quadrature(const OrbitSU2& orbit, double t) {
    const double m = orbit.mass;
    // Oscillation m*t needs a few nodes per period.
    if (std::abs(m * t) > 2.5 * orbit.grid.order())
        throw std::runtime_error("dh_quadrature: grid too coarse for oscillation m*t");
    const complexd val = orbit.grid.integrate_c([&](double u, double) {
        return std::exp(complexd(0.0, m * t * u));
    });
    const double closed = dh_closed_form(m, t);
    return {val, std::abs(val - closed)};
}

double dh_closed_form(double m, double t) {
    if (std::abs(m * t) < 1e-8) {
        const double x = m * t;
        return m * (1.0 - x * x / 6.0 + x * x * x * x / 120.0);
    }
    return std::sin(m * t) / t;
}

double dh_derivative_moment(const OrbitSU2& orbit, const std::array<int, 3>& alpha) {
    for (int a : alpha)
        if (a < 0 || alpha[0] + alpha[1] + alpha[2] > 8)
            throw std::invalid_argument("dh_derivative_moment: |alpha| must be <= 8");
    const double m = orbit.mass;
    const complexd i_m(0.0, m);
    const complexd val = orbit.grid.integrate_c([&](double u, double phi) {
        const double s = std::sqrt(std::max(0.0, 1.0 - u * u));
        const double n1 = s * std::cos(phi), n2 = s * std::sin(phi), n3 = u;
        complexd term(1.0, 0.0);
        for (int k = 0; k < alpha[0]; ++k) term *= i_m * n1;
        for (int k = 0; k < alpha[1]; ++k) term *= i_m * n2;
        for (int k = 0; k < alpha[2]; ++k) term *= i_m * n3;
        return term;
    });
    return val.real();
}

DHValue dh_product(double m1, double m2, double t1, double t2, bool conjugate_second,
                   int order) {
    // A degenerate factor is a point orbit contributing the constant 1.
    complexd v1(1.0, 0.0), v2(1.0, 0.0);
    double err = 0.0;
    if (m1 > 0) {
        OrbitSU2 o1(m1, order, 1);
        DHValue d1 = dh_quadrature(o1, t1);
        v1 = d1.value;
        err += d1.error_estimate;
    }
    if (m2 > 0) {
        OrbitSU2 o2(m2, order, 1);
        DHValue d2 = dh_quadrature(o2, t2);
        v2 = d2.value;
        err += d2.error_estimate;
    }
    if (conjugate_second) v2 = std::conj(v2);
    return {v1 * v2, err};
}

}  // namespace qgt::dh
