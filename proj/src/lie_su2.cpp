#include "qgt/lie_su2.hpp"

#include <cmath>
#include <stdexcept>

namespace qgt::su2 {

namespace {

// Binomial coefficients as doubles; a stays at desk scale.
double binom(int n, int k) {
    double acc = 1.0;
    for (int i = 0; i < k; ++i) acc = acc * (n - i) / (i + 1);
    return acc;
}

complexd cpow_int(complexd z, int k) {
    complexd acc(1.0, 0.0);
    for (int i = 0; i < k; ++i) acc *= z;
    return acc;
}

}  // namespace

complexd IrrepMatrix::trace() const {
    complexd acc(0.0, 0.0);
    for (std::size_t i = 0; i < entries.size(); ++i) acc += entries[i][i];
    return acc;
}

int irrep_dimension(HighestWeight w) {
    if (w.a < 0) throw std::invalid_argument("irrep_dimension: weight must be >= 0");
    return w.a + 1;
}

complexd character(HighestWeight w, CartanParameter tp) {
    const int a = w.a;
    const double t = tp.t;
    const double s = std::sin(t);
    if (std::abs(s) < 1e-6) {
        // Series branch around the nearest zero t0 = k*pi:
        // chi = (-1)^(a k) * sin((a+1)d)/sin(d) for d = t - k*pi.
        const long long k = std::llround(t / kPi);
        const double d = t - static_cast<double>(k) * kPi;
        const double n = a + 1;
        double ratio;
        if (std::abs(d) < 1e-4) {
            const double d2 = d * d;
            ratio = n * (1.0 - (n * n - 1.0) * d2 / 6.0 +
                         (n * n - 1.0) * (3.0 * n * n - 7.0) * d2 * d2 / 360.0);
        } else {
            ratio = std::sin(n * d) / std::sin(d);
        }
        const double sign = ((a * k) % 2 == 0) ? 1.0 : -1.0;
        return complexd(sign * ratio, 0.0);
    }
    return complexd(std::sin((a + 1) * t) / s, 0.0);
}

IrrepMatrix sym_power_matrix(HighestWeight w,
                             const std::array<std::array<complexd, 2>, 2>& g) {
    const int a = w.a;
    const complexd det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
    if (std::abs(det - complexd(1.0, 0.0)) > 1e-12)
        throw std::invalid_argument("sym_power_matrix: matrix is not unimodular");

    IrrepMatrix out;
    out.weight = w;
    out.entries.assign(a + 1, std::vector<complexd>(a + 1, complexd(0.0, 0.0)));

    // Monomial x^k y^(a-k) maps to ((x,y) g)_1^k ((x,y) g)_2^(a-k); expand the
    // two binomials and convolve.
    for (int k = 0; k <= a; ++k) {
        // (g00 x + g10 y)^k
        std::vector<complexd> first(k + 1);
        for (int r = 0; r <= k; ++r)
            first[r] = binom(k, r) * cpow_int(g[0][0], r) * cpow_int(g[1][0], k - r);
        // (g01 x + g11 y)^(a-k)
        std::vector<complexd> second(a - k + 1);
        for (int r = 0; r <= a - k; ++r)
            second[r] =
                binom(a - k, r) * cpow_int(g[0][1], r) * cpow_int(g[1][1], a - k - r);
        for (int r = 0; r <= k; ++r)
            for (int q = 0; q <= a - k; ++q) {
                const int xdeg = r + q;  // coefficient of x^xdeg y^(a-xdeg)
                out.entries[xdeg][k] += first[r] * second[q];
            }
    }
    return out;
}

double j_factor(CartanParameter tp) {
    const double t = tp.t;
    if (std::abs(t) < 1e-6) {
        const double t2 = t * t;
        const double s = 1.0 - t2 / 6.0 + t2 * t2 / 120.0;
        return s * s;
    }
    const double s = std::sin(t) / t;
    return s * s;
}

double kirillov_residual(HighestWeight w, CartanParameter tp, int grid_order) {
    const double jt = j_factor(tp);
    if (jt <= 0)
        throw std::domain_error("kirillov_residual: j(A) vanishes; shift t off sin(t)=0");
    const dh::OrbitSU2 orbit(static_cast<double>(w.a + 1), grid_order, 1);
    const dh::DHValue r = dh_quadrature(orbit, tp.t);
    const complexd rhs = r.value / std::sqrt(jt);
    return std::abs(character(w, tp) - rhs);
}

}  // namespace qgt::su2
