#pragma once

#include <array>

#include "qgt/numeric.hpp"
#include "qgt/quadrature.hpp"

namespace qgt::dh {

// Coadjoint orbit of SU(2) of symplectic mass m, sampled on a sphere grid of
// total weight m. The moment map is phi-invariant, so every pairing with a
// fixed Cartan direction reduces to the 1D coordinate u.
struct OrbitSU2 {
    double mass;
    quad::SphereGrid grid;

    OrbitSU2(double m, int order, int n_phi = 0)
        : mass(m), grid(order, m, n_phi) {}
};

struct DHValue {
    complexd value;
    double error_estimate;
};

// Integral of exp(2*pi*i <mu, A> + omega) over the orbit by grid quadrature,
// for A = t * (unit Cartan direction).
DHValue dh_quadrature(const OrbitSU2& orbit, double t);

// sin(m t) / t, with the t -> 0 limit m.
double dh_closed_form(double m, double t);

// Moment of the DH measure: integral of prod_c (2*pi*i<mu, Y_c>)^{alpha_c}
// over the orbit, for the standard su(2) basis (third axis = Cartan).
// Odd moments vanish by symmetry; the result is real for even total degree.
double dh_derivative_moment(const OrbitSU2& orbit, const std::array<int, 3>& alpha);

// DH value on a product orbit, the second factor conjugated when flagged.
DHValue dh_product(double m1, double m2, double t1, double t2, bool conjugate_second,
                   int order = 64);

}  // namespace qgt::dh
