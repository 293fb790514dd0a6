#pragma once

#include <array>
#include <vector>

#include "qgt/dh_orbit.hpp"
#include "qgt/numeric.hpp"

namespace qgt::su2 {

// Dominant weight of SU(2) in units of the fundamental weight; the rho-shift
// adds 1 (the fundamental representation has a = 1).
struct HighestWeight {
    int a;
};

// Cartan algebra element A = diag(i t, -i t) in the defining representation.
struct CartanParameter {
    double t;
};

struct IrrepMatrix {
    HighestWeight weight;
    std::vector<std::vector<complexd>> entries;  // (a+1) x (a+1), row-major

    complexd trace() const;
};

int irrep_dimension(HighestWeight w);

// Weyl character sin((a+1)t)/sin(t); near zeros of sin(t) a series branch
// avoids the cancellation.
complexd character(HighestWeight w, CartanParameter t);

// Action of a unimodular 2x2 matrix on degree-a monomials x^k y^(a-k).
// Functorial: sym_power_matrix(g h) = sym_power_matrix(g) * sym_power_matrix(h).
IrrepMatrix sym_power_matrix(HighestWeight w, const std::array<std::array<complexd, 2>, 2>& g);

// det(sinh(ad A/2) / (ad A/2)) over the ad-eigenvalues {0, +-2it}: (sin t/t)^2.
double j_factor(CartanParameter t);

// Residual of the Kirillov identity with the quadrature DH value as the
// independent side: |Tr e^A - j^{-1/2}(A) * R_{a+1}(A)|.
double kirillov_residual(HighestWeight w, CartanParameter t, int grid_order = 64);

}  // namespace qgt::su2
