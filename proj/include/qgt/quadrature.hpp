#pragma once

#include <functional>
#include <vector>

#include "qgt/numeric.hpp"

namespace qgt::quad {

// Gauss-Legendre rule on [-1, 1].
struct Rule1D {
    std::vector<double> nodes;
    std::vector<double> weights;
};

Rule1D gauss_legendre(int n);

// Same rule mapped to [a, b].
Rule1D gauss_legendre(int n, double a, double b);

// Quadrature nodes on the 2-sphere: Gauss-Legendre in u = cos(theta) times a
// uniform azimuthal grid, with weights rescaled to a prescribed total mass.
struct SphereNode {
    double u;
    double phi;
};

class SphereGrid {
  public:
    SphereGrid(int order, double mass, int n_phi);

    const std::vector<SphereNode>& nodes() const { return nodes_; }
    const std::vector<double>& weights() const { return weights_; }
    double mass() const { return mass_; }
    int order() const { return order_; }

    // Integrates f over the grid measure in a fixed node order.
    double integrate(const std::function<double(double, double)>& f) const;
    complexd integrate_c(const std::function<complexd(double, double)>& f) const;

  private:
    int order_;
    double mass_;
    std::vector<SphereNode> nodes_;
    std::vector<double> weights_;
};

// gauss_legendre_sphere(order, mass): exact for polynomials in u of degree
// <= 2*order - 1 and for azimuthal harmonics up to the phi-grid resolution.
SphereGrid gauss_legendre_sphere(int order, double mass, int n_phi = 0);

// Nodes t_i > 0 and weights for integrals of f(t) dt/sqrt(t), built from the
// substitution t = s^2 and Gauss-Legendre on s in (0, cap].
class HalfLineGrid {
  public:
    HalfLineGrid(int n, double cap);

    const std::vector<double>& nodes() const { return nodes_; }
    const std::vector<double>& weights() const { return weights_; }
    double cap() const { return cap_; }

    double integrate(const std::function<double(double)>& f) const;

    // Truncation tail estimate for integrands bounded by e^{-c t}.
    double tail_bound(double c) const;

  private:
    double cap_;
    std::vector<double> nodes_;
    std::vector<double> weights_;
};

HalfLineGrid half_line_grid(int n, double cap);

}  // namespace qgt::quad
