#include "qgt/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace qgt::quad {

Rule1D gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
    Rule1D rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    // Newton iteration from the Chebyshev-based initial guess; the rule is
    // symmetric so only half the roots are solved for.
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.nodes[i] = -x;
        rule.weights[i] = w;
        rule.nodes[n - 1 - i] = x;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

Rule1D gauss_legendre(int n, double a, double b) {
    Rule1D rule = gauss_legendre(n);
    const double mid = 0.5 * (a + b), len = 0.5 * (b - a);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = mid + len * rule.nodes[i];
        rule.weights[i] *= len;
    }
    return rule;
}

SphereGrid::SphereGrid(int order, double mass, int n_phi) : order_(order), mass_(mass) {
    if (order < 2) throw std::invalid_argument("SphereGrid: order must be >= 2");
    if (!(mass > 0)) throw std::invalid_argument("SphereGrid: mass must be positive");
    if (n_phi <= 0) n_phi = 2 * order + 1;
    const Rule1D gl = gauss_legendre(order);
    nodes_.reserve(static_cast<std::size_t>(order) * n_phi);
    weights_.reserve(nodes_.capacity());
    // Measure: mass * (du/2) * (dphi/2pi).
    for (int i = 0; i < order; ++i) {
        const double wu = 0.5 * gl.weights[i];
        for (int j = 0; j < n_phi; ++j) {
            nodes_.push_back({gl.nodes[i], 2.0 * kPi * j / n_phi});
            weights_.push_back(mass * wu / n_phi);
        }
    }
}

double SphereGrid::integrate(const std::function<double(double, double)>& f) const {
    std::vector<double> terms(nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        terms[i] = weights_[i] * f(nodes_[i].u, nodes_[i].phi);
    return pairwise_sum(terms);
}

complexd SphereGrid::integrate_c(const std::function<complexd(double, double)>& f) const {
    std::vector<complexd> terms(nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        terms[i] = weights_[i] * f(nodes_[i].u, nodes_[i].phi);
    return pairwise_sum(terms);
}

SphereGrid gauss_legendre_sphere(int order, double mass, int n_phi) {
    return SphereGrid(order, mass, n_phi);
}

HalfLineGrid::HalfLineGrid(int n, double cap) : cap_(cap) {
    if (n < 8) throw std::invalid_argument("HalfLineGrid: need n >= 8");
    if (!(cap > 0)) throw std::invalid_argument("HalfLineGrid: cap must be positive");
    // t = s^2 turns dt/sqrt(t) into 2 ds and removes the endpoint singularity.
    const Rule1D gl = gauss_legendre(n, 0.0, std::sqrt(cap));
    nodes_.resize(n);
    weights_.resize(n);
    for (int i = 0; i < n; ++i) {
        nodes_[i] = gl.nodes[i] * gl.nodes[i];
        weights_[i] = 2.0 * gl.weights[i];
    }
}

double HalfLineGrid::integrate(const std::function<double(double)>& f) const {
    std::vector<double> terms(nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i) terms[i] = weights_[i] * f(nodes_[i]);
    return pairwise_sum(terms);
}

double HalfLineGrid::tail_bound(double c) const { return std::exp(-c * cap_); }

HalfLineGrid half_line_grid(int n, double cap) { return HalfLineGrid(n, cap); }

}  // namespace qgt::quad
