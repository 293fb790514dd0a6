#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qgt {

using complexd = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

// Pairwise summation in a fixed traversal order. Used for all quadrature
// reductions so repeated runs produce bit-identical output.
template <typename T>
T pairwise_sum(std::span<const T> xs) {
    const std::size_t n = xs.size();
    if (n == 0) return T{};
    if (n <= 8) {
        T acc = xs[0];
        for (std::size_t i = 1; i < n; ++i) acc += xs[i];
        return acc;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(xs.subspan(0, half)) + pairwise_sum(xs.subspan(half));
}

template <typename T>
T pairwise_sum(const std::vector<T>& xs) {
    return pairwise_sum(std::span<const T>(xs));
}

// Least-squares line y = slope*x + intercept with coefficient of determination.
struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
};

LineFit fit_line(std::span<const double> x, std::span<const double> y);

// Residual sequence over p with the fitted log-log decay rate.
struct ExpansionFit {
    std::vector<int> p_list;
    std::vector<double> residuals;
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;

    bool all_below(double tol) const {
        for (double r : residuals)
            if (!(r < tol)) return false;
        return true;
    }
};

// Fits log(residual) against log(p). Residuals at or below `floor` are
// clamped so identically-zero sequences stay finite; callers assert on
// all_below() for those instead of reading the slope.
ExpansionFit fit_expansion(std::vector<int> p_list, std::vector<double> residuals,
                           double floor = 1e-300);

}  // namespace qgt
