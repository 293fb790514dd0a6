#include "qgt/numeric.hpp"

#include <algorithm>
#include <stdexcept>

namespace qgt {

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("fit_line: need >= 2 matched samples");
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx, dy = y[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    LineFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    f.r2 = (syy > 0) ? (sxy * sxy) / (sxx * syy) : 1.0;
    return f;
}

ExpansionFit fit_expansion(std::vector<int> p_list, std::vector<double> residuals,
                           double floor) {
    if (p_list.size() != residuals.size())
        throw std::invalid_argument("fit_expansion: size mismatch");
    ExpansionFit fit;
    fit.p_list = std::move(p_list);
    fit.residuals = std::move(residuals);
    std::vector<double> lx, ly;
    lx.reserve(fit.p_list.size());
    ly.reserve(fit.p_list.size());
    for (std::size_t i = 0; i < fit.p_list.size(); ++i) {
        lx.push_back(std::log(static_cast<double>(fit.p_list[i])));
        ly.push_back(std::log(std::max(fit.residuals[i], floor)));
    }
    const LineFit line = fit_line(lx, ly);
    fit.slope = line.slope;
    fit.intercept = line.intercept;
    fit.r2 = line.r2;
    return fit;
}

}  // namespace qgt
