#include "gaborfock/hermite.hpp"

#include "gaborfock/log_complex.hpp"

#include <cmath>
#include <stdexcept>

namespace gaborfock {

std::vector<double> hermite_values(int n_max, double t) {
    if (n_max < 0) throw std::invalid_argument("hermite_values: n_max < 0");
    std::vector<double> h(static_cast<std::size_t>(n_max) + 1);
    h[0] = std::pow(2.0, 0.25) * std::exp(-kPi * t * t);
    if (n_max == 0) return h;
    h[1] = 2.0 * std::sqrt(kPi) * t * h[0];
    for (int n = 1; n < n_max; ++n)
        h[static_cast<std::size_t>(n) + 1] =
            (2.0 * std::sqrt(kPi) * t * h[static_cast<std::size_t>(n)] -
             std::sqrt(static_cast<double>(n)) * h[static_cast<std::size_t>(n) - 1]) /
            std::sqrt(static_cast<double>(n) + 1.0);
    return h;
}

double hermite_value(int n, double t) { return hermite_values(n, t).back(); }

double HermiteExpansion::norm() const {
    double acc = 0.0;
    for (const auto& c : coeffs) acc += std::norm(c);
    return std::sqrt(acc);
}

cplx HermiteExpansion::value(double t) const {
    if (coeffs.empty()) return {0.0, 0.0};
    auto h = hermite_values(static_cast<int>(coeffs.size()) - 1, t);
    cplx acc(0.0, 0.0);
    for (std::size_t n = 0; n < coeffs.size(); ++n) acc += coeffs[n] * h[n];
    return acc;
}

} // namespace gaborfock
