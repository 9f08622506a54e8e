#pragma once

#include <vector>

#include "gaborfock/log_complex.hpp"

namespace gaborfock {

// Orthonormal Hermite basis of L^2(R) adapted to the weight e^{-pi t^2}:
//   h_0(t) = 2^{1/4} e^{-pi t^2},
//   h_{n+1} = (2 sqrt(pi) t h_n - sqrt(n) h_{n-1}) / sqrt(n+1).
// The recurrence is numerically stable (dominant solution).

// h_0(t) .. h_{n_max}(t) in one pass
std::vector<double> hermite_values(int n_max, double t);

double hermite_value(int n, double t);

// finite expansion sum_n coeffs[n] h_n
struct HermiteExpansion {
    std::vector<cplx> coeffs;

    double norm() const; // sqrt(sum |c_n|^2)
    cplx value(double t) const;
};

} // namespace gaborfock
