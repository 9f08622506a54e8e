#pragma once

#include "gaborfock/fock_function.hpp"
#include "gaborfock/inner_product.hpp"

namespace gaborfock {

struct QuadratureSpec {
    double radial_panel = 0.5; // max Gauss-Legendre panel width
    int min_angular = 64;      // trapezoid points on each circle, doubled
    int max_angular = 32768;   //   until converged; GridTooCoarseError past cap
    double target_rel = 1e-9;  // convergence target, relative to the
                               //   integrand's natural scale
};

// integral over the disk |z| <= R of F(z) conj(G(z)) e^{-pi|z|^2} dm(z).
// The error bound combines the observed quadrature refinement residual with
// a Cauchy-Schwarz bound for the mass outside R, computed from norm_bound
// and the in-disk norms; it is +inf when either norm_bound is (the value is
// still the in-disk integral).
InnerResult fock_inner_quadrature(const FockFunction& f, const FockFunction& g,
                                  double radius, const QuadratureSpec& spec = {});

// integral over |z| <= R of |F|^2 e^{-pi|z|^2} dm(z), in-disk only
double disk_norm_sq(const FockFunction& f, double radius,
                    const QuadratureSpec& spec = {});

} // namespace gaborfock
