#pragma once

#include <complex>
#include <vector>

#include "gaborfock/lattice.hpp"
#include "gaborfock/log_complex.hpp"

namespace gaborfock {

// Weierstrass sigma for the square lattice Z+iZ,
//   sigma(z) = z * prod_{lam != 0} (1 - z/lam) e^{z/lam + z^2/lam^2}.
//
// Production path: reduce z by the nearest lattice point via the translation
// law sigma(z+mu) = eps(mu) sigma(z) e^{eta(mu)(z+mu/2)}, then evaluate a
// precomputed Taylor polynomial on the fundamental cell |Re|,|Im| <= 1/2.
// All exponent factors are tracked in log form, so |z| up to ~12 is fine in
// double precision.
//
// Two independent routes are kept for validation:
//   * tapered direct product over |lam| <= 2L (log_sigma_product),
//   * a theta-quotient formula (sigma_theta).
class SigmaEvaluator {
public:
    SigmaEvaluator();

    // production route (quasi-periodic reduction)
    LogComplex log_sigma(cplx z) const;
    cplx sigma(cplx z) const { return log_sigma(z).value(); }

    // sigma0(z) = sigma(z)/z with sigma0(0) = 1
    LogComplex log_sigma0(cplx z) const;
    cplx sigma0(cplx z) const { return log_sigma0(z).value(); }

    // sigma'(w) and sigma0'(w) = sigma'(w)/w at lattice points w != 0,
    // from the translation law and sigma'(0) = 1.
    // Throws NotALatticePointError.
    LogComplex log_sigma_prime(cplx w) const;
    cplx sigma_prime(cplx w) const { return log_sigma_prime(w).value(); }
    cplx sigma0_prime(cplx w) const;

    // second/third derivatives at lattice points (used for the local
    // expansion of sigma0(z)/(z-w) near its removable singularity)
    cplx sigma0_second(cplx w) const;
    cplx sigma0_third(cplx w) const;

    // |sigma(z)| e^{-pi|z|^2/2} / dist(z, lattice); extended by its limit
    // value |sigma'(w)| e^{-pi|w|^2/2} on the lattice.
    double growth_ratio(cplx z) const;

    // independent validation routes
    LogComplex log_sigma_product(cplx z, double taper_radius) const;
    cplx sigma_theta(cplx z) const;

    // quasi-period constant for mu = m+in: eta(mu) = m*eta1 + n*eta2.
    // eta1 is derived at construction from the lattice invariants (it comes
    // out equal to pi to machine precision; not hardcoded).
    cplx eta1() const { return eta1_; }
    cplx eta2() const { return eta2_; }
    cplx eta(cplx mu) const;

    // lattice invariant sums G_{4j} = sum' lam^{-4j}, j = 1..count
    const std::vector<double>& invariant_sums() const { return g_; }

    // Taylor coefficients of sigma0 on the cell, in powers of z^4
    const std::vector<double>& cell_coefficients() const { return cell_; }

private:
    LogComplex cell_sigma(cplx z0) const; // sigma on the fundamental cell

    std::vector<double> g_;    // G_{4j}, j >= 1
    std::vector<double> cell_; // sigma0 cell Taylor, coefficient of z^{4k}
    cplx eta1_, eta2_;
};

// process-wide evaluator (construction cost ~ms, immutable afterwards)
const SigmaEvaluator& sigma_evaluator();

// convenience wrappers over the shared evaluator
inline cplx sigma(cplx z) { return sigma_evaluator().sigma(z); }
inline cplx sigma0(cplx z) { return sigma_evaluator().sigma0(z); }
inline double growth_ratio(cplx z) { return sigma_evaluator().growth_ratio(z); }

} // namespace gaborfock
