#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

#include "gaborfock/dual_systems.hpp"
#include "gaborfock/fock_function.hpp"

namespace gaborfock {

// Truncated expansion of a function against a kernel system: the coefficient
// b_w = <S, F_w> for every system point with |w| <= R, plus the source norm
// the coefficients are compared against.
struct FormalSeries {
    GeneratorSpec spec;
    std::vector<cplx> points;       // index set, in PointSet order
    std::vector<cplx> coefficients; // b_w aligned with points
    double source_norm = 0.0;
    double truncation_radius = 0.0;
};

FormalSeries assemble_series(const FockFunction& s, const GeneratorSpec& spec,
                             double radius, double tolerance = 1e-9);

// One verification check: named computed values against a reference or bound,
// a truncation radius, an error budget, and the resulting verdict.
struct VerificationReport {
    std::string name;
    std::vector<double> values;
    double reference = 0.0;
    double truncation_radius = 0.0;
    double budget = 0.0;
    bool pass = false;
    std::string detail;
};

// sup over 2 <= |w| <= R of |b_w|^2 / (||S||^2 log(1+|w|)) for the lattice
// system, tracked cumulatively at dyadic shell boundaries.  Passes when the
// sup is finite and the last dyadic step changes it by at most 25%.
// values: one cumulative sup per shell boundary, ending at R.
VerificationReport verify_coeff_bound(const FockFunction& s, double radius,
                                      double tolerance = 1e-9);

// Disk integrals of |sigma0|^2 against the Gaussian weight over |z| < 2v,
// one per requested v: each ratio to log(1+v) must stay below the measured
// cap 1.6 and the sequence of ratios must not increase.
// values: the ratios, in input order.
VerificationReport verify_sigma_disk_growth(const std::vector<double>& w_values);

// Partial sums of |H(w)|^2 / ||k_w||^2 over nonzero lattice points, at R and
// at R+2.  Passes when the increment is below tolerance; the measured ratio
// of the total to ||H||^2 is recorded.
// values: {sum at R, sum at R+2, increment, measured ratio}.
VerificationReport verify_sampling_sum(const FockFunction& h, double radius,
                                       double tolerance = 1e-6);

// Sum-vs-inner-product interchange for a system off the lattice: compares
//   (F(z)/((z-l1)(z-l2)(z-l3)), S)
// computed directly (closed form when S is a kernel combination, Taylor or
// quadrature engines otherwise) against the lattice sum
//   sum_w F(w) conj(b_w) / ((w-l1)(w-l2)(w-l3) ||k_w||)
// over nonzero lattice w with |w| <= R, where b_w are the lattice-system
// coefficients of S.  LatticeCollisionError when the system's zero set meets
// the lattice (the sum would hit a pole).
// values: {lhs re, lhs im, rhs re, rhs im, |lhs-rhs|, tail estimate}.
VerificationReport verify_interchange(const GeneratorSpec& spec,
                                      const FockFunction& s, cplx l1, cplx l2,
                                      cplx l3, double radius);

// |w| ||sigma0(z)/(z-w)||^2 by two independent routes: polar quadrature with
// an explicit outside-mass window, and Richardson-extrapolated Taylor sums.
// Passes when both land in the measured band [0.25, 2.5] and agree within 6%.
// values: {quadrature value, Taylor value, relative route difference}.
VerificationReport verify_w_sigma_norm(cplx w);

// Least-squares projection onto span{k_w/||k_w|| : w in the system, |w| <= R},
// solved through the eigendecomposition of the Gram matrix with Tikhonov
// regularization 1e-12 * (largest eigenvalue): Gram sections here are
// exponentially ill-conditioned by design, which is reported, not fatal.
struct ReconstructionResult {
    PointSet points;
    Eigen::VectorXcd coefficients; // projection coefficients per point
    double residual = 0.0;         // ||S - reconstruction||
    double source_norm = 0.0;
    double condition = 0.0;        // eigenvalue ratio of the Gram section
    bool ill_conditioned = false;
};

// norm_tolerance controls the certified source-norm computation; the default
// is near machine precision because the residual comes from a difference of
// squares and inherits the norm error under a square root.
ReconstructionResult finite_section_reconstruct(const FockFunction& s,
                                                const GeneratorSpec& spec,
                                                double radius,
                                                double norm_tolerance = 1e-13);

} // namespace gaborfock
