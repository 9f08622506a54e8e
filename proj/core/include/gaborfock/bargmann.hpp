#pragma once

#include <vector>

#include "gaborfock/fock_function.hpp"
#include "gaborfock/hermite.hpp"
#include "gaborfock/inner_product.hpp"
#include "gaborfock/lattice.hpp"

namespace gaborfock {

// Gaussian time-frequency atom t -> e^{2 pi i y t} e^{-pi (t-x)^2};
// squared L^2 norm is 2^{-1/2} for every location
struct GaborAtom {
    PhasePoint location;

    cplx value(double t) const;
};

// closed-form L^2 pairing <a, b> = integral of a conj(b):
//   2^{-1/2} e^{-pi(dx^2+dy^2)/2} e^{i pi (y_a - y_b)(x_a + x_b)}
cplx atom_inner(const GaborAtom& a, const GaborAtom& b);

// The kernel point the transform actually produces for an atom at (x, y) is
// x - i y.  Note this differs from the fixed indexing convention
// phase_to_fock (w = y - i x); the two agree up to the unitary rotation
// w -> -i conj(w), so lattice point sets are carried onto lattice point sets
// either way.
cplx atom_kernel_point(const GaborAtom& a);

// image of an atom: 2^{-1/4} e^{i pi x y} e^{-pi|w|^2/2} k_w with
// w = atom_kernel_point; Fock norm 2^{-1/4}.  Derived from the defining
// integral (the integral form is definitive); the phase factor e^{i pi x y}
// is what makes transformed-atom pairings equal atom pairings exactly.
FockFunction bargmann_atom(const GaborAtom& a);

// image of a Hermite expansion: h_n maps to e_n (unit phase; frozen from
// quadrature of the defining integral at z = 1, see tests)
FockFunction bargmann_transform(const HermiteExpansion& f);

// uniform samples f(t0 + j dt), j = 0..samples.size()-1
struct SampledFunction {
    double t0 = -12.0;
    double dt = 1.0 / 64.0;
    std::vector<cplx> samples;
};

// quadrature of the defining integral
//   (Bf)(z) = 2^{1/4} integral f(t) e^{-pi t^2 + 2 pi t z - pi z^2/2} dt
// on the sample grid.  error_bound = Gaussian tail of the window + trapezoid
// refinement residual; DomainTooSmallError when the tail term alone exceeds
// tolerance.
InnerResult bargmann_pointwise(const SampledFunction& f, cplx z,
                               double tolerance = 1e-8);

// samplers for the two analytic input families (default grid [-12,12], 1/64)
SampledFunction sample_atom(const GaborAtom& a, double t0 = -12.0,
                            double dt = 1.0 / 64.0, int count = 1537);
SampledFunction sample_hermite(const HermiteExpansion& f, double t0 = -12.0,
                               double dt = 1.0 / 64.0, int count = 1537);

} // namespace gaborfock
