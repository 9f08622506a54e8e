#pragma once

#include <vector>

#include "gaborfock/log_complex.hpp"

namespace gaborfock {

// Entire functions handled by the library, carried as sums of closed-form
// primitives.  Primitives keep point evaluation exact (biorthogonality and
// kernel pairings collapse to closed-form identities); the certified Taylor
// data produced on demand serves generic inner products.
enum class PrimitiveKind {
    constant,      // scale
    monomial,      // scale * z^degree
    kernel,        // scale * e^{pi conj(point) z}
    sigma_quotient,// scale * e^{pi conj(shift) z} sigma0(z - shift)/(z - point);
                   // point - shift a nonzero lattice point.  shift = 0 is the
                   // plain quotient sigma0(z)/(z - point).
    shifted_sigma, // scale * e^{pi conj(point) z} sigma0(z - point); not in the
                   // Fock space, evaluation only
};

struct Primitive {
    PrimitiveKind kind = PrimitiveKind::constant;
    cplx scale{1.0, 0.0};
    int degree = 0;      // monomial only
    cplx point{0.0, 0.0};// kernel / sigma_quotient / shifted_sigma parameter
    cplx shift{0.0, 0.0};// sigma_quotient only: recentering of the sigma factor
};

// Truncated expansion in the orthonormal basis e_k(z) = z^k sqrt(pi^k/k!),
// with a certified bound on the Fock norm of the discarded tail.
struct TaylorData {
    std::vector<cplx> coeffs;
    double tail_bound = 0.0;
};

class FockFunction {
public:
    FockFunction() = default; // the zero function
    explicit FockFunction(std::vector<Primitive> terms);

    static FockFunction constant(cplx c);
    static FockFunction monomial(int degree, cplx scale = {1.0, 0.0});
    // e_n itself: monomial scaled to unit Fock norm
    static FockFunction normalized_monomial(int degree, cplx scale = {1.0, 0.0});
    static FockFunction kernel(cplx a, cplx scale = {1.0, 0.0});
    // sigma0(z)/(z - root); root must be a nonzero lattice point, else
    // NotALatticePointError
    static FockFunction sigma_quotient(cplx root, cplx scale = {1.0, 0.0});
    // e^{pi conj(a) z} sigma0(z - a)/(z - root), the quotient carried along
    // by the unitary kernel shift; root - a must be a nonzero lattice point.
    // Finite norm and outside-disk bounds transfer from the unshifted
    // quotient; Taylor data is not provided (taylor throws).
    static FockFunction shifted_quotient(cplx a, cplx root,
                                         cplx scale = {1.0, 0.0});
    static FockFunction shifted_sigma(cplx a, cplx scale = {1.0, 0.0});

    cplx evaluate(cplx z) const;
    LogComplex log_evaluate(cplx z) const;

    // Taylor data with combined tail bound <= tolerance.  Degree is chosen
    // adaptively, hard cap 512: TaylorCapError when the cap cannot meet the
    // tolerance, TailUnboundedError when a term carries no Taylor route
    // (shifted_sigma, shifted quotients).
    TaylorData taylor(double tolerance) const;

    // Taylor data truncated at exactly this degree, with the honest tail
    // bound it earns there.  Inner products truncate both factors at one
    // shared degree: the cross terms vanish by orthogonality, so the error
    // is the product of the two tail bounds.
    TaylorData taylor_at(int degree) const;

    // finite upper bound on the Fock norm, +inf for shifted_sigma terms
    double norm_bound() const;

    // upper bound on the Fock norm of F restricted to |z| > radius, summed
    // per primitive (Gaussian-tight for constants, monomials and kernels,
    // O(1/sqrt(R^2)) for sigma quotients, +inf for shifted_sigma); +inf when
    // the radius is too small for a term's bound to apply
    double tail_bound_outside(double radius) const;

    // truncation radius at which the weighted mass outside is negligible
    // relative to norm_bound (used to seed quadrature)
    double suggested_radius() const;

    const std::vector<Primitive>& primitives() const { return terms_; }

    FockFunction& operator+=(const FockFunction& other);
    FockFunction& operator*=(cplx factor);
    friend FockFunction operator+(FockFunction a, const FockFunction& b) {
        a += b;
        return a;
    }
    friend FockFunction operator*(cplx c, FockFunction f) {
        f *= c;
        return f;
    }

private:
    std::vector<Primitive> terms_;
};

} // namespace gaborfock
