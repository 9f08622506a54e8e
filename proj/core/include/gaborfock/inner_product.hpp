#pragma once

#include "gaborfock/fock_function.hpp"

namespace gaborfock {

// a computed value together with a certified error bound
struct InnerResult {
    cplx value{0.0, 0.0};
    double error_bound = 0.0;
};

// <F, G>, linear in F and conjugate-linear in G, by Taylor truncation of
// both factors at one shared degree: orthogonality of the e_k kills the
// cross terms, so the error is exactly bounded by the product of the two
// tail bounds.  The degree doubles from 64 until that product meets
// tolerance; TaylorCapError past the cap, TailUnboundedError if either
// factor has no Fock tail.
InnerResult fock_inner_taylor(const FockFunction& f, const FockFunction& g,
                              double tolerance = 1e-10);

// ||F||, square root of the self inner product with the bound propagated
InnerResult fock_norm(const FockFunction& f, double tolerance = 1e-10);

} // namespace gaborfock
