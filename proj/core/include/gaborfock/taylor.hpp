#pragma once

#include <memory>
#include <vector>

#include "gaborfock/log_complex.hpp"

namespace gaborfock {

// Series in this library are stored in the orthonormal monomial basis
//   e_k(z) = z^k sqrt(pi^k / k!),
// so ||F||^2 = sum_k |C_k|^2 and inner products are plain dot products.  The
// raw monomial weights k!/pi^k overflow double near k = 171; normalized
// storage keeps every coefficient O(1).

// log sqrt(k!/pi^k): the factor taking a monomial coefficient to C_k
double normalizer_log(int k);

// sum_k C_k e_k(z), with e_k updated multiplicatively (stable to |z| ~ 20)
cplx eval_normalized(const std::vector<cplx>& c, cplx z);

// Normalized Taylor coefficients of sigma0, entries 0..n (n >= n_max); the
// shared table grows on demand and returned snapshots are immutable.
// Entries with k % 4 != 0 are exactly zero.
//
// Built from Cauchy integrals of the production evaluator on saddle circles
// |z| = sqrt(k/pi): the direct exp-series recurrence carries an O(1)
// cancellation whose eps-level residue, multiplied up by sqrt(k!/pi^k), is
// garbage past k ~ 40; the contour route has no cancellation.
std::shared_ptr<const std::vector<double>> sigma0_taylor(int n_max);

// normalized coefficients of the reproducing kernel k_a(z) = e^{pi conj(a) z}
std::vector<cplx> kernel_taylor(cplx a, int n_max);

// (z - a) * F, normalized; output is one entry longer than the input
std::vector<cplx> times_linear(const std::vector<cplx>& c, cplx a);

// F / (z - w) for a series vanishing at w.  The forward recurrence
// Q_k = (sqrt(k/pi) Q_{k-1} - C_k)/w amplifies noise by sqrt(k/pi)/|w| per
// step, so above the crossover k = pi|w|^2 it is run backwards instead,
// seeded with zero from the top (the seed error contracts downward at the
// reciprocal rate).  The top kDivideTailBuffer entries of c are consumed as
// seed room: output size is c.size() - kDivideTailBuffer.
// Throws NotAZeroError when |F(w)| e^{-pi|w|^2/2} > 1e-8.
std::vector<cplx> divide_by_root(const std::vector<cplx>& c, cplx w);

inline constexpr int kDivideTailBuffer = 60;

std::vector<cplx> widen(const std::vector<double>& c);

} // namespace gaborfock
