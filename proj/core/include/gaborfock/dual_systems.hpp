#pragma once

#include <vector>

#include <Eigen/Core>

#include "gaborfock/fock_function.hpp"
#include "gaborfock/lattice.hpp"

namespace gaborfock {

// Kernel systems {k_lambda : lambda in L} whose index sets are the square
// lattice with small modifications.  Each carries an explicit entire
// generating function vanishing exactly on L, and the biorthogonal family
// comes from dividing out one zero at a time.
enum class GeneratorKind {
    lattice_minus_origin,   // L = (Z+iZ) \ {0}
    shifted_lattice,        // L = (a + Z+iZ) \ {a}
    lattice_perturbation,   // L = (Z+iZ) \ ({0} u removed) u added
};

inline constexpr std::size_t kMaxPerturbation = 8;

struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::lattice_minus_origin;
    cplx base{0.0, 0.0};       // shifted_lattice: the excluded base point a
    std::vector<cplx> removed; // lattice_perturbation: nonzero lattice points
    std::vector<cplx> added;   // lattice_perturbation: off-lattice points

    static GeneratorSpec lattice();
    static GeneratorSpec shifted(cplx a);
    static GeneratorSpec perturbation(std::vector<cplx> removed,
                                      std::vector<cplx> added);
};

// Entire function with simple zeros exactly on the system's index set:
//   lattice_minus_origin: sigma0(z)
//   shifted_lattice:      e^{pi conj(a) z} sigma0(z - a)
//   lattice_perturbation: sigma0(z) * prod(z - added) / prod(z - removed)
// Construction validates the spec: removed points must be distinct nonzero
// lattice points, added points distinct and off the lattice
// (InvalidPerturbationError otherwise), at most kMaxPerturbation of each
// (TooManyPointsError).
class GeneratingFunction {
public:
    explicit GeneratingFunction(GeneratorSpec spec);

    const GeneratorSpec& spec() const { return spec_; }

    cplx evaluate(cplx z) const;
    LogComplex log_evaluate(cplx z) const;

    // membership in the zero set, tolerance 1e-9
    bool is_zero(cplx lambda) const;
    // zeros with |lambda| <= radius
    PointSet zero_set(double radius) const;

    // F'(lambda) at a zero, from the closed form of each factor (never a
    // numerical difference quotient); NotAZeroError off the zero set.  The
    // cplx form overflows near |lambda| ~ 15 since |F'| grows like
    // e^{pi|lambda|^2/2}; the log form is always safe.
    LogComplex log_derivative_at(cplx lambda) const;
    cplx derivative_at(cplx lambda) const;

private:
    GeneratorSpec spec_;
};

// F_lambda(z) = ||k_lambda|| F(z) / ((z - lambda) F'(lambda)), the unique
// element with <k_mu/||k_mu||, F_lambda> = delta_{lambda,mu} over the system.
struct BiorthogonalElement {
    cplx point;
    FockFunction element;
};

// NotAZeroError when lambda is not in the zero set.  For perturbed systems
// the element is expanded in partial fractions over lattice poles; when more
// points were added than removed it falls outside the space and the request
// throws InvalidPerturbationError.
BiorthogonalElement biorth_element(const GeneratingFunction& g, cplx lambda);

// <k_mu / ||k_mu||, e> via log-space point evaluation of the element
cplx biorth_pairing(const BiorthogonalElement& e, cplx mu);

// Expansion coefficient b_lambda = <s, F_lambda> of s against the normalized
// system, so s ~ sum b_lambda k_lambda/||k_lambda||.  When s is a finite
// combination of kernels the pairing collapses to point evaluations
// sum c_a conj(F_lambda(a)); otherwise it goes through disk quadrature at a
// radius where both tail bounds sit below the given tolerance.
cplx coefficient(const FockFunction& s, const GeneratingFunction& g,
                 cplx lambda, double tolerance = 1e-9);

// Gram matrix of normalized kernels over the point set:
//   G_ij = <k_i/||k_i||, k_j/||k_j||> = e^{pi conj(w_i) w_j - pi(|w_i|^2+|w_j|^2)/2}
// Hermitian positive semidefinite with unit diagonal and
// |G_ij| = e^{-pi|w_i - w_j|^2/2}.  TooManyPointsError above 2000 points.
Eigen::MatrixXcd gram_matrix(const PointSet& set);

struct MinSingularValue {
    double value = 0.0;         // smallest singular value, clamped at 0
    bool rank_deficient = false;// smallest eigenvalue within round-off of 0
};

// Smallest singular value of the Gram matrix (for a Hermitian PSD matrix,
// its smallest eigenvalue).  Numerical rank deficiency is reported through
// the flag, not an exception.
MinSingularValue min_singular_value(const Eigen::MatrixXcd& gram);
MinSingularValue min_singular_value(const PointSet& set);

} // namespace gaborfock
