#include "gaborfock/dual_systems.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "gaborfock/errors.hpp"
#include "gaborfock/quadrature.hpp"
#include "gaborfock/sigma.hpp"

namespace gaborfock {

namespace {

constexpr double kMatchTol = 1e-9;
constexpr std::size_t kMaxGramPoints = 2000;

bool matches(cplx a, cplx b) { return std::abs(a - b) <= kMatchTol; }

// sigma0(z)/(z - rho) near the removable singularity at a lattice point rho
cplx quotient_local(cplx z, cplx rho) {
    const auto& ev = sigma_evaluator();
    cplx h = z - rho;
    return ev.sigma0_prime(rho) + 0.5 * ev.sigma0_second(rho) * h +
           ev.sigma0_third(rho) * h * h / 6.0;
}

} // namespace

GeneratorSpec GeneratorSpec::lattice() { return {}; }

GeneratorSpec GeneratorSpec::shifted(cplx a) {
    GeneratorSpec s;
    s.kind = GeneratorKind::shifted_lattice;
    s.base = a;
    return s;
}

GeneratorSpec GeneratorSpec::perturbation(std::vector<cplx> removed,
                                          std::vector<cplx> added) {
    GeneratorSpec s;
    s.kind = GeneratorKind::lattice_perturbation;
    s.removed = std::move(removed);
    s.added = std::move(added);
    return s;
}

GeneratingFunction::GeneratingFunction(GeneratorSpec spec) : spec_(std::move(spec)) {
    if (spec_.kind != GeneratorKind::lattice_perturbation) {
        if (!spec_.removed.empty() || !spec_.added.empty())
            throw std::invalid_argument(
                "GeneratingFunction: removed/added apply only to perturbations");
        return;
    }
    if (spec_.removed.size() > kMaxPerturbation || spec_.added.size() > kMaxPerturbation)
        throw TooManyPointsError("GeneratingFunction: more than 8 perturbation points");
    for (std::size_t i = 0; i < spec_.removed.size(); ++i) {
        cplx rho = spec_.removed[i];
        if (!is_lattice_point(rho, kMatchTol) || std::abs(rho) < 0.5)
            throw NotALatticePointError(
                "GeneratingFunction: removed points must be nonzero lattice points");
        spec_.removed[i] = round_to_lattice(rho);
        for (std::size_t j = 0; j < i; ++j)
            if (matches(spec_.removed[i], spec_.removed[j]))
                throw InvalidPerturbationError("GeneratingFunction: duplicate removed point");
    }
    for (std::size_t i = 0; i < spec_.added.size(); ++i) {
        cplx alpha = spec_.added[i];
        if (is_lattice_point(alpha, kMatchTol))
            throw InvalidPerturbationError(
                "GeneratingFunction: added point collides with a lattice zero");
        for (std::size_t j = 0; j < i; ++j)
            if (matches(alpha, spec_.added[j]))
                throw InvalidPerturbationError("GeneratingFunction: duplicate added point");
    }
}

LogComplex GeneratingFunction::log_evaluate(cplx z) const {
    const auto& ev = sigma_evaluator();
    switch (spec_.kind) {
    case GeneratorKind::lattice_minus_origin:
        return ev.log_sigma0(z);
    case GeneratorKind::shifted_lattice:
        return log_exp(kPi * std::conj(spec_.base) * z) * ev.log_sigma0(z - spec_.base);
    case GeneratorKind::lattice_perturbation:
        break;
    }
    // removed points are >= 1 apart, so at most one is close enough to need
    // the local expansion of sigma0(z)/(z - rho)
    LogComplex acc = LogComplex::from_log(0.0, 0.0);
    bool resolved = false;
    for (cplx rho : spec_.removed) {
        if (!resolved && std::abs(z - rho) <= 1e-3) {
            acc = acc * LogComplex::from(quotient_local(z, rho));
            resolved = true;
        } else {
            acc = acc / LogComplex::from(z - rho);
        }
    }
    if (!resolved) acc = acc * ev.log_sigma0(z);
    for (cplx alpha : spec_.added) acc = acc * LogComplex::from(z - alpha);
    return acc;
}

cplx GeneratingFunction::evaluate(cplx z) const { return log_evaluate(z).value(); }

bool GeneratingFunction::is_zero(cplx lambda) const {
    switch (spec_.kind) {
    case GeneratorKind::lattice_minus_origin:
        return is_lattice_point(lambda, kMatchTol) && std::abs(lambda) > 0.5;
    case GeneratorKind::shifted_lattice: {
        cplx mu = lambda - spec_.base;
        return is_lattice_point(mu, kMatchTol) && std::abs(mu) > 0.5;
    }
    case GeneratorKind::lattice_perturbation:
        break;
    }
    for (cplx alpha : spec_.added)
        if (matches(lambda, alpha)) return true;
    if (!is_lattice_point(lambda, kMatchTol) || std::abs(lambda) < 0.5) return false;
    for (cplx rho : spec_.removed)
        if (matches(lambda, rho)) return false;
    return true;
}

PointSet GeneratingFunction::zero_set(double radius) const {
    switch (spec_.kind) {
    case GeneratorKind::lattice_minus_origin:
        return PointSet::lattice_disk_punctured(radius);
    case GeneratorKind::shifted_lattice: {
        std::vector<cplx> pts;
        long bound = static_cast<long>(std::ceil(radius + std::abs(spec_.base)));
        for (long m = -bound; m <= bound; ++m) {
            for (long n = -bound; n <= bound; ++n) {
                if (m == 0 && n == 0) continue;
                cplx lambda = spec_.base +
                              cplx(static_cast<double>(m), static_cast<double>(n));
                if (std::abs(lambda) <= radius) pts.push_back(lambda);
            }
        }
        return PointSet(std::move(pts), radius);
    }
    case GeneratorKind::lattice_perturbation:
        break;
    }
    std::vector<cplx> exclusions = spec_.removed;
    exclusions.push_back(cplx(0.0, 0.0));
    std::vector<cplx> pts = PointSet::lattice_disk(radius, exclusions).points();
    for (cplx alpha : spec_.added)
        if (std::abs(alpha) <= radius) pts.push_back(alpha);
    return PointSet(std::move(pts), radius);
}

LogComplex GeneratingFunction::log_derivative_at(cplx lambda) const {
    if (!is_zero(lambda))
        throw NotAZeroError("log_derivative_at: not a zero of the generating function");
    const auto& ev = sigma_evaluator();
    switch (spec_.kind) {
    case GeneratorKind::lattice_minus_origin: {
        cplx mu = round_to_lattice(lambda);
        return ev.log_sigma_prime(mu) / LogComplex::from(mu);
    }
    case GeneratorKind::shifted_lattice: {
        cplx mu = round_to_lattice(lambda - spec_.base);
        return log_exp(kPi * std::conj(spec_.base) * (spec_.base + mu)) *
               ev.log_sigma_prime(mu) / LogComplex::from(mu);
    }
    case GeneratorKind::lattice_perturbation:
        break;
    }
    for (std::size_t i = 0; i < spec_.added.size(); ++i) {
        if (!matches(lambda, spec_.added[i])) continue;
        cplx alpha = spec_.added[i];
        LogComplex d = ev.log_sigma0(alpha);
        for (std::size_t j = 0; j < spec_.added.size(); ++j)
            if (j != i) d = d * LogComplex::from(alpha - spec_.added[j]);
        for (cplx rho : spec_.removed) d = d / LogComplex::from(alpha - rho);
        return d;
    }
    cplx mu = round_to_lattice(lambda);
    LogComplex d = ev.log_sigma_prime(mu) / LogComplex::from(mu);
    for (cplx alpha : spec_.added) d = d * LogComplex::from(mu - alpha);
    for (cplx rho : spec_.removed) d = d / LogComplex::from(mu - rho);
    return d;
}

cplx GeneratingFunction::derivative_at(cplx lambda) const {
    return log_derivative_at(lambda).value();
}

BiorthogonalElement biorth_element(const GeneratingFunction& g, cplx lambda) {
    if (!g.is_zero(lambda))
        throw NotAZeroError("biorth_element: not a zero of the generating function");
    const GeneratorSpec& spec = g.spec();
    // ||k_lambda|| / F'(lambda); the kernel norm cancels the growth of F', so
    // the combination stays bounded even where either factor overflows
    LogComplex c = LogComplex::from_log(0.5 * kPi * std::norm(lambda), 0.0) /
                   g.log_derivative_at(lambda);
    switch (spec.kind) {
    case GeneratorKind::lattice_minus_origin:
        return {lambda, FockFunction::sigma_quotient(round_to_lattice(lambda), c.value())};
    case GeneratorKind::shifted_lattice: {
        cplx exact = spec.base + round_to_lattice(lambda - spec.base);
        return {lambda, FockFunction::shifted_quotient(spec.base, exact, c.value())};
    }
    case GeneratorKind::lattice_perturbation:
        break;
    }
    if (spec.added.size() > spec.removed.size())
        throw InvalidPerturbationError(
            "biorth_element: more added than removed points leaves the element "
            "outside the space");
    // partial fractions of P(z) / (Q(z) (z - lambda)) over the lattice poles;
    // each pole contributes a sigma-quotient term
    std::vector<Primitive> terms;
    auto push_term = [&](cplx pole, cplx residue) {
        cplx scale = (c * LogComplex::from(residue)).value();
        terms.push_back({PrimitiveKind::sigma_quotient, scale, 0, pole, {}});
    };
    std::size_t added_index = spec.added.size();
    for (std::size_t i = 0; i < spec.added.size(); ++i)
        if (matches(lambda, spec.added[i])) added_index = i;
    if (added_index < spec.added.size()) {
        // (z - lambda) divides P exactly; poles are the removed points
        for (std::size_t j = 0; j < spec.removed.size(); ++j) {
            cplx rho = spec.removed[j];
            cplx residue(1.0, 0.0);
            for (std::size_t i = 0; i < spec.added.size(); ++i)
                if (i != added_index) residue *= rho - spec.added[i];
            for (std::size_t jj = 0; jj < spec.removed.size(); ++jj)
                if (jj != j) residue /= rho - spec.removed[jj];
            push_term(rho, residue);
        }
    } else {
        cplx mu = round_to_lattice(lambda);
        for (std::size_t j = 0; j < spec.removed.size(); ++j) {
            cplx rho = spec.removed[j];
            cplx residue(1.0, 0.0);
            for (cplx alpha : spec.added) residue *= rho - alpha;
            for (std::size_t jj = 0; jj < spec.removed.size(); ++jj)
                if (jj != j) residue /= rho - spec.removed[jj];
            residue /= rho - mu;
            push_term(rho, residue);
        }
        cplx residue(1.0, 0.0);
        for (cplx alpha : spec.added) residue *= mu - alpha;
        for (cplx rho : spec.removed) residue /= mu - rho;
        push_term(mu, residue);
    }
    return {lambda, FockFunction(std::move(terms))};
}

cplx biorth_pairing(const BiorthogonalElement& e, cplx mu) {
    LogComplex v = e.element.log_evaluate(mu);
    return std::conj(v.scaled(-0.5 * kPi * std::norm(mu), 0.0).value());
}

cplx coefficient(const FockFunction& s, const GeneratingFunction& g,
                 cplx lambda, double tolerance) {
    BiorthogonalElement e = biorth_element(g, lambda);
    bool kernels_only = true;
    for (const auto& t : s.primitives())
        if (t.kind != PrimitiveKind::kernel && t.kind != PrimitiveKind::constant)
            kernels_only = false;
    if (kernels_only) {
        // <k_a, F> = conj(F(a)) by the reproducing property, so the pairing
        // is a finite sum of point evaluations (constants are k_0)
        cplx acc(0.0, 0.0);
        for (const auto& t : s.primitives()) {
            cplx a = (t.kind == PrimitiveKind::kernel) ? t.point : cplx(0.0, 0.0);
            acc += t.scale * std::conj(e.element.log_evaluate(a).value());
        }
        return acc;
    }
    // Taylor pairing is out of reach here: dividing the sigma series by
    // (z - lambda) needs ~pi*e*|lambda|^2 terms to certify the root, past
    // the expansion cap for the radii this is called with.  Quadrature
    // evaluates the quotient pointwise and has no such ceiling.
    double radius = std::max(s.suggested_radius(), e.element.suggested_radius());
    double cap = e.element.norm_bound();
    if (std::isfinite(cap))
        while (radius < 40.0 && s.tail_bound_outside(radius) * cap > tolerance)
            radius += 2.0;
    return fock_inner_quadrature(s, e.element, radius).value;
}

Eigen::MatrixXcd gram_matrix(const PointSet& set) {
    const auto& pts = set.points();
    if (pts.size() > kMaxGramPoints)
        throw TooManyPointsError("gram_matrix: more than 2000 points");
    auto n = static_cast<Eigen::Index>(pts.size());
    Eigen::MatrixXcd g(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        g(i, i) = cplx(1.0, 0.0);
        for (Eigen::Index j = i + 1; j < n; ++j) {
            cplx wi = pts[static_cast<std::size_t>(i)];
            cplx wj = pts[static_cast<std::size_t>(j)];
            // exponent has real part -pi|wi - wj|^2/2 <= 0: safe to exponentiate
            cplx expo = kPi * std::conj(wi) * wj -
                        0.5 * kPi * (std::norm(wi) + std::norm(wj));
            g(i, j) = std::exp(expo);
            g(j, i) = std::conj(g(i, j));
        }
    }
    return g;
}

MinSingularValue min_singular_value(const Eigen::MatrixXcd& gram) {
    if (gram.rows() == 0)
        throw std::invalid_argument("min_singular_value: empty matrix");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram,
                                                           Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("min_singular_value: eigensolver failed");
    double lo = solver.eigenvalues()(0);
    double hi = solver.eigenvalues()(gram.rows() - 1);
    MinSingularValue out;
    out.value = std::max(0.0, lo);
    out.rank_deficient = lo <= 1e-12 * std::max(1.0, hi);
    return out;
}

MinSingularValue min_singular_value(const PointSet& set) {
    return min_singular_value(gram_matrix(set));
}

} // namespace gaborfock
