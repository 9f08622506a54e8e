#include "gaborfock/series_verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "gaborfock/errors.hpp"
#include "gaborfock/inner_product.hpp"
#include "gaborfock/quadrature.hpp"
#include "gaborfock/sigma.hpp"

namespace gaborfock {

namespace {

bool kernels_only(const FockFunction& s) {
    for (const auto& t : s.primitives())
        if (t.kind != PrimitiveKind::kernel && t.kind != PrimitiveKind::constant)
            return false;
    return true;
}

// |H(w)|^2 / ||k_w||^2, safe for any magnitude of H(w)
double weighted_sample_sq(const FockFunction& h, cplx w) {
    LogComplex v = h.log_evaluate(w);
    if (v.is_zero()) return 0.0;
    return std::exp(2.0 * v.log_abs - kPi * std::norm(w));
}

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

} // namespace

FormalSeries assemble_series(const FockFunction& s, const GeneratorSpec& spec,
                             double radius, double tolerance) {
    GeneratingFunction g(spec);
    PointSet pts = g.zero_set(radius);
    FormalSeries out;
    out.spec = spec;
    out.points = pts.points();
    out.truncation_radius = radius;
    out.coefficients.reserve(out.points.size());
    for (cplx lambda : out.points)
        out.coefficients.push_back(coefficient(s, g, lambda, tolerance));
    out.source_norm = fock_norm(s, std::min(tolerance, 1e-9)).value.real();
    return out;
}

VerificationReport verify_coeff_bound(const FockFunction& s, double radius,
                                      double tolerance) {
    if (radius <= 4.0)
        throw std::invalid_argument(
            "verify_coeff_bound: radius must exceed 4 so shells can be compared");
    VerificationReport rep;
    rep.name = "coeff-bound";
    rep.truncation_radius = radius;
    rep.budget = 0.25;

    GeneratingFunction g(GeneratorSpec::lattice());
    double nrm = fock_norm(s, std::min(tolerance, 1e-9)).value.real();
    double n2 = nrm * nrm;
    if (n2 == 0.0) {
        rep.values = {0.0};
        rep.pass = true;
        rep.detail = "zero input: all coefficients vanish";
        return rep;
    }

    // cumulative sup of |b_w|^2 / (||S||^2 log(1+|w|)) at dyadic boundaries
    std::vector<double> boundaries;
    for (double b = 4.0; b < radius; b *= 2.0) boundaries.push_back(b);
    boundaries.push_back(radius);

    PointSet pts = PointSet::lattice_disk_punctured(radius);
    double sup = 0.0;
    std::size_t next = 0;
    for (cplx w : pts.points()) {
        double r = std::abs(w);
        while (next < boundaries.size() && r > boundaries[next] + 1e-9) {
            rep.values.push_back(sup);
            ++next;
        }
        if (r < 2.0 - 1e-9) continue;
        cplx b = coefficient(s, g, w, tolerance);
        sup = std::max(sup, std::norm(b) / (n2 * std::log1p(r)));
    }
    while (next < boundaries.size()) {
        rep.values.push_back(sup);
        ++next;
    }
    rep.reference = sup;

    double prev = rep.values[rep.values.size() - 2];
    double last = rep.values.back();
    rep.pass = std::isfinite(last) && last > 0.0 &&
               std::abs(last - prev) <= rep.budget * last;
    rep.detail = "cumulative sup at dyadic radii; last step change " +
                 format_double(last > 0.0 ? std::abs(last - prev) / last : 0.0);
    return rep;
}

VerificationReport verify_sigma_disk_growth(const std::vector<double>& w_values) {
    if (w_values.empty())
        throw std::invalid_argument("verify_sigma_disk_growth: no radii");
    for (double v : w_values)
        if (v < 2.0)
            throw std::invalid_argument("verify_sigma_disk_growth: need |w| >= 2");
    VerificationReport rep;
    rep.name = "sigma-disk-growth";
    rep.reference = 1.6; // measured cap for the ratio, margin over the observed 1.58
    rep.truncation_radius = 2.0 * *std::max_element(w_values.begin(), w_values.end());

    FockFunction s0 = FockFunction::shifted_sigma({0.0, 0.0}); // sigma0 itself
    rep.pass = true;
    std::string parts;
    for (double v : w_values) {
        double integral = disk_norm_sq(s0, 2.0 * v);
        double ratio = integral / std::log1p(v);
        if (!rep.values.empty() && ratio > rep.values.back() + 1e-9) rep.pass = false;
        if (ratio > rep.reference) rep.pass = false;
        rep.values.push_back(ratio);
        if (!parts.empty()) parts += ", ";
        parts += "I(" + format_double(2.0 * v) + ")=" + format_double(integral);
    }
    rep.detail = "disk integrals of |sigma0|^2 e^{-pi|z|^2}: " + parts;
    return rep;
}

VerificationReport verify_sampling_sum(const FockFunction& h, double radius,
                                       double tolerance) {
    VerificationReport rep;
    rep.name = "sampling-sum";
    rep.truncation_radius = radius;
    rep.budget = tolerance;

    double sum_r = 0.0;
    PointSet disk = PointSet::lattice_disk_punctured(radius);
    for (cplx w : disk.points()) sum_r += weighted_sample_sq(h, w);
    double increment = 0.0;
    PointSet ring = PointSet::lattice_annulus(radius, radius + 2.0);
    for (cplx w : ring.points()) increment += weighted_sample_sq(h, w);
    double total = sum_r + increment;

    double nrm = fock_norm(h, 1e-9).value.real();
    double n2 = nrm * nrm;
    double ratio = n2 > 0.0 ? total / n2 : 0.0;

    rep.values = {sum_r, total, increment, ratio};
    rep.reference = total;
    rep.pass = std::isfinite(total) && increment <= tolerance &&
               (n2 > 0.0 || total <= tolerance);
    rep.detail = "sum of |H(w)|^2/||k_w||^2 at R and R+2; ratio to ||H||^2 = " +
                 format_double(ratio);
    return rep;
}

VerificationReport verify_interchange(const GeneratorSpec& spec,
                                      const FockFunction& s, cplx l1, cplx l2,
                                      cplx l3, double radius) {
    GeneratingFunction g(spec);
    const cplx ls[3] = {l1, l2, l3};
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j)
            if (std::abs(ls[i] - ls[j]) <= 1e-9)
                throw std::invalid_argument("verify_interchange: repeated pole");
        if (!g.is_zero(ls[i]))
            throw NotAZeroError("verify_interchange: pole is not a system point");
    }
    double far = radius;
    for (cplx l : ls) far = std::max(far, std::abs(l) + 1.0);
    PointSet zeros = g.zero_set(far);
    for (cplx lambda : zeros.points())
        if (is_lattice_point(lambda, 1e-9))
            throw LatticeCollisionError(
                "verify_interchange: system points meet the summation lattice");

    auto cubic = [&](cplx z) { return (z - l1) * (z - l2) * (z - l3); };

    // lattice-side sum, shells tracked for the tail model
    GeneratingFunction lattice(GeneratorSpec::lattice());
    cplx rhs(0.0, 0.0);
    double last_shell = 0.0;
    PointSet sum_points = PointSet::lattice_disk_punctured(radius);
    for (cplx w : sum_points.points()) {
        cplx b = coefficient(s, lattice, w, 1e-10);
        cplx fw = g.log_evaluate(w).scaled(-0.5 * kPi * std::norm(w), 0.0).value();
        cplx term = fw * std::conj(b) / cubic(w);
        rhs += term;
        if (std::abs(w) > radius - 1.0) last_shell += std::abs(term);
    }
    // terms decay like |w|^{-3} while shells hold ~2 pi |w| points, so the
    // mass beyond R is within ~R times the last shell
    double tail = last_shell * radius;

    cplx lhs(0.0, 0.0);
    double lhs_err = 0.0;
    if (kernels_only(s)) {
        for (const auto& t : s.primitives()) {
            cplx a = (t.kind == PrimitiveKind::kernel) ? t.point : cplx(0.0, 0.0);
            lhs += std::conj(t.scale) * g.log_evaluate(a).value() / cubic(a);
        }
    } else {
        // F(z)/((z-l1)(z-l2)(z-l3)) by partial fractions: one quotient term
        // per pole, paired with S through the quadrature engine
        FockFunction f_over_cubic;
        for (int i = 0; i < 3; ++i) {
            cplx denom(1.0, 0.0);
            for (int j = 0; j < 3; ++j)
                if (j != i) denom *= ls[i] - ls[j];
            if (spec.kind == GeneratorKind::shifted_lattice)
                f_over_cubic += FockFunction::shifted_quotient(spec.base, ls[i],
                                                               1.0 / denom);
            else
                f_over_cubic += FockFunction::sigma_quotient(ls[i], 1.0 / denom);
        }
        double quad_radius = std::max(f_over_cubic.suggested_radius(),
                                      s.suggested_radius());
        InnerResult inner = fock_inner_quadrature(f_over_cubic, s, quad_radius);
        lhs = inner.value;
        lhs_err = inner.error_bound;
    }

    VerificationReport rep;
    rep.name = "interchange";
    rep.truncation_radius = radius;
    double diff = std::abs(lhs - rhs);
    rep.values = {lhs.real(), lhs.imag(), rhs.real(), rhs.imag(), diff, tail};
    rep.budget = tail + 1e-5 * std::abs(lhs) + lhs_err;
    rep.pass = diff <= rep.budget;
    rep.detail = "relative difference " +
                 format_double(std::abs(lhs) > 0.0 ? diff / std::abs(lhs) : diff);
    return rep;
}

VerificationReport verify_w_sigma_norm(cplx w) {
    if (!is_lattice_point(w, 1e-9) || std::abs(w) < 0.5)
        throw NotALatticePointError("verify_w_sigma_norm: need a nonzero lattice point");
    w = round_to_lattice(w);
    double r = std::abs(w);
    FockFunction q = FockFunction::sigma_quotient(w);

    // route 1: polar quadrature; the result brackets the norm from below,
    // with the outside mass inside the reported bound.  The offset keeps the
    // tail bound (which shrinks only like 1/R) a small fraction of the norm
    double quad_radius = r + 16.0;
    InnerResult disk = fock_inner_quadrature(q, q, quad_radius);
    double v_quad = r * (disk.value.real() + 0.5 * disk.error_bound);
    double quad_half_width = 0.5 * r * disk.error_bound;

    // route 2: Taylor sums at N and 2N; the partial sums converge like 1/N,
    // so 2 s_{2N} - s_N removes the leading tail
    auto sum_sq = [](const TaylorData& d) {
        double acc = 0.0;
        for (cplx c : d.coeffs) acc += std::norm(c);
        return acc;
    };
    double s256 = sum_sq(q.taylor_at(256));
    double s512 = sum_sq(q.taylor_at(512));
    double v_taylor = r * (2.0 * s512 - s256);

    VerificationReport rep;
    rep.name = "w-sigma-norm";
    rep.truncation_radius = quad_radius;
    double rel = std::abs(v_taylor - v_quad) / v_taylor;
    rep.values = {v_quad, v_taylor, rel};
    rep.reference = 2.5; // measured band over |w| in {1,2,4,6} is [0.65, 1.94]
    rep.budget = 0.06;
    rep.pass = v_quad >= 0.25 && v_quad <= 2.5 && v_taylor >= 0.25 &&
               v_taylor <= 2.5 && rel <= rep.budget;
    rep.detail = "|w| ||sigma0/(z-w)||^2, quadrature half-width " +
                 format_double(quad_half_width);
    return rep;
}

ReconstructionResult finite_section_reconstruct(const FockFunction& s,
                                                const GeneratorSpec& spec,
                                                double radius,
                                                double norm_tolerance) {
    GeneratingFunction g(spec);
    PointSet pts = g.zero_set(radius);
    if (pts.empty())
        throw std::invalid_argument("finite_section_reconstruct: empty section");

    Eigen::MatrixXcd gram = gram_matrix(pts);
    auto n = gram.rows();
    Eigen::VectorXcd beta(n);
    for (Eigen::Index j = 0; j < n; ++j) {
        cplx w = pts.points()[static_cast<std::size_t>(j)];
        beta(j) = s.log_evaluate(w).scaled(-0.5 * kPi * std::norm(w), 0.0).value();
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("finite_section_reconstruct: eigensolver failed");
    const auto& ev = solver.eigenvalues();
    double ev_min = ev(0);
    double ev_max = ev(n - 1);

    ReconstructionResult out;
    out.points = pts;
    out.ill_conditioned = ev_min <= 1e-10 * ev_max;
    out.condition = ev_min > 0.0 ? ev_max / ev_min
                                 : std::numeric_limits<double>::infinity();

    // exact inverse while the section is numerically nonsingular; Tikhonov
    // regularization once eigenvalues sink into round-off
    double reg = out.ill_conditioned ? 1e-12 * ev_max : 0.0;
    Eigen::VectorXcd beta_t = solver.eigenvectors().adjoint() * beta;
    Eigen::VectorXcd alpha_t(n);
    for (Eigen::Index i = 0; i < n; ++i) alpha_t(i) = beta_t(i) / (ev(i) + reg);
    out.coefficients = solver.eigenvectors() * alpha_t;

    out.source_norm = fock_norm(s, norm_tolerance).value.real();
    double projected = beta.dot(out.coefficients).real();
    double resid_sq = out.source_norm * out.source_norm - projected;
    out.residual = std::sqrt(std::max(0.0, resid_sq));
    return out;
}

} // namespace gaborfock
